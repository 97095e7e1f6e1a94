#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "sweepmap/lattice.hpp"
#include "sweepmap/ranks.hpp"
#include "sweepmap/sweep.hpp"

using namespace sweepmap;

namespace {

std::vector<Frame> frames_up_to(int max_sum) {
    std::vector<Frame> frames;
    for (int s = 2; s <= max_sum; ++s) {
        for (int n = 1; n < s; ++n) {
            if (std::gcd(s - n, n) == 1) frames.push_back(make_frame(s - n, n));
        }
    }
    return frames;
}

// every {E,N}-word with the right counts
std::vector<std::string> all_en_words(const Frame& f) {
    std::string word(f.m, 'E');
    word.append(f.n, 'N');
    std::sort(word.begin(), word.end());
    std::vector<std::string> out;
    do {
        out.push_back(word);
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

}  // namespace

TEST_CASE("phi sorts steps by starting rank") {
    Frame f115 = make_frame(11, 5);
    PathWord d = parse_path("ududdudddududddd", f115);
    CHECK(to_string(phi(d)) == "uuduududdddddddd");

    Frame f73 = make_frame(7, 3);
    PathWord staircase = path_from_rank_set(base_rank_set(f73));
    CHECK(to_string(phi(staircase)) == "uuuddddddd");

    CHECK(to_string(phi(parse_path("uuddd", make_frame(3, 2)))) == "ududd");
}

TEST_CASE("phi lands in the Dyck set and matches the SW word") {
    for (const Frame& f : frames_up_to(13)) {
        for (const PathWord& p : enumerate_dyck(f)) {
            PathWord swept = phi(p);
            CHECK(is_dyck(swept));
            CHECK(to_string(swept) == to_ud_string(sw_word(rank_set(p))));
        }
    }
}

TEST_CASE("rank compatibility certificate") {
    Frame f115 = make_frame(11, 5);
    SWWord sigma = make_sw_word(f115, "SSWSSWSWWWWWWWWW");
    RankSet r115 = rank_set(parse_path("ududdudddududddd", f115));
    CHECK(is_compatible_ranks(sigma, r115));

    Frame f73 = make_frame(7, 3);
    CHECK(is_compatible_ranks(base_sw_word(f73), base_rank_set(f73)));

    // the base word is compatible with no other rank set of the frame
    for (const PathWord& p : enumerate_dyck(f73)) {
        RankSet rs = rank_set(p);
        if (rs.is_base()) continue;
        CHECK_FALSE(is_compatible_ranks(base_sw_word(f73), rs));
    }

    CHECK_THROWS_WITH_AS(is_compatible_ranks(base_sw_word(f73), base_rank_set(make_frame(5, 3))),
                         doctest::Contains("LengthMismatch"), sweep_error);
}

TEST_CASE("every path is compatible with exactly one enumerated rank set") {
    for (const Frame& f : frames_up_to(13)) {
        std::vector<PathWord> all = enumerate_dyck(f);
        for (const PathWord& p : all) {
            SWWord sigma = sw_word(rank_set(p));
            int hits = 0;
            for (const PathWord& q : all) {
                hits += is_compatible_ranks(sigma, rank_set(q));
            }
            CHECK(hits == 1);
        }
    }
}

TEST_CASE("graph of the two letter words") {
    RankSet fig = rank_set_from_sorted(make_frame(8, 5),
                                       {0, 5, 8, 10, 11, 12, 14, 15, 16, 17, 19, 20, 22});
    SWWord sigma = sw_word(fig);
    ENWord rho = en_word(fig);
    CompatibilityGraph g = build_graph(sigma, rho);
    CHECK(g.single_cycle);
    GraphRanks ranks = ranks_from_graph(g, sigma, rho);
    REQUIRE(ranks.status == GraphRankStatus::ok);
    CHECK(ranks.ranks->sorted == fig.sorted);

    Frame f73 = make_frame(7, 3);
    SWWord base_sigma = base_sw_word(f73);
    ENWord base_rho = en_word(base_rank_set(f73));
    CHECK(base_rho.letters == "EEEEEEENNN");
    CompatibilityGraph gb = build_graph(base_sigma, base_rho);
    CHECK(gb.single_cycle);
    GraphRanks base_ranks = ranks_from_graph(gb, base_sigma, base_rho);
    REQUIRE(base_ranks.status == GraphRankStatus::ok);
    CHECK(base_ranks.ranks->is_base());
}

TEST_CASE("graph round-trip across enumerations") {
    for (const Frame& f : frames_up_to(10)) {
        for (const PathWord& p : enumerate_dyck(f)) {
            RankSet rs = rank_set(p);
            SWWord sigma = sw_word(rs);
            ENWord rho = en_word(rs);
            GraphRanks out = ranks_from_graph(build_graph(sigma, rho), sigma, rho);
            REQUIRE(out.status == GraphRankStatus::ok);
            CHECK(out.ranks->sorted == rs.sorted);
        }
    }
}

TEST_CASE("only the genuine EN word is compatible") {
    Frame f32 = make_frame(3, 2);
    for (const PathWord& p : enumerate_dyck(f32)) {
        RankSet rs = rank_set(p);
        SWWord sigma = sw_word(rs);
        std::string genuine = en_word(rs).letters;
        for (const std::string& candidate : all_en_words(f32)) {
            ENWord rho = make_en_word(f32, candidate);
            GraphRanks out = ranks_from_graph(build_graph(sigma, rho), sigma, rho);
            if (candidate == genuine) {
                CHECK(out.status == GraphRankStatus::ok);
            } else {
                CHECK(out.status != GraphRankStatus::ok);
            }
        }
    }
    // a mismatched pair from the (8,5) example
    Frame f85 = make_frame(8, 5);
    RankSet fig = rank_set_from_sorted(f85, {0, 5, 8, 10, 11, 12, 14, 15, 16, 17, 19, 20, 22});
    ENWord trivial_rho = en_word(base_rank_set(f85));
    GraphRanks out = ranks_from_graph(build_graph(sw_word(fig), trivial_rho), sw_word(fig),
                                      trivial_rho);
    CHECK(out.status != GraphRankStatus::ok);
}

TEST_CASE("phi is bijective on small frames") {
    for (const Frame& f : frames_up_to(10)) {
        std::vector<std::string> images;
        for (const PathWord& p : enumerate_dyck(f)) images.push_back(to_string(phi(p)));
        std::sort(images.begin(), images.end());
        CHECK(std::adjacent_find(images.begin(), images.end()) == images.end());
        CHECK(images.size() == count_dyck(f));
    }
}

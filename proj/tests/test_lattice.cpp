#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "sweepmap/lattice.hpp"
#include "sweepmap/ranks.hpp"

using namespace sweepmap;

namespace {

// every word with the right step counts, filtered by is_dyck; the slow
// route the fast enumerator is checked against
std::vector<std::string> filtered_dyck_words(const Frame& f) {
    std::string word(f.n, 'u');
    word.append(f.m, 'd');
    std::sort(word.begin(), word.end());
    std::vector<std::string> out;
    do {
        if (is_dyck(parse_path(word, f))) out.push_back(word);
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

std::vector<Frame> frames_up_to(int max_sum) {
    std::vector<Frame> frames;
    for (int s = 2; s <= max_sum; ++s) {
        for (int n = 1; n < s; ++n) {
            int m = s - n;
            if (std::gcd(m, n) == 1) frames.push_back(make_frame(m, n));
        }
    }
    return frames;
}

}  // namespace

TEST_CASE("make_frame computes the division by n") {
    Frame f = make_frame(11, 5);
    CHECK(f.m == 11);
    CHECK(f.n == 5);
    CHECK(f.k == 2);
    CHECK(f.d == 1);

    f = make_frame(8, 5);
    CHECK(f.k == 1);
    CHECK(f.d == 3);

    CHECK_THROWS_WITH_AS(make_frame(6, 4), doctest::Contains("NonCoprime"), sweep_error);
    CHECK_THROWS_AS(make_frame(0, 3), sweep_error);
    CHECK_THROWS_AS(make_frame(3, -1), sweep_error);
}

TEST_CASE("fuss detection") {
    CHECK(is_fuss(make_frame(11, 5)));   // 11 = 2*5 + 1
    CHECK(is_fuss(make_frame(9, 5)));    // 9 = 5 + 4 = n - 1 family
    CHECK(is_fuss(make_frame(4, 5)));    // m = n - 1
    CHECK(is_fuss(make_frame(1, 7)));
    CHECK(is_fuss(make_frame(7, 1)));
    CHECK_FALSE(is_fuss(make_frame(8, 5)));
    CHECK_FALSE(is_fuss(make_frame(3, 7)));
}

TEST_CASE("parse_path accepts aliases and rejects bad input") {
    Frame f = make_frame(3, 2);
    PathWord p = parse_path("ududd", f);
    CHECK(to_string(p) == "ududd");
    CHECK(parse_path("NENEE", f) == p);
    CHECK(parse_path("UDUDD", f) == p);
    CHECK_THROWS_WITH_AS(parse_path("uud", f), doctest::Contains("WrongStepCounts"),
                         sweep_error);
    CHECK_THROWS_WITH_AS(parse_path("uxudd", f), doctest::Contains("BadAlphabet"),
                         sweep_error);
}

TEST_CASE("is_dyck matches the rank walk criterion") {
    Frame f32 = make_frame(3, 2);
    CHECK(is_dyck(parse_path("ududd", f32)));
    CHECK_FALSE(is_dyck(parse_path("duudd", f32)));
    Frame f115 = make_frame(11, 5);
    CHECK(is_dyck(parse_path("ududdudddududddd", f115)));
}

TEST_CASE("area by squares") {
    CHECK(area_by_squares(parse_path("ududd", make_frame(3, 2))) == 0);
    CHECK(area_by_squares(parse_path("uuddd", make_frame(3, 2))) == 1);
    // the (8,5) running example with area 7
    CHECK(area_by_squares(parse_path("uudududdudddd", make_frame(8, 5))) == 7);
    CHECK_THROWS_WITH_AS(area_by_squares(parse_path("duudd", make_frame(3, 2))),
                         doctest::Contains("NotDyck"), sweep_error);
}

TEST_CASE("transpose reverses, swaps, and keeps the rank set") {
    PathWord p = parse_path("ududd", make_frame(3, 2));
    PathWord t = transpose(p);
    CHECK(to_string(t) == "uudud");
    CHECK(t.frame == make_frame(2, 3));
    CHECK(transpose(parse_path("udd", make_frame(2, 1))) ==
          parse_path("uud", make_frame(1, 2)));

    for (const Frame& f : frames_up_to(9)) {
        for (const PathWord& q : enumerate_dyck(f)) {
            PathWord tq = transpose(q);
            CHECK(is_dyck(tq));
            CHECK(transpose(tq) == q);
            CHECK(rank_set(tq).sorted == rank_set(q).sorted);
        }
    }
}

TEST_CASE("enumeration is lexicographic, complete, and counted") {
    Frame f32 = make_frame(3, 2);
    std::vector<PathWord> paths = enumerate_dyck(f32);
    REQUIRE(paths.size() == 2);
    CHECK(to_string(paths[0]) == "uuddd");
    CHECK(to_string(paths[1]) == "ududd");

    std::vector<PathWord> single = enumerate_dyck(make_frame(2, 1));
    REQUIRE(single.size() == 1);
    CHECK(to_string(single.front()) == "udd");
    CHECK(enumerate_dyck(make_frame(5, 3)).size() == 7);

    CHECK(count_dyck(f32) == 2);
    CHECK(count_dyck(make_frame(8, 5)) == 99);
    CHECK(count_dyck(make_frame(11, 5)) == 273);

    for (const Frame& f : frames_up_to(13)) {
        std::vector<PathWord> fast = enumerate_dyck(f);
        std::vector<std::string> slow = filtered_dyck_words(f);
        REQUIRE(fast.size() == slow.size());
        REQUIRE(fast.size() == count_dyck(f));
        std::vector<std::string> fast_words;
        for (const PathWord& p : fast) fast_words.push_back(to_string(p));
        std::vector<std::string> sorted_fast = fast_words;
        std::sort(sorted_fast.begin(), sorted_fast.end());
        std::sort(slow.begin(), slow.end());
        CHECK(sorted_fast == slow);
        // lexicographic with u < d means 'u' sorts before 'd' in the
        // enumeration's own order even though ASCII disagrees
        for (std::size_t i = 1; i < fast_words.size(); ++i) {
            const std::string& a = fast_words[i - 1];
            const std::string& b = fast_words[i];
            std::size_t j = 0;
            while (j < a.size() && a[j] == b[j]) ++j;
            REQUIRE(j < a.size());
            CHECK(a[j] == 'u');
            CHECK(b[j] == 'd');
        }
    }
}

TEST_CASE("area bounds are attained across the enumeration") {
    for (const Frame& f : frames_up_to(9)) {
        long long lo = max_area(f), hi = -1;
        for (const PathWord& p : enumerate_dyck(f)) {
            long long a = area_by_squares(p);
            lo = std::min(lo, a);
            hi = std::max(hi, a);
            CHECK(a >= 0);
            CHECK(a <= max_area(f));
        }
        CHECK(lo == 0);
        CHECK(hi == max_area(f));
    }
}

TEST_CASE("ascii rendering") {
    std::string small = render_ascii(parse_path("udd", make_frame(2, 1)));
    CHECK(small ==
          "+-+-+\n"
          "|. .\n"
          "+ + +\n");
    CHECK(render_ascii(parse_path("uuddd", make_frame(3, 2))) !=
          render_ascii(parse_path("ududd", make_frame(3, 2))));
    // the (8,5) example, cells and edges worked out by hand once
    std::string fig = render_ascii(parse_path("uudududdudddd", make_frame(8, 5)));
    CHECK(fig ==
          "+ + + + +-+-+-+-+\n"
          "        |    . .\n"
          "+ + +-+-+ + + + +\n"
          "    |    . . .\n"
          "+ +-+ + + + + + +\n"
          "  |    . .\n"
          "+-+ + + + + + + +\n"
          "|  . . .\n"
          "+ + + + + + + + +\n"
          "|. .\n"
          "+ + + + + + + + +\n");
}

#include "sweepmap/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_set>

#include <json.hpp>

#include "sweepmap/inversion.hpp"
#include "sweepmap/ranks.hpp"
#include "sweepmap/sweep.hpp"

namespace sweepmap {

std::vector<PathWord> brute_preimages(const Frame& frame, const SWWord& sigma) {
    std::vector<PathWord> hits;
    const std::string target = to_ud_string(sigma);
    for_each_dyck(frame, [&](const PathWord& p) {
        if (to_string(phi(p)) == target) hits.push_back(p);
        return true;
    });
    return hits;
}

bool rank_set_neighbor_rule(const Frame& frame, const std::vector<int>& values,
                            NeighborRule rule) {
    std::vector<int> sorted(values);
    std::sort(sorted.begin(), sorted.end());
    auto has = [&](int v) { return std::binary_search(sorted.begin(), sorted.end(), v); };
    for (int v : sorted) {
        bool first, second;
        switch (rule) {
            case NeighborRule::successor_some:
            case NeighborRule::successor_unique:
                first = has(v + frame.m);
                second = has(v - frame.n);
                break;
            default:
                first = has(v - frame.m);
                second = has(v + frame.n);
                break;
        }
        bool unique = (rule == NeighborRule::successor_unique ||
                       rule == NeighborRule::predecessor_unique);
        if (unique ? (first == second) : (!first && !second)) return false;
    }
    return true;
}

bool rank_set_realizable(const Frame& frame, const std::vector<int>& values) {
    std::vector<int> sorted(values);
    std::sort(sorted.begin(), sorted.end());
    const int len = static_cast<int>(sorted.size());
    if (len != word_length(frame)) return false;
    auto index_of = [&](int v) -> int {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
        if (it == sorted.end() || *it != v) return -1;
        return static_cast<int>(it - sorted.begin());
    };
    if (index_of(0) < 0) return false;
    std::vector<char> used(len, 0);
    used[index_of(0)] = 1;
    int current = 0;
    for (int step = 0; step < len; ++step) {
        int next = current + frame.m;
        int idx = index_of(next);
        if (idx < 0) {
            next = current - frame.n;
            idx = index_of(next);
            if (idx < 0) return false;
        }
        if (step + 1 < len) {
            if (used[idx]) return false;
            used[idx] = 1;
        } else if (next != 0) {
            return false;
        }
        current = next;
    }
    return true;
}

namespace {

void check_budget(const Frame& frame, unsigned long long budget) {
    unsigned long long total = count_dyck(frame);
    if (total > budget) {
        fail(errc::budget_exceeded, "frame has " + std::to_string(total) +
                                        " paths, budget is " + std::to_string(budget));
    }
}

void note_failure(VerificationReport& report, const std::string& check,
                  const PathWord& witness) {
    report.failures.emplace_back(check, to_string(witness));
}

}  // namespace

VerificationReport verify_bijection(const Frame& frame, unsigned long long budget) {
    check_budget(frame, budget);
    auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.frame = frame;

    const bool fast_inverter = is_fuss(frame) || (frame.k >= 1 && frame.d >= 1);
    std::unordered_set<std::string> image;
    for_each_dyck(frame, [&](const PathWord& p) {
        ++report.paths_checked;
        PathWord swept = phi(p);
        if (!is_dyck(swept)) note_failure(report, "image-not-dyck", p);
        if (!image.insert(to_string(swept)).second) note_failure(report, "image-collision", p);
        if (fast_inverter) {
            SWWord sigma = path_to_sw(swept);
            try {
                RankSet back = is_fuss(frame)
                                   ? fussiphi(sigma)
                                   : reciphi(sigma, SearchMode::find_first).preimages.front();
                if (back != rank_set(p)) note_failure(report, "inverse-mismatch", p);
            } catch (const sweep_error&) {
                note_failure(report, "inverse-failed", p);
            }
        }
        return true;
    });
    report.phi_image_size = image.size();
    report.bijective = report.failures.empty() &&
                       report.phi_image_size == report.paths_checked &&
                       report.paths_checked == count_dyck(frame);
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

VerificationReport verify_properties(const Frame& frame, unsigned long long budget) {
    check_budget(frame, budget);
    auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.frame = frame;

    const bool has_inverter = is_fuss(frame) || (frame.k >= 1 && frame.d >= 1);
    std::unordered_set<std::string> image;
    for_each_dyck(frame, [&](const PathWord& p) {
        ++report.paths_checked;
        RankSet rs = rank_set(p);
        image.insert(to_string(phi(p)));

        if (area_by_squares(p) != area_from_ranks(rs)) note_failure(report, "area-mismatch", p);

        EndSets ends = end_sets(rs);
        if (static_cast<int>(ends.south.size()) != frame.n ||
            static_cast<int>(ends.west.size()) != frame.m) {
            note_failure(report, "end-set-sizes", p);
        }
        std::vector<int> merged(ends.south);
        merged.insert(merged.end(), ends.west.begin(), ends.west.end());
        std::sort(merged.begin(), merged.end());
        if (merged != rs.sorted) note_failure(report, "south-west-partition", p);
        merged = ends.east;
        merged.insert(merged.end(), ends.north.begin(), ends.north.end());
        std::sort(merged.begin(), merged.end());
        if (merged != rs.sorted) note_failure(report, "east-north-partition", p);
        if (ends.south.empty() || ends.south.front() != 0 || ends.east.empty() ||
            ends.east.front() != 0) {
            note_failure(report, "zero-end", p);
        }

        bool valid = validate_rank_set(frame, rs.sorted);
        bool realizable = rank_set_realizable(frame, rs.sorted);
        bool rules = rank_set_neighbor_rule(frame, rs.sorted, NeighborRule::successor_some) &&
                     rank_set_neighbor_rule(frame, rs.sorted, NeighborRule::successor_unique) &&
                     rank_set_neighbor_rule(frame, rs.sorted, NeighborRule::predecessor_some) &&
                     rank_set_neighbor_rule(frame, rs.sorted, NeighborRule::predecessor_unique);
        if (!valid || !realizable || !rules) note_failure(report, "rank-set-rules", p);
        if (rs.contains(word_length(frame))) note_failure(report, "contains-m-plus-n", p);

        if (path_from_rank_set(rs) != p) note_failure(report, "walk-round-trip", p);
        if (rank_set(transpose(p)).sorted != rs.sorted) {
            note_failure(report, "transpose-rank-set", p);
        }

        // complement reverses the EN word with E -> W and N -> S
        ENWord rho = en_word(rs);
        std::string reversed(rho.letters.rbegin(), rho.letters.rend());
        for (char& ch : reversed) ch = (ch == 'E') ? 'W' : 'S';
        if (reversed != sw_word(complement(rs)).letters) {
            note_failure(report, "complement-reverses-en", p);
        }

        SWWord sigma = sw_word(rs);
        if (!is_compatible_ranks(sigma, rs)) note_failure(report, "self-compatibility", p);
        GraphRanks via_graph = ranks_from_graph(build_graph(sigma, rho), sigma, rho);
        if (via_graph.status != GraphRankStatus::ok || via_graph.ranks->sorted != rs.sorted) {
            note_failure(report, "graph-round-trip", p);
        }

        if (!rs.is_base()) {
            RankSet left = left_op(rs);
            RankSet right = right_op(rs);
            if (left != complement(right_op(complement(rs)))) {
                note_failure(report, "left-right-conjugation", p);
            }
            if (area_from_ranks(complement(left)) != area_from_ranks(complement(rs)) - 1) {
                note_failure(report, "left-complement-area", p);
            }
            if (area_from_ranks(right) != area_from_ranks(rs) - 1) {
                note_failure(report, "right-area", p);
            }
            if (ranks_from_left(left, sigma) != rs) note_failure(report, "left-round-trip", p);
        }

        if (has_inverter || count_dyck(frame) <= 4096) {
            Algorithm alg = has_inverter ? Algorithm::automatic : Algorithm::brute;
            SWWord swept = path_to_sw(phi(p));
            SWWord once = chi(swept, alg);
            if (chi(once, alg).letters != swept.letters) {
                note_failure(report, "chi-involution", p);
            }
            if (area_by_squares(sw_to_path(once)) != area_by_squares(sw_to_path(swept))) {
                note_failure(report, "chi-area", p);
            }
        }
        return true;
    });
    report.phi_image_size = image.size();
    report.bijective = report.failures.empty() &&
                       report.phi_image_size == report.paths_checked &&
                       report.paths_checked == count_dyck(frame);
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string report_to_json(const VerificationReport& r) {
    nlohmann::json j;
    j["m"] = r.frame.m;
    j["n"] = r.frame.n;
    j["paths_checked"] = r.paths_checked;
    j["phi_image_size"] = r.phi_image_size;
    j["bijective"] = r.bijective;
    j["elapsed_seconds"] = r.elapsed_seconds;
    j["failures"] = nlohmann::json::array();
    for (const auto& [check, witness] : r.failures) {
        j["failures"].push_back({{"check", check}, {"witness", witness}});
    }
    return j.dump(2);
}

}  // namespace sweepmap

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sweepmap/lattice.hpp"
#include "sweepmap/words.hpp"

namespace sweepmap {

/// Ground truth by exhaustion: every Dyck path whose sweep image equals the
/// given word, in enumeration order. Shares nothing with the reconstruction
/// path except the sweep map itself.
std::vector<PathWord> brute_preimages(const Frame& frame, const SWWord& sigma);

struct VerificationReport {
    Frame frame;
    unsigned long long paths_checked = 0;
    unsigned long long phi_image_size = 0;
    bool bijective = false;
    std::vector<std::pair<std::string, std::string>> failures;  // check name, witness word
    double elapsed_seconds = 0.0;
};

/// Sweeps every Dyck path of the frame: images must stay Dyck, be pairwise
/// distinct, fill the whole count, and (when a fast inverter applies) invert
/// back to the original path. Throws budget_exceeded when the path count is
/// beyond the budget.
VerificationReport verify_bijection(const Frame& frame, unsigned long long budget = 1000000);

/// Per-path identity checks over the whole enumeration: the two area
/// formulas agree, end sets partition the rank set, the four neighbor rules
/// are equivalent, complement reverses the EN word, left is the complement
/// conjugate of right with the matching area drops, reconstruction
/// round-trips, and chi is an involution.
VerificationReport verify_properties(const Frame& frame, unsigned long long budget = 1000000);

/// The four membership rules a rank set candidate can be tested against.
/// "successor" asks about x+m / x-n, "predecessor" about x-m / x+n; the
/// unique variants demand exactly one, the some variants at least one.
enum class NeighborRule {
    successor_some,
    successor_unique,
    predecessor_some,
    predecessor_unique,
};

bool rank_set_neighbor_rule(const Frame& frame, const std::vector<int>& values,
                            NeighborRule rule);

/// Does the greedy walk on the set close into a single cycle through all
/// members? Decides whether the set is realized by an actual path.
bool rank_set_realizable(const Frame& frame, const std::vector<int>& values);

std::string report_to_json(const VerificationReport& r);

}  // namespace sweepmap

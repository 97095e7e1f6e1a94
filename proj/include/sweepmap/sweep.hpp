#pragma once

#include <optional>
#include <vector>

#include "sweepmap/lattice.hpp"
#include "sweepmap/ranks.hpp"
#include "sweepmap/words.hpp"

namespace sweepmap {

/// The sweep map: reorder the steps of a path by increasing starting rank.
/// Dyck input gives Dyck output; free paths are swept as-is, unvalidated.
PathWord phi(const PathWord& p);

/// True when the sorted ranks fit the SW word: every rank at an S position
/// has its +m partner in the set, every rank at a W position its -n partner.
/// Truth certifies that the word is a sweep image with this preimage set.
bool is_compatible_ranks(const SWWord& sigma, const RankSet& rs);

/// Position graph tying the two letter sequences together: each S_i points
/// to N_i (rank rises by m) and each W_j points to E_j (rank drops by n).
/// The arrows follow the rank walk, so every position has one successor; for
/// a matching pair the m+n edges close into one directed cycle.
struct CompatibilityGraph {
    int size = 0;
    std::vector<int> next;  // next[p-1] = successor of position p (1-based)
    bool single_cycle = false;
};

CompatibilityGraph build_graph(const SWWord& sigma, const ENWord& rho);

enum class GraphRankStatus { ok, not_a_cycle, not_increasing };

struct GraphRanks {
    GraphRankStatus status = GraphRankStatus::not_a_cycle;
    std::optional<RankSet> ranks;
};

/// Walks the cycle from position 1 with rank 0, propagating +m across S->N
/// edges and -n across W->E edges. Succeeds iff the graph is a single cycle
/// and the assigned ranks increase strictly along positions, in which case
/// rho is compatible with sigma and the result is the preimage's rank set.
GraphRanks ranks_from_graph(const CompatibilityGraph& g, const SWWord& sigma,
                            const ENWord& rho);

}  // namespace sweepmap

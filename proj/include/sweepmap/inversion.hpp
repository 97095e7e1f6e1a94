#pragma once

#include <utility>
#include <vector>

#include "sweepmap/ranks.hpp"
#include "sweepmap/words.hpp"

namespace sweepmap {

/// The forced chain of an SW word: f_0 = 1, f_i = position of W_{f_{i-1}}.
/// Any rank set compatible with the word must carry rank i*n at position
/// f_i, for i up to k+1.
struct ForcedPositions {
    std::vector<int> positions;  // f_0 .. f_{k+1}, 1-based
    std::vector<int> ranks;      // 0, n, ..., (k+1)*n
    int s = 0;                   // f_1, the position of rank n
    int a = 0;                   // f_{k+1}, the position of rank (k+1)*n
};

ForcedPositions forced_positions(const SWWord& sigma);

/// Position of the last rank below m+n, read off the word alone. Defined for
/// the two deterministic families: d == 1 uses f_{k+1} directly, d == n-1
/// uses the W labelled by f_{k+1}-1.
int fuss_delta(const SWWord& sigma, const ForcedPositions& fp);

/// Drop 0, adjoin m+n, shift so the minimum is 0 again. Lowers the
/// complement area by exactly one.
RankSet left_op(const RankSet& rs);

/// Replace the largest rank by itself minus m+n. Lowers the area by exactly
/// one; iterating reaches the base set in area(rs) steps.
RankSet right_op(const RankSet& rs);

/// The SW word of left_op's result: remove the first W (at position s) and
/// insert a W after position delta. Requires delta > s and an all-W stretch
/// from just after S_c through delta, which makes the edit the same word as
/// inserting directly after S_c.
SWWord sigma_after_left(const SWWord& sigma, int c, int delta);

/// Undo one left step: given the left word's rank set and the target SW
/// word, shift by n - r[s-1], drop the entry that lands on m+n, prepend 0.
RankSet ranks_from_left(const RankSet& left_ranks, const SWWord& sigma);

/// Candidate keys for one inversion step, with their position intervals.
/// delta must lie in [a, a+d-1], so at most d label intervals qualify.
struct InversionState {
    SWWord sigma;
    std::vector<int> candidates;
    std::vector<std::pair<int, int>> intervals;  // inclusive, parallel to candidates
    long long depth_budget = 0;
};

InversionState candidate_set(const SWWord& sigma, const ForcedPositions& fp);

struct DepthStats {
    long long nodes = 0;
    long long branching_nodes = 0;
    long long candidates_total = 0;
    int candidates_max = 0;
};

struct InversionOutcome {
    std::vector<RankSet> preimages;
    long long nodes_visited = 0;
    int max_depth = 0;                 // left-chain length of the accepted preimages
    std::vector<DepthStats> by_depth;  // indexed by search depth

    int max_branching() const;
};

/// Deterministic inversion for frames with m congruent to +-1 mod n.
/// Recursion: peel one left step per level until the base word S^n W^m,
/// then rebuild the ranks on the way out. When given, `chain` collects the
/// reconstructed rank sets from the base case up to the final answer.
RankSet fussiphi(const SWWord& sigma, std::vector<RankSet>* chain = nullptr);

enum class SearchMode { find_first, find_all };

/// Depth-first inversion search for m = k*n + d with k >= 1. Each node
/// branches over candidate keys, recursing on the edited word with a hard
/// depth budget of (m-1)(n-1)/2; a child's rank sets are accepted only when
/// the recovered delta lands on a W inside the candidate's interval and the
/// rebuilt set passes the full compatibility check. Throws no_preimage when
/// the search comes back empty.
InversionOutcome reciphi(const SWWord& sigma, SearchMode mode);

enum class Algorithm { automatic, fuss, recip, brute };

const char* algorithm_name(Algorithm a);

/// The conjugation of rank complement by the sweep map: invert, complement,
/// sweep. Computed as the reversed EN word of the preimage with E -> W and
/// N -> S. An area-preserving involution on sweep images.
SWWord chi(const SWWord& sigma, Algorithm alg = Algorithm::automatic);

struct InvertReport {
    std::vector<PathWord> paths;
    InversionOutcome outcome;
    Algorithm used = Algorithm::automatic;
};

/// All Dyck paths whose sweep image is the given word. `automatic` picks
/// fussiphi on Fuss frames, the search when k >= 1, and the brute oracle
/// otherwise (m < n outside the Fuss family).
InvertReport invert_phi_report(const SWWord& sigma, Algorithm alg,
                               SearchMode mode = SearchMode::find_first);
std::vector<PathWord> invert_phi(const SWWord& sigma, Algorithm alg = Algorithm::automatic);

}  // namespace sweepmap

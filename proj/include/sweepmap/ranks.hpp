#pragma once

#include <string>
#include <vector>

#include "sweepmap/lattice.hpp"
#include "sweepmap/words.hpp"

namespace sweepmap {

/// Ranks of the step starting points, in path order. Starts at 0 and moves
/// by +m per up-step, -n per right-step; the values are pairwise distinct.
struct RankWalk {
    Frame frame;
    std::vector<int> values;

    bool operator==(const RankWalk&) const = default;
};

/// The same ranks sorted increasingly. Positions are 1-based, membership is
/// answered by binary search since every algorithm asks "is x a rank".
struct RankSet {
    Frame frame;
    std::vector<int> sorted;

    bool contains(int value) const;
    int position_of(int value) const;  // 1-based, 0 when absent
    int max_rank() const { return sorted.back(); }
    bool is_base() const;  // {0, 1, ..., m+n-1}

    bool operator==(const RankSet&) const = default;
};

/// Ranks of the south, west, east and north ends of a Dyck path.
/// S and W partition the rank set, as do E and N; N = S + m, E = W - n.
struct EndSets {
    std::vector<int> south;
    std::vector<int> west;
    std::vector<int> east;
    std::vector<int> north;
};

RankWalk rank_walk(const PathWord& p);
RankSet rank_set(const PathWord& p);

RankSet rank_set_from_sorted(const Frame& frame, std::vector<int> sorted);
RankSet base_rank_set(const Frame& frame);  // {0, ..., m+n-1}

/// The exactly-one-successor characterization: a set of m+n distinct values
/// containing 0 is the rank set of some path iff for every member x exactly
/// one of x+m, x-n is also a member.
bool validate_rank_set(const Frame& frame, const std::vector<int>& values);

/// Greedy walk on the rank set: from x go to x+m when present (up-step),
/// otherwise to x-n (right-step). Recovers the unique path with this set.
PathWord path_from_rank_set(const RankSet& rs);

EndSets end_sets(const RankSet& rs);
SWWord sw_word(const RankSet& rs);
ENWord en_word(const RankSet& rs);

/// max(R) - R, again a valid Dyck rank set; an involution.
RankSet complement(const RankSet& rs);

/// Number of south-end ranks in {0, ..., m+n}.
int key_of(const RankSet& rs);

/// Number of ranks in {0, ..., m+n}; m+n itself is never a rank, so this is
/// where m+n would insert into the sorted sequence.
int delta_of(const RankSet& rs);

/// (sum of ranks - binomial(m+n, 2)) / (m+n); the division is exact.
long long area_from_ranks(const RankSet& rs);

std::string to_string(const RankSet& rs);

}  // namespace sweepmap

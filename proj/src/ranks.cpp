#include "sweepmap/ranks.hpp"

#include <algorithm>
#include <unordered_set>

namespace sweepmap {

bool RankSet::contains(int value) const {
    return std::binary_search(sorted.begin(), sorted.end(), value);
}

int RankSet::position_of(int value) const {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), value);
    if (it == sorted.end() || *it != value) return 0;
    return static_cast<int>(it - sorted.begin()) + 1;
}

bool RankSet::is_base() const {
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i) {
        if (sorted[i] != i) return false;
    }
    return true;
}

RankWalk rank_walk(const PathWord& p) {
    RankWalk w;
    w.frame = p.frame;
    w.values.reserve(p.steps.size());
    int r = 0;
    for (Step s : p.steps) {
        w.values.push_back(r);
        r += (s == Step::U) ? p.frame.m : -p.frame.n;
    }
    return w;
}

RankSet rank_set(const PathWord& p) {
    RankWalk w = rank_walk(p);
    std::sort(w.values.begin(), w.values.end());
    return RankSet{p.frame, std::move(w.values)};
}

RankSet rank_set_from_sorted(const Frame& frame, std::vector<int> sorted) {
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i] <= sorted[i - 1]) {
            fail(errc::invalid_rank_set, "values must be strictly increasing");
        }
    }
    return RankSet{frame, std::move(sorted)};
}

RankSet base_rank_set(const Frame& frame) {
    std::vector<int> values(word_length(frame));
    for (int i = 0; i < word_length(frame); ++i) values[i] = i;
    return RankSet{frame, std::move(values)};
}

bool validate_rank_set(const Frame& frame, const std::vector<int>& values) {
    std::vector<int> sorted(values);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        fail(errc::wrong_cardinality, "values must be distinct");
    }
    if (static_cast<int>(sorted.size()) != word_length(frame)) {
        fail(errc::wrong_cardinality, "expected " + std::to_string(word_length(frame)) +
                                          " values, got " + std::to_string(sorted.size()));
    }
    if (!std::binary_search(sorted.begin(), sorted.end(), 0)) {
        fail(errc::missing_zero, "0 must be a member");
    }
    for (int v : sorted) {
        bool up = std::binary_search(sorted.begin(), sorted.end(), v + frame.m);
        bool down = std::binary_search(sorted.begin(), sorted.end(), v - frame.n);
        if (up == down) return false;  // need exactly one
    }
    return true;
}

PathWord path_from_rank_set(const RankSet& rs) {
    const Frame& f = rs.frame;
    const int len = word_length(f);
    if (static_cast<int>(rs.sorted.size()) != len || rs.position_of(0) == 0) {
        fail(errc::invalid_rank_set, "need " + std::to_string(len) + " distinct values with 0");
    }
    std::vector<Step> steps;
    steps.reserve(len);
    std::vector<char> used(len, 0);
    used[rs.position_of(0) - 1] = 1;
    int current = 0;
    for (int i = 0; i < len; ++i) {
        int next;
        int pos = rs.position_of(current + f.m);
        if (pos != 0) {
            steps.push_back(Step::U);
            next = current + f.m;
        } else {
            pos = rs.position_of(current - f.n);
            if (pos == 0) {
                fail(errc::invalid_rank_set,
                     "walk is stuck at rank " + std::to_string(current));
            }
            steps.push_back(Step::D);
            next = current - f.n;
        }
        if (i + 1 < len) {
            if (used[pos - 1]) {
                fail(errc::invalid_rank_set,
                     "walk revisits rank " + std::to_string(next) + " early");
            }
            used[pos - 1] = 1;
        } else if (next != 0) {
            fail(errc::invalid_rank_set, "walk does not close at rank 0");
        }
        current = next;
    }
    return path_from_steps(f, std::move(steps));
}

EndSets end_sets(const RankSet& rs) {
    EndSets e;
    for (int v : rs.sorted) {
        if (rs.contains(v + rs.frame.m)) {
            e.south.push_back(v);
        } else {
            e.west.push_back(v);
        }
    }
    e.north.reserve(e.south.size());
    for (int v : e.south) e.north.push_back(v + rs.frame.m);
    e.east.reserve(e.west.size());
    for (int v : e.west) e.east.push_back(v - rs.frame.n);
    return e;
}

SWWord sw_word(const RankSet& rs) {
    std::string letters;
    letters.reserve(rs.sorted.size());
    for (int v : rs.sorted) letters.push_back(rs.contains(v + rs.frame.m) ? 'S' : 'W');
    return make_sw_word(rs.frame, letters);
}

ENWord en_word(const RankSet& rs) {
    std::string letters;
    letters.reserve(rs.sorted.size());
    for (int v : rs.sorted) letters.push_back(rs.contains(v + rs.frame.n) ? 'E' : 'N');
    return make_en_word(rs.frame, letters);
}

RankSet complement(const RankSet& rs) {
    const int top = rs.max_rank();
    std::vector<int> values(rs.sorted.rbegin(), rs.sorted.rend());
    for (int& v : values) v = top - v;
    return RankSet{rs.frame, std::move(values)};
}

int key_of(const RankSet& rs) {
    const int bound = word_length(rs.frame);
    int count = 0;
    for (int v : rs.sorted) {
        if (v > bound) break;
        if (rs.contains(v + rs.frame.m)) ++count;
    }
    return count;
}

int delta_of(const RankSet& rs) {
    const int bound = word_length(rs.frame);
    auto it = std::upper_bound(rs.sorted.begin(), rs.sorted.end(), bound);
    return static_cast<int>(it - rs.sorted.begin());
}

long long area_from_ranks(const RankSet& rs) {
    const long long len = word_length(rs.frame);
    long long sum = 0;
    for (int v : rs.sorted) sum += v;
    long long numerator = sum - len * (len - 1) / 2;
    if (numerator % len != 0) {
        fail(errc::non_integral_area, "rank sum " + std::to_string(sum) +
                                          " is not congruent to binomial(" +
                                          std::to_string(len) + ",2) mod " + std::to_string(len));
    }
    return numerator / len;
}

std::string to_string(const RankSet& rs) {
    std::string out;
    for (std::size_t i = 0; i < rs.sorted.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(rs.sorted[i]);
    }
    return out;
}

}  // namespace sweepmap

#include "sweepmap/sweep.hpp"

#include <algorithm>
#include <utility>

namespace sweepmap {

PathWord phi(const PathWord& p) {
    RankWalk walk = rank_walk(p);
    const int len = static_cast<int>(p.steps.size());
    std::vector<std::pair<int, Step>> order(len);
    for (int i = 0; i < len; ++i) order[i] = {walk.values[i], p.steps[i]};
    std::sort(order.begin(), order.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (int i = 1; i < len; ++i) {
        // coprimality makes the ranks distinct; a collision means a broken input
        if (order[i].first == order[i - 1].first) {
            throw std::logic_error("phi: duplicate rank " + std::to_string(order[i].first));
        }
    }
    std::vector<Step> steps(len);
    for (int i = 0; i < len; ++i) steps[i] = order[i].second;
    return PathWord{p.frame, std::move(steps)};
}

bool is_compatible_ranks(const SWWord& sigma, const RankSet& rs) {
    if (sigma.frame != rs.frame || sigma.letters.size() != rs.sorted.size()) {
        fail(errc::length_mismatch, "word and rank set disagree in frame or length");
    }
    const Frame& f = sigma.frame;
    for (std::size_t i = 0; i < rs.sorted.size(); ++i) {
        int v = rs.sorted[i];
        if (sigma.letters[i] == 'S') {
            if (!rs.contains(v + f.m)) return false;
        } else {
            if (!rs.contains(v - f.n)) return false;
        }
    }
    return true;
}

CompatibilityGraph build_graph(const SWWord& sigma, const ENWord& rho) {
    if (sigma.frame != rho.frame) {
        fail(errc::length_mismatch, "words live in different frames");
    }
    const int len = static_cast<int>(sigma.letters.size());
    CompatibilityGraph g;
    g.size = len;
    g.next.assign(len, 0);
    int si = 0, wj = 0;
    for (int p = 1; p <= len; ++p) {
        if (sigma.letters[p - 1] == 'S') {
            g.next[p - 1] = rho.n_position(++si);
        } else {
            g.next[p - 1] = rho.e_position(++wj);
        }
    }
    std::vector<char> seen(len, 0);
    int p = 1, visited = 0;
    while (!seen[p - 1]) {
        seen[p - 1] = 1;
        ++visited;
        p = g.next[p - 1];
    }
    g.single_cycle = (p == 1 && visited == len);
    return g;
}

GraphRanks ranks_from_graph(const CompatibilityGraph& g, const SWWord& sigma,
                            const ENWord& rho) {
    (void)rho;
    GraphRanks out;
    if (!g.single_cycle) {
        out.status = GraphRankStatus::not_a_cycle;
        return out;
    }
    const Frame& f = sigma.frame;
    const int len = g.size;
    std::vector<int> values(len, 0);
    int p = 1;
    long long v = 0;
    for (int step = 0; step < len; ++step) {
        values[p - 1] = static_cast<int>(v);
        v += (sigma.letters[p - 1] == 'S') ? f.m : -f.n;
        p = g.next[p - 1];
    }
    // around the cycle the increments cancel exactly: n up-edges, m down-edges
    for (int i = 1; i < len; ++i) {
        if (values[i] <= values[i - 1]) {
            out.status = GraphRankStatus::not_increasing;
            return out;
        }
    }
    if (values[0] != 0) {
        out.status = GraphRankStatus::not_increasing;
        return out;
    }
    out.status = GraphRankStatus::ok;
    out.ranks = RankSet{f, std::move(values)};
    return out;
}

}  // namespace sweepmap

#include "sweepmap/inversion.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "sweepmap/oracle.hpp"
#include "sweepmap/sweep.hpp"

namespace sweepmap {

ForcedPositions forced_positions(const SWWord& sigma) {
    const Frame& f = sigma.frame;
    if (f.n < 2) fail(errc::precond_violated, "forced chain needs n >= 2");
    ForcedPositions fp;
    fp.positions = {1};
    fp.ranks = {0};
    int prev = 1;
    for (int i = 1; i <= f.k + 1; ++i) {
        // the previous position doubles as the label index of the next W
        int pos = sigma.w_position(prev);
        fp.positions.push_back(pos);
        fp.ranks.push_back(i * f.n);
        prev = pos;
    }
    fp.s = fp.positions[1];
    fp.a = fp.positions.back();
    return fp;
}

int fuss_delta(const SWWord& sigma, const ForcedPositions& fp) {
    const Frame& f = sigma.frame;
    if (f.n >= 2 && f.d == 1 && f.k >= 1) return fp.a;
    if (f.n >= 2 && f.d == f.n - 1) return sigma.w_position(fp.a - 1) - 1;
    fail(errc::not_fuss_frame, "no deterministic delta for this slope");
}

RankSet left_op(const RankSet& rs) {
    const Frame& f = rs.frame;
    if (rs.is_base()) fail(errc::is_base_path, "base rank set has no left image");
    if (rs.sorted.empty() || rs.sorted.front() != 0) {
        fail(errc::precond_violated, "rank set must start at 0");
    }
    std::vector<int> values(rs.sorted.begin() + 1, rs.sorted.end());
    int fresh = word_length(f);
    values.insert(std::upper_bound(values.begin(), values.end(), fresh), fresh);
    int shift = values.front();
    for (int& v : values) v -= shift;
    return RankSet{f, std::move(values)};
}

RankSet right_op(const RankSet& rs) {
    const Frame& f = rs.frame;
    if (rs.is_base()) fail(errc::is_base_path, "base rank set has no right image");
    std::vector<int> values(rs.sorted.begin(), rs.sorted.end() - 1);
    int fresh = rs.max_rank() - word_length(f);
    values.insert(std::upper_bound(values.begin(), values.end(), fresh), fresh);
    return RankSet{f, std::move(values)};
}

namespace {

// Remove the first W, insert a W after original position q. q = s-1 gives
// the word back unchanged.
SWWord left_edit(const SWWord& sigma, int q) {
    const int s = sigma.first_w();
    std::string out;
    out.reserve(sigma.letters.size());
    for (int i = 1; i <= static_cast<int>(sigma.letters.size()); ++i) {
        if (i != s) out.push_back(sigma.letters[i - 1]);
        if (i == q) out.push_back('W');
    }
    return make_sw_word(sigma.frame, out);
}

}  // namespace

SWWord sigma_after_left(const SWWord& sigma, int c, int delta) {
    const Frame& f = sigma.frame;
    const int len = word_length(f);
    if (c < 1 || c > f.n) fail(errc::precond_violated, "key candidate out of range");
    const int s = sigma.first_w();
    if (delta <= s || delta > len) {
        fail(errc::precond_violated, "insertion position must lie beyond the first W");
    }
    const int cpos = sigma.s_position(c);
    if (cpos > delta) fail(errc::precond_violated, "S_c must not come after the insertion");
    for (int i = cpos + 1; i <= delta; ++i) {
        if (sigma.letters[i - 1] != 'W') {
            fail(errc::precond_violated, "letters between S_c and the insertion must be W");
        }
    }
    return left_edit(sigma, delta);
}

namespace {

// the reconstruction needs only s, the position of the first W in the
// word whose left image the ranks belong to
RankSet undo_left(const RankSet& left_ranks, int s) {
    const Frame& f = left_ranks.frame;
    const int anchor = left_ranks.sorted[s - 2];
    const int shift = f.n - anchor;
    if (shift <= 0) {
        fail(errc::non_positive_shift, "shift " + std::to_string(shift) + " must be positive");
    }
    const int delta = left_ranks.position_of(anchor + f.m);
    if (delta == 0) {
        fail(errc::missing_delta_rank,
             std::to_string(anchor + f.m) + " is not a rank of the left set");
    }
    std::vector<int> values;
    values.reserve(left_ranks.sorted.size());
    values.push_back(0);
    for (int i = 1; i <= static_cast<int>(left_ranks.sorted.size()); ++i) {
        if (i == delta) continue;  // this entry would land exactly on m+n
        values.push_back(left_ranks.sorted[i - 1] + shift);
    }
    return RankSet{f, std::move(values)};
}

}  // namespace

RankSet ranks_from_left(const RankSet& left_ranks, const SWWord& sigma) {
    if (left_ranks.frame != sigma.frame) fail(errc::precond_violated, "frame mismatch");
    const int s = sigma.first_w();
    if (s < 2) fail(errc::precond_violated, "word must start with S");
    return undo_left(left_ranks, s);
}

InversionState candidate_set(const SWWord& sigma, const ForcedPositions& fp) {
    const Frame& f = sigma.frame;
    const int sentinel = word_length(f) + 1;
    InversionState st;
    st.sigma = sigma;
    st.depth_budget = max_area(f);
    auto spos = [&](int c) { return c <= f.n ? sigma.s_position(c) : sentinel; };
    for (int c = 1; c <= f.n; ++c) {
        if (fp.a < spos(c + 1) && spos(c) < fp.a + f.d) {
            st.candidates.push_back(c);
            st.intervals.emplace_back(spos(c), spos(c + 1) - 1);
        }
    }
    return st;
}

int InversionOutcome::max_branching() const {
    int best = 0;
    for (const DepthStats& d : by_depth) best = std::max(best, d.candidates_max);
    return best;
}

RankSet fussiphi(const SWWord& sigma, std::vector<RankSet>* chain) {
    const Frame& f = sigma.frame;
    if (!is_fuss(f)) {
        fail(errc::not_fuss_frame, "fussiphi needs m congruent to +-1 mod n");
    }
    const long long budget = max_area(f);

    try {
        // peel left edits down to the base word, remembering only each
        // level's first-W position, then rebuild the ranks on the way back
        std::vector<int> s_chain;
        SWWord word = sigma;
        while (!word.is_base()) {
            if (f.n == 1 || f.m == 1 || static_cast<long long>(s_chain.size()) >= budget) {
                fail(errc::invalid_sigma, "word is not a sweep image");
            }
            ForcedPositions fp = forced_positions(word);
            int delta = fuss_delta(word, fp);
            int c = 0;  // the key: number of S letters up to position delta
            for (int i = 0; i < delta; ++i) c += (word.letters[i] == 'S');
            s_chain.push_back(word.first_w());
            word = sigma_after_left(word, c, delta);
        }
        RankSet ranks = base_rank_set(f);
        if (chain) chain->push_back(ranks);
        for (auto it = s_chain.rbegin(); it != s_chain.rend(); ++it) {
            if (*it < 2) fail(errc::invalid_sigma, "word is not a sweep image");
            ranks = undo_left(ranks, *it);
            if (chain) chain->push_back(ranks);
        }
        if (!is_compatible_ranks(sigma, ranks)) {
            fail(errc::invalid_sigma, "reconstructed ranks are not compatible");
        }
        return ranks;
    } catch (const sweep_error& e) {
        switch (e.code()) {
            case errc::label_out_of_range:
            case errc::precond_violated:
            case errc::non_positive_shift:
            case errc::missing_delta_rank:
            case errc::wrong_step_counts:
                fail(errc::invalid_sigma, std::string("word is not a sweep image (") +
                                              e.what() + ")");
            default:
                throw;
        }
    }
}

namespace {

struct SearchResult {
    std::vector<int> ranks;
    int base_depth = 0;
};

struct SearchNode {
    SWWord sigma;
    int s = 0;  // first W position, 0 when the node was pruned
    int depth = 0;
    std::vector<int> cands;
    std::vector<std::pair<int, int>> intervals;
    std::size_t next = 0;
    std::vector<SearchResult> results;
};

class ReciSearch {
public:
    ReciSearch(const Frame& f, SearchMode mode) : frame_(f), mode_(mode), budget_(max_area(f)) {}

    InversionOutcome run(const SWWord& sigma) {
        std::vector<SearchNode> stack;
        stack.push_back(make_node(sigma, 0));
        std::vector<SearchResult> accepted;
        while (true) {
            SearchNode& top = stack.back();
            if (top.next < top.cands.size()) {
                int c = top.cands[top.next++];
                int child_depth = top.depth + 1;
                SWWord child = left_edit(top.sigma, top.sigma.s_position(c));
                // push may reallocate; nothing reads `top` past this point
                stack.push_back(make_node(std::move(child), child_depth));
                continue;
            }
            SearchNode done = std::move(stack.back());
            stack.pop_back();
            if (stack.empty()) {
                accepted = std::move(done.results);
                break;
            }
            merge_into_parent(std::move(done), stack.back());
            if (stack.size() == 1 && mode_ == SearchMode::find_first &&
                !stack.front().results.empty()) {
                accepted = std::move(stack.front().results);
                break;
            }
        }

        InversionOutcome out;
        out.nodes_visited = nodes_;
        out.by_depth = std::move(hist_);
        std::set<std::vector<int>> seen;
        for (SearchResult& r : accepted) {
            if (!seen.insert(r.ranks).second) continue;
            out.max_depth = std::max(out.max_depth, r.base_depth);
            out.preimages.push_back(RankSet{frame_, std::move(r.ranks)});
            if (mode_ == SearchMode::find_first && !out.preimages.empty()) break;
        }
        return out;
    }

private:
    SearchNode make_node(SWWord sigma, int depth) {
        ++nodes_;
        if (static_cast<int>(hist_.size()) <= depth) hist_.resize(depth + 1);
        hist_[depth].nodes++;

        SearchNode node;
        node.depth = depth;
        node.sigma = std::move(sigma);
        if (node.sigma.is_base()) {
            node.results.push_back({base_rank_set(frame_).sorted, depth});
            return node;
        }
        // prune hopeless words: beyond the budget, starting with W (rank 0
        // must be a south end), or not Dyck (sweep images always are)
        if (depth >= budget_) return node;
        if (node.sigma.letters[0] != 'S') return node;
        if (!is_dyck(sw_to_path(node.sigma))) return node;
        ForcedPositions fp;
        try {
            fp = forced_positions(node.sigma);
        } catch (const sweep_error& e) {
            if (e.code() == errc::label_out_of_range) return node;  // no compatible set
            throw;
        }
        InversionState st = candidate_set(node.sigma, fp);
        node.s = node.sigma.first_w();
        node.cands = std::move(st.candidates);
        node.intervals = std::move(st.intervals);
        hist_[depth].branching_nodes++;
        hist_[depth].candidates_total += static_cast<long long>(node.cands.size());
        hist_[depth].candidates_max =
            std::max(hist_[depth].candidates_max, static_cast<int>(node.cands.size()));
        return node;
    }

    void merge_into_parent(SearchNode child, SearchNode& parent) {
        const auto [lo, hi] = parent.intervals[parent.next - 1];
        for (SearchResult& res : child.results) {
            if (parent.s < 2) break;
            const int anchor = res.ranks[parent.s - 2];
            const int shift = frame_.n - anchor;
            if (shift <= 0) continue;
            auto it = std::lower_bound(res.ranks.begin(), res.ranks.end(), anchor + frame_.m);
            if (it == res.ranks.end() || *it != anchor + frame_.m) continue;
            const int delta = static_cast<int>(it - res.ranks.begin()) + 1;
            if (child.sigma.letters[delta - 1] != 'W') continue;
            if (delta < lo || delta > hi) continue;
            std::vector<int> rebuilt;
            rebuilt.reserve(res.ranks.size());
            rebuilt.push_back(0);
            for (int i = 1; i <= static_cast<int>(res.ranks.size()); ++i) {
                if (i == delta) continue;
                rebuilt.push_back(res.ranks[i - 1] + shift);
            }
            if (!is_compatible_ranks(parent.sigma, RankSet{frame_, rebuilt})) continue;
            parent.results.push_back({std::move(rebuilt), res.base_depth});
        }
    }

    Frame frame_;
    SearchMode mode_;
    long long budget_ = 0;
    long long nodes_ = 0;
    std::vector<DepthStats> hist_;
};

InversionOutcome outcome_from_ranks(std::vector<RankSet> preimages, long long nodes,
                                    int depth) {
    InversionOutcome out;
    out.preimages = std::move(preimages);
    out.nodes_visited = nodes;
    out.max_depth = depth;
    out.by_depth.assign(depth + 1, DepthStats{});
    for (int i = 0; i <= depth; ++i) {
        out.by_depth[i].nodes = 1;
        if (i < depth) {
            out.by_depth[i].branching_nodes = 1;
            out.by_depth[i].candidates_total = 1;
            out.by_depth[i].candidates_max = 1;
        }
    }
    return out;
}

}  // namespace

InversionOutcome reciphi(const SWWord& sigma, SearchMode mode) {
    const Frame& f = sigma.frame;
    if (sigma.is_base()) {
        return outcome_from_ranks({base_rank_set(f)}, 1, 0);
    }
    if (f.k >= 1 && f.d >= 1) {
        InversionOutcome out = ReciSearch(f, mode).run(sigma);
        if (out.preimages.empty()) {
            fail(errc::no_preimage, "no rank set is compatible with the word (" +
                                        std::to_string(out.nodes_visited) + " nodes searched)");
        }
        return out;
    }
    if (is_fuss(f)) {
        // m < n with m = n-1, or a one-path frame: the deterministic route
        std::vector<RankSet> chain;
        try {
            RankSet ranks = fussiphi(sigma, &chain);
            return outcome_from_ranks({std::move(ranks)}, static_cast<long long>(chain.size()),
                                      static_cast<int>(chain.size()) - 1);
        } catch (const sweep_error& e) {
            if (e.code() == errc::invalid_sigma) {
                fail(errc::no_preimage, "no rank set is compatible with the word");
            }
            throw;
        }
    }
    fail(errc::algorithm_inapplicable, "search needs m = k*n + d with k >= 1");
}

const char* algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::automatic: return "auto";
        case Algorithm::fuss: return "fuss";
        case Algorithm::recip: return "recip";
        case Algorithm::brute: return "brute";
    }
    return "unknown";
}

InvertReport invert_phi_report(const SWWord& sigma, Algorithm alg, SearchMode mode) {
    const Frame& f = sigma.frame;
    Algorithm used = alg;
    if (used == Algorithm::automatic) {
        if (is_fuss(f)) {
            used = Algorithm::fuss;
        } else if (f.k >= 1 && f.d >= 1) {
            used = Algorithm::recip;
        } else {
            used = Algorithm::brute;
        }
    }

    InvertReport report;
    report.used = used;
    switch (used) {
        case Algorithm::fuss: {
            std::vector<RankSet> chain;
            try {
                RankSet ranks = fussiphi(sigma, &chain);
                report.outcome =
                    outcome_from_ranks({std::move(ranks)}, static_cast<long long>(chain.size()),
                                       static_cast<int>(chain.size()) - 1);
            } catch (const sweep_error& e) {
                if (e.code() == errc::invalid_sigma) {
                    fail(errc::no_preimage, "no rank set is compatible with the word");
                }
                throw;
            }
            break;
        }
        case Algorithm::recip:
            report.outcome = reciphi(sigma, mode);
            break;
        case Algorithm::brute: {
            std::vector<PathWord> paths = brute_preimages(f, sigma);
            if (paths.empty()) {
                fail(errc::no_preimage, "exhaustive search found no preimage");
            }
            std::vector<RankSet> preimages;
            preimages.reserve(paths.size());
            for (const PathWord& p : paths) preimages.push_back(rank_set(p));
            report.outcome =
                outcome_from_ranks(std::move(preimages),
                                   static_cast<long long>(count_dyck(f)), 0);
            break;
        }
        case Algorithm::automatic:
            break;  // resolved above
    }

    if (mode == SearchMode::find_first && report.outcome.preimages.size() > 1) {
        report.outcome.preimages.resize(1);
    }
    report.paths.reserve(report.outcome.preimages.size());
    for (const RankSet& rs : report.outcome.preimages) {
        report.paths.push_back(path_from_rank_set(rs));
    }
    return report;
}

std::vector<PathWord> invert_phi(const SWWord& sigma, Algorithm alg) {
    return invert_phi_report(sigma, alg, SearchMode::find_all).paths;
}

SWWord chi(const SWWord& sigma, Algorithm alg) {
    InvertReport report = invert_phi_report(sigma, alg, SearchMode::find_first);
    ENWord rho = en_word(rank_set(report.paths.front()));
    std::string reversed(rho.letters.rbegin(), rho.letters.rend());
    for (char& ch : reversed) ch = (ch == 'E') ? 'W' : 'S';
    return make_sw_word(sigma.frame, reversed);
}

}  // namespace sweepmap

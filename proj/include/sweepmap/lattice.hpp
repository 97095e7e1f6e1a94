#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "sweepmap/error.hpp"

namespace sweepmap {

/// Coprime slope parameters: width m, height n, and the division
/// m = k*n + d with 0 <= d < n that drives the inversion algorithms.
struct Frame {
    int m = 1;
    int n = 1;
    int k = 1;
    int d = 0;

    bool operator==(const Frame&) const = default;
};

Frame make_frame(long long m, long long n);

/// Slopes with a deterministic inverse: m congruent to +-1 mod n,
/// plus the one-path frames m == 1 and n == 1.
bool is_fuss(const Frame& f);

inline int word_length(const Frame& f) { return f.m + f.n; }

/// (m-1)(n-1)/2, the largest possible area. Equals the largest possible
/// complement area, hence the exact depth bound for the inversion search.
long long max_area(const Frame& f);

enum class Step : std::uint8_t { U, D };

/// A lattice path as a step word: n up-steps (U) and m right-steps (D).
struct PathWord {
    Frame frame;
    std::vector<Step> steps;

    bool operator==(const PathWord&) const = default;
};

PathWord path_from_steps(const Frame& frame, std::vector<Step> steps);

/// Parses a step word. Letters u/n/s mean an up-step and d/e/w a
/// right-step, case-insensitively.
PathWord parse_path(std::string_view text, const Frame& frame);

std::string to_string(const PathWord& p);

/// True when the path never goes below the diagonal, i.e. every point
/// (a,b) it visits has rank m*b - n*a >= 0.
bool is_dyck(const PathWord& p);

/// Number of full lattice squares strictly between a Dyck path and the
/// diagonal.
long long area_by_squares(const PathWord& p);

/// Reverse the word and swap step kinds; lands in the transposed frame
/// and keeps the rank set.
PathWord transpose(const PathWord& p);

/// Visits every Dyck path of the frame in lexicographic order with U < D.
/// The visitor returns false to stop early.
void for_each_dyck(const Frame& frame, const std::function<bool(const PathWord&)>& visit);

std::vector<PathWord> enumerate_dyck(const Frame& frame);

/// binomial(m+n, n) / (m+n); always an integer for coprime frames.
unsigned long long count_dyck(const Frame& frame);

/// Deterministic ASCII picture: lattice points as '+', path edges as
/// '-' and '|', cells crossed by the diagonal marked '.'.
std::string render_ascii(const PathWord& p);

}  // namespace sweepmap

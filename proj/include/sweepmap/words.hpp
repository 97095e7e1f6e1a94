#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sweepmap/lattice.hpp"

namespace sweepmap {

/// SW letter sequence over the sorted ranks of a Dyck path: letter i is S
/// when the i-th smallest rank is a south end and W when it is a west end.
/// Labels S_1..S_n and W_1..W_m run left to right; positions are 1-based.
struct SWWord {
    Frame frame;
    std::string letters;     // 'S' / 'W', length m+n
    std::vector<int> s_pos;  // s_pos[i-1] = position of S_i
    std::vector<int> w_pos;  // w_pos[j-1] = position of W_j

    int s_position(int i) const;
    int w_position(int j) const;
    int first_w() const { return w_pos.front(); }
    bool is_base() const;  // S^n W^m

    bool operator==(const SWWord&) const = default;
};

/// EN letter sequence: E for east ends, N for north ends, same indexing.
struct ENWord {
    Frame frame;
    std::string letters;     // 'E' / 'N', length m+n
    std::vector<int> e_pos;
    std::vector<int> n_pos;

    int e_position(int j) const;
    int n_position(int i) const;

    bool operator==(const ENWord&) const = default;
};

SWWord make_sw_word(const Frame& frame, std::string_view text);
ENWord make_en_word(const Frame& frame, std::string_view text);

SWWord base_sw_word(const Frame& frame);

PathWord sw_to_path(const SWWord& w);  // S -> U, W -> D
SWWord path_to_sw(const PathWord& p);
std::string to_ud_string(const SWWord& w);

}  // namespace sweepmap

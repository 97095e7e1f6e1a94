#include "sweepmap/words.hpp"

#include <algorithm>

namespace sweepmap {

namespace {

int label_position(const std::vector<int>& pos, int index, char kind) {
    if (index < 1 || index > static_cast<int>(pos.size())) {
        fail(errc::label_out_of_range,
             std::string(1, kind) + "_" + std::to_string(index) + " does not exist");
    }
    return pos[index - 1];
}

// up-ish letters map to the first letter of `alphabet`, down-ish to the second
std::string normalize_letters(std::string_view text, const char alphabet[2]) {
    std::string out;
    out.reserve(text.size());
    for (char ch : text) {
        switch (ch) {
            case 'u': case 'U': case 'n': case 'N': case 's': case 'S':
                out.push_back(alphabet[0]);
                break;
            case 'd': case 'D': case 'e': case 'E': case 'w': case 'W':
                out.push_back(alphabet[1]);
                break;
            default:
                fail(errc::bad_alphabet, std::string("unexpected letter '") + ch + "'");
        }
    }
    return out;
}

}  // namespace

int SWWord::s_position(int i) const { return label_position(s_pos, i, 'S'); }
int SWWord::w_position(int j) const { return label_position(w_pos, j, 'W'); }

bool SWWord::is_base() const {
    for (int i = 0; i < frame.n; ++i) {
        if (letters[i] != 'S') return false;
    }
    return true;
}

int ENWord::e_position(int j) const { return label_position(e_pos, j, 'E'); }
int ENWord::n_position(int i) const { return label_position(n_pos, i, 'N'); }

SWWord make_sw_word(const Frame& frame, std::string_view text) {
    SWWord w;
    w.frame = frame;
    w.letters = normalize_letters(text, "SW");
    for (int p = 1; p <= static_cast<int>(w.letters.size()); ++p) {
        (w.letters[p - 1] == 'S' ? w.s_pos : w.w_pos).push_back(p);
    }
    if (static_cast<int>(w.s_pos.size()) != frame.n ||
        static_cast<int>(w.w_pos.size()) != frame.m) {
        fail(errc::wrong_step_counts, "SW word needs " + std::to_string(frame.n) + " S and " +
                                          std::to_string(frame.m) + " W letters, got " +
                                          std::to_string(w.s_pos.size()) + " and " +
                                          std::to_string(w.w_pos.size()));
    }
    return w;
}

ENWord make_en_word(const Frame& frame, std::string_view text) {
    ENWord w;
    w.frame = frame;
    w.letters = normalize_letters(text, "NE");
    for (int p = 1; p <= static_cast<int>(w.letters.size()); ++p) {
        (w.letters[p - 1] == 'E' ? w.e_pos : w.n_pos).push_back(p);
    }
    if (static_cast<int>(w.e_pos.size()) != frame.m ||
        static_cast<int>(w.n_pos.size()) != frame.n) {
        fail(errc::wrong_step_counts, "EN word needs " + std::to_string(frame.m) + " E and " +
                                          std::to_string(frame.n) + " N letters, got " +
                                          std::to_string(w.e_pos.size()) + " and " +
                                          std::to_string(w.n_pos.size()));
    }
    return w;
}

SWWord base_sw_word(const Frame& frame) {
    std::string letters(frame.n, 'S');
    letters.append(frame.m, 'W');
    return make_sw_word(frame, letters);
}

PathWord sw_to_path(const SWWord& w) {
    std::vector<Step> steps;
    steps.reserve(w.letters.size());
    for (char ch : w.letters) steps.push_back(ch == 'S' ? Step::U : Step::D);
    return PathWord{w.frame, std::move(steps)};
}

SWWord path_to_sw(const PathWord& p) {
    std::string letters;
    letters.reserve(p.steps.size());
    for (Step s : p.steps) letters.push_back(s == Step::U ? 'S' : 'W');
    return make_sw_word(p.frame, letters);
}

std::string to_ud_string(const SWWord& w) {
    std::string out;
    out.reserve(w.letters.size());
    for (char ch : w.letters) out.push_back(ch == 'S' ? 'u' : 'd');
    return out;
}

}  // namespace sweepmap

#include "sweepmap/lattice.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace sweepmap {

Frame make_frame(long long m, long long n) {
    if (m < 1 || n < 1) {
        fail(errc::non_positive, "frame sides must be positive, got " + std::to_string(m) +
                                     "," + std::to_string(n));
    }
    if (m > 1000000 || n > 1000000) {
        fail(errc::non_positive, "frame sides out of supported range");
    }
    if (std::gcd(m, n) != 1) {
        fail(errc::non_coprime, "gcd(" + std::to_string(m) + "," + std::to_string(n) +
                                    ") = " + std::to_string(std::gcd(m, n)));
    }
    Frame f;
    f.m = static_cast<int>(m);
    f.n = static_cast<int>(n);
    f.k = f.m / f.n;
    f.d = f.m % f.n;
    return f;
}

bool is_fuss(const Frame& f) {
    return f.n == 1 || f.d == 1 || f.d == f.n - 1;
}

long long max_area(const Frame& f) {
    return static_cast<long long>(f.m - 1) * (f.n - 1) / 2;
}

namespace {

// -1 unknown, 0 up-ish (u/n/s), 1 down-ish (d/e/w)
int step_class(char ch) {
    switch (ch) {
        case 'u': case 'U': case 'n': case 'N': case 's': case 'S': return 0;
        case 'd': case 'D': case 'e': case 'E': case 'w': case 'W': return 1;
        default: return -1;
    }
}

}  // namespace

PathWord path_from_steps(const Frame& frame, std::vector<Step> steps) {
    int ups = 0;
    for (Step s : steps) ups += (s == Step::U);
    int downs = static_cast<int>(steps.size()) - ups;
    if (ups != frame.n || downs != frame.m) {
        fail(errc::wrong_step_counts, "expected " + std::to_string(frame.n) + " up and " +
                                          std::to_string(frame.m) + " down steps, got " +
                                          std::to_string(ups) + " and " + std::to_string(downs));
    }
    return PathWord{frame, std::move(steps)};
}

PathWord parse_path(std::string_view text, const Frame& frame) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (char ch : text) {
        int cls = step_class(ch);
        if (cls < 0) fail(errc::bad_alphabet, std::string("unexpected letter '") + ch + "'");
        steps.push_back(cls == 0 ? Step::U : Step::D);
    }
    return path_from_steps(frame, std::move(steps));
}

std::string to_string(const PathWord& p) {
    std::string out;
    out.reserve(p.steps.size());
    for (Step s : p.steps) out.push_back(s == Step::U ? 'u' : 'd');
    return out;
}

bool is_dyck(const PathWord& p) {
    long long r = 0;
    for (Step s : p.steps) {
        if (r < 0) return false;
        r += (s == Step::U) ? p.frame.m : -static_cast<long long>(p.frame.n);
    }
    return r >= 0;
}

long long area_by_squares(const PathWord& p) {
    if (!is_dyck(p)) fail(errc::not_dyck, "area by squares needs a Dyck path");
    long long area = 0;
    long long x = 0, y = 0;
    for (Step s : p.steps) {
        if (s == Step::U) {
            // full squares of this row: columns c >= x with n*(c+1) <= m*y
            long long reach = static_cast<long long>(p.frame.m) * y / p.frame.n;
            if (reach > x) area += reach - x;
            ++y;
        } else {
            ++x;
        }
    }
    return area;
}

PathWord transpose(const PathWord& p) {
    Frame t = make_frame(p.frame.n, p.frame.m);
    std::vector<Step> steps(p.steps.rbegin(), p.steps.rend());
    for (Step& s : steps) s = (s == Step::U) ? Step::D : Step::U;
    return PathWord{t, std::move(steps)};
}

void for_each_dyck(const Frame& frame, const std::function<bool(const PathWord&)>& visit) {
    PathWord word{frame, {}};
    word.steps.reserve(word_length(frame));
    bool stop = false;
    // r is the rank of the point the next step leaves from
    std::function<void(int, int, long long)> rec = [&](int ups, int downs, long long r) {
        if (stop) return;
        if (ups == 0 && downs == 0) {
            stop = !visit(word);
            return;
        }
        if (ups > 0) {
            word.steps.push_back(Step::U);
            rec(ups - 1, downs, r + frame.m);
            word.steps.pop_back();
            if (stop) return;
        }
        if (downs > 0 && r - frame.n >= 0) {
            word.steps.push_back(Step::D);
            rec(ups, downs - 1, r - frame.n);
            word.steps.pop_back();
        }
    };
    rec(frame.n, frame.m, 0);
}

std::vector<PathWord> enumerate_dyck(const Frame& frame) {
    std::vector<PathWord> out;
    for_each_dyck(frame, [&](const PathWord& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

unsigned long long count_dyck(const Frame& frame) {
    unsigned __int128 binom = 1;
    const unsigned __int128 cap = static_cast<unsigned __int128>(1) << 120;
    for (int i = 1; i <= frame.n; ++i) {
        binom = binom * static_cast<unsigned>(frame.m + i) / static_cast<unsigned>(i);
        if (binom > cap) throw std::overflow_error("count_dyck: frame too large");
    }
    unsigned __int128 result = binom / static_cast<unsigned>(frame.m + frame.n);
    if (result > std::numeric_limits<unsigned long long>::max()) {
        throw std::overflow_error("count_dyck: result does not fit 64 bits");
    }
    return static_cast<unsigned long long>(result);
}

}  // namespace sweepmap

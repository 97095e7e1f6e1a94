#include <string>
#include <vector>

#include "sweepmap/lattice.hpp"

namespace sweepmap {

std::string render_ascii(const PathWord& p) {
    const int m = p.frame.m;
    const int n = p.frame.n;
    const int rows = 2 * n + 1;
    const int cols = 2 * m + 1;
    std::vector<std::string> canvas(rows, std::string(cols, ' '));

    // canvas coordinates: lattice point (x, y) sits at row 2*(n-y), col 2*x
    for (int y = 0; y <= n; ++y) {
        for (int x = 0; x <= m; ++x) canvas[2 * (n - y)][2 * x] = '+';
    }

    // cells the diagonal passes through
    for (int y = 0; y < n; ++y) {
        for (int x = 0; x < m; ++x) {
            bool crossed = static_cast<long long>(n) * x < static_cast<long long>(m) * (y + 1) &&
                           static_cast<long long>(n) * (x + 1) > static_cast<long long>(m) * y;
            if (crossed) canvas[2 * (n - y) - 1][2 * x + 1] = '.';
        }
    }

    int x = 0, y = 0;
    for (Step s : p.steps) {
        if (s == Step::U) {
            canvas[2 * (n - y) - 1][2 * x] = '|';
            ++y;
        } else {
            canvas[2 * (n - y)][2 * x + 1] = '-';
            ++x;
        }
    }

    std::string out;
    for (auto& line : canvas) {
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

}  // namespace sweepmap

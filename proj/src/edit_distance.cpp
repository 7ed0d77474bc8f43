#include "seedaln/edit_distance.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace seedaln {

namespace {

inline bool bases_match(char a, char b) {
    return a == b && a != 'N' && b != 'N';
}

constexpr int64_t kUnreachable = INT64_MIN / 2;

}  // namespace

DistanceOutcome bounded_distance(std::string_view read,
                                 std::string_view reference_window,
                                 int d_limit, uint64_t* cells) {
    if (d_limit < 0)
        throw std::invalid_argument("bounded_distance: negative d_limit");

    const int64_t m = static_cast<int64_t>(read.size());
    const int64_t w = static_cast<int64_t>(reference_window.size());
    uint64_t touched = 0;

    // best[k + off] = farthest read index reachable on diagonal k
    // (window index = read index + k) with the current edit count.
    const int64_t off = d_limit + 1;
    std::vector<int64_t> best(2 * d_limit + 3, kUnreachable);
    std::vector<int64_t> next(2 * d_limit + 3, kUnreachable);

    auto slide = [&](int64_t i, int64_t k) {
        int64_t cap = std::min(m, w - k);
        while (i < cap && bases_match(read[i], reference_window[i + k])) {
            ++i;
            ++touched;
        }
        return i;
    };

    int result = -1;
    for (int e = 0; e <= d_limit && result < 0; ++e) {
        for (int64_t k = -e; k <= e; ++k) {
            if (k > w) continue;  // whole diagonal outside the window
            int64_t cand;
            if (e == 0) {
                cand = 0;
            } else {
                cand = best[k + off] + 1;                      // substitution
                cand = std::max(cand, best[k + 1 + off] + 1);  // extra read char
                cand = std::max(cand, best[k - 1 + off]);      // extra window char
            }
            if (cand < std::max<int64_t>(0, -k)) {
                next[k + off] = kUnreachable;
                continue;
            }
            cand = std::min(cand, std::min(m, w - k));
            cand = slide(cand, k);
            ++touched;
            next[k + off] = cand;
            if (cand == m) {
                result = e;
                break;
            }
        }
        std::swap(best, next);
    }

    if (cells) *cells += touched;
    if (result < 0) return std::nullopt;
    return result;
}

int full_dp_distance(std::string_view read, std::string_view reference_window) {
    const size_t m = read.size();
    const size_t w = reference_window.size();

    // row[j] = Levenshtein(read[0..i), window[0..j)); answer is the
    // minimum of the last row (window end is free).
    std::vector<int> row(w + 1), prev(w + 1);
    for (size_t j = 0; j <= w; ++j) prev[j] = static_cast<int>(j);
    for (size_t i = 1; i <= m; ++i) {
        row[0] = static_cast<int>(i);
        for (size_t j = 1; j <= w; ++j) {
            int sub = prev[j - 1] +
                      (bases_match(read[i - 1], reference_window[j - 1]) ? 0 : 1);
            row[j] = std::min({sub, prev[j] + 1, row[j - 1] + 1});
        }
        std::swap(row, prev);
    }
    return *std::min_element(prev.begin(), prev.end());
}

}  // namespace seedaln

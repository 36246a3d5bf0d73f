#include "nearcover/solver.hpp"

#include <algorithm>
#include <unordered_map>

namespace nearcover {

namespace {

// Minimum number of plane lines covering the masked points. Complete:
// every cover owns a line through the first uncovered point, and all
// p^k + p^{k-1} lines through that point are tried.
int min_cover(const std::vector<std::vector<std::uint64_t>>& point_lines,
              const std::vector<std::uint64_t>& line_masks, std::uint64_t mask,
              std::unordered_map<std::uint64_t, int>& memo) {
    if (mask == 0) return 0;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    const int first = std::countr_zero(mask);
    int best = 1 + min_cover(point_lines, line_masks,
                             mask & ~(std::uint64_t(1) << first), memo);
    for (std::uint64_t li : point_lines[static_cast<std::size_t>(first)]) {
        const int c = 1 + min_cover(point_lines, line_masks, mask & ~line_masks[li], memo);
        best = std::min(best, c);
    }
    memo.emplace(mask, best);
    return best;
}

} // namespace

std::optional<int> oracle_min_line_cover(const RingCtx& R, std::span<const PadicPoint> S,
                                         int t_max) {
    if (R.modulus > 27)
        throw ContextTooLarge("oracle enumerates the whole plane; needs p^k <= 27");
    if (t_max < 0) throw BadParameters("line budget must be non-negative");

    std::vector<PadicPoint> pts(S.begin(), S.end());
    for (PadicPoint& x : pts) x = reduce(R, x);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() > 64) throw ContextTooLarge("oracle handles at most 64 points");
    if (pts.empty()) return 0;

    const std::vector<PadicLine> lines = all_lines(R);
    std::vector<std::uint64_t> line_masks(lines.size(), 0);
    std::vector<std::vector<std::uint64_t>> point_lines(pts.size());
    for (std::size_t li = 0; li < lines.size(); ++li) {
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (line_contains(R, lines[li], pts[i])) {
                line_masks[li] |= std::uint64_t(1) << i;
                point_lines[i].push_back(li);
            }
        }
    }

    std::uint64_t full = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) full |= std::uint64_t(1) << i;
    std::unordered_map<std::uint64_t, int> memo;
    const int best = min_cover(point_lines, line_masks, full, memo);
    if (best > t_max) return std::nullopt;
    return best;
}

} // namespace nearcover

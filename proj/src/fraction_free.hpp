#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace monoalg::detail {

/// Result of fraction-free Gauss-Jordan elimination. Pivot row k holds `den`
/// at column pivots[k] and zero in every other pivot column; the rational
/// reduced row echelon form is rows[k] / den.
struct FractionFree {
  std::vector<std::vector<std::int64_t>> rows;
  std::vector<std::size_t> pivots;
  std::int64_t den = 1;
};

/// Pivots greedily on columns [0, pivot_cols) in order, so the pivot columns
/// match ordinary rational elimination. Every intermediate entry is a minor
/// of the input, which keeps the divisions exact. Returns nullopt when an
/// entry leaves int64.
inline std::optional<FractionFree> fraction_free_reduce(std::vector<std::vector<std::int64_t>> rows,
                                                        std::size_t pivot_cols) {
  FractionFree out;
  for (const auto& row : rows)
    for (auto v : row)
      if (v == INT64_MIN) return std::nullopt;
  std::size_t pr = 0;
  std::int64_t prev = 1;
  for (std::size_t c = 0; c < pivot_cols && pr < rows.size(); ++c) {
    std::size_t sel = pr;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[pr], rows[sel]);
    const std::int64_t p = rows[pr][c];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pr) continue;
      const std::int64_t f = rows[r][c];
      for (std::size_t j = 0; j < rows[r].size(); ++j) {
        const __int128 v = (static_cast<__int128>(p) * rows[r][j] - static_cast<__int128>(f) * rows[pr][j]) / prev;
        if (v > INT64_MAX || v <= INT64_MIN) return std::nullopt;
        rows[r][j] = static_cast<std::int64_t>(v);
      }
    }
    prev = p;
    out.pivots.push_back(c);
    ++pr;
  }
  out.den = prev;
  out.rows = std::move(rows);
  return out;
}

}  // namespace monoalg::detail

#include "monoalg/simplex.hpp"

#include <cstdint>
#include <optional>

#include "monoalg/errors.hpp"

namespace monoalg {

namespace {

// The same phase-one method on a fraction-free tableau: every entry is its
// true value times the current denominator (the last pivot), which keeps the
// tableau integral and makes each update an exact division. Returns nullopt
// when a value leaves the int64 range.
std::optional<bool> in_cone_int64(std::span<const IntVector> generators, const IntVector& target) {
  const std::size_t m = target.size();
  const std::size_t k = generators.size();
  const std::size_t width = k + m + 1;
  std::vector<std::int64_t> tab(m * width, 0), cost(width, 0);
  auto at = [&](std::size_t r, std::size_t j) -> std::int64_t& { return tab[r * width + j]; };
  for (std::size_t r = 0; r < m; ++r) {
    if (!target[r].fits_slong_p()) return std::nullopt;
    const std::int64_t sign = target[r] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < k; ++j) {
      if (!generators[j][r].fits_slong_p()) return std::nullopt;
      at(r, j) = sign * generators[j][r].get_si();
    }
    at(r, k + r) = 1;
    at(r, k + m) = sign * target[r].get_si();
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) basis[r] = k + r;
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j < width; ++j)
      if ((j < k || j == k + m) && __builtin_sub_overflow(cost[j], at(r, j), &cost[j])) return std::nullopt;

  // (p*a - f*b) / den, exact by construction
  auto update = [](std::int64_t a, std::int64_t b, std::int64_t p, std::int64_t f, std::int64_t den,
                   std::int64_t& out) {
    __int128 v = static_cast<__int128>(p) * a - static_cast<__int128>(f) * b;
    v /= den;
    if (v > INT64_MAX || v < INT64_MIN) return false;
    out = static_cast<std::int64_t>(v);
    return true;
  };

  std::int64_t den = 1;
  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < k + m; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;

    std::size_t leave = m;
    for (std::size_t r = 0; r < m; ++r) {
      if (at(r, enter) <= 0) continue;
      if (leave == m) {
        leave = r;
        continue;
      }
      // compare rhs_r / a_r with rhs_l / a_l, both denominators positive
      const __int128 lhs = static_cast<__int128>(at(r, k + m)) * at(leave, enter);
      const __int128 rhs = static_cast<__int128>(at(leave, k + m)) * at(r, enter);
      if (lhs < rhs || (lhs == rhs && basis[r] < basis[leave])) leave = r;
    }
    if (leave == m) break;

    const std::int64_t p = at(leave, enter);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == leave) continue;
      const std::int64_t f = at(r, enter);
      for (std::size_t j = 0; j < width; ++j)
        if (!update(at(r, j), at(leave, j), p, f, den, at(r, j))) return std::nullopt;
    }
    const std::int64_t f = cost[enter];
    for (std::size_t j = 0; j < width; ++j)
      if (!update(cost[j], at(leave, j), p, f, den, cost[j])) return std::nullopt;
    den = p;
    basis[leave] = enter;
  }
  return cost[k + m] == 0;
}

}  // namespace

// Feasibility of W*mu = v, mu >= 0, W = [generators as columns]. Rows are
// sign-normalized so the artificial basis starts feasible; the problem is
// feasible iff phase one drives the artificial sum to zero.
bool in_rational_cone(std::span<const IntVector> generators, const IntVector& target) {
  const std::size_t m = target.size();
  const std::size_t k = generators.size();
  for (const auto& g : generators)
    if (g.size() != m) throw Error(ErrorKind::DimensionMismatch, "cone generator length mismatch");

  bool zero_target = true;
  for (const auto& v : target) zero_target = zero_target && v == 0;
  if (zero_target) return true;
  if (k == 0) return false;
  if (auto fast = in_cone_int64(generators, target)) return *fast;

  // tableau columns: k structural, m artificial, then rhs
  const std::size_t width = k + m + 1;
  std::vector<RatVector> tab(m, RatVector(width));
  for (std::size_t r = 0; r < m; ++r) {
    const int sign = target[r] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < k; ++j) tab[r][j] = sign * generators[j][r];
    tab[r][k + r] = 1;
    tab[r][k + m] = sign * target[r];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) basis[r] = k + r;

  // reduced costs of minimizing the artificial sum
  RatVector cost(width);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j < width; ++j)
      if (j < k || j == k + m) cost[j] -= tab[r][j];

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < k + m; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;

    std::size_t leave = m;
    Rational best;
    for (std::size_t r = 0; r < m; ++r) {
      if (tab[r][enter] <= 0) continue;
      Rational ratio = tab[r][k + m] / tab[r][enter];
      if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction cannot occur in phase one

    const Rational piv = tab[leave][enter];
    for (auto& v : tab[leave]) v /= piv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == leave || tab[r][enter] == 0) continue;
      const Rational f = tab[r][enter];
      for (std::size_t j = 0; j < width; ++j) tab[r][j] -= f * tab[leave][j];
    }
    if (cost[enter] != 0) {
      const Rational f = cost[enter];
      for (std::size_t j = 0; j < width; ++j) cost[j] -= f * tab[leave][j];
    }
    basis[leave] = enter;
  }
  // cost[rhs] holds minus the artificial sum
  return cost[k + m] == 0;
}

}  // namespace monoalg

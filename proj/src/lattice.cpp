#include "monoalg/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <utility>

#include "fraction_free.hpp"
#include "monoalg/errors.hpp"

namespace monoalg {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::span<const IntVector> rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw Error(ErrorKind::DimensionMismatch, "rows of differing length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
  IntMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

Integer determinant(const IntMatrix& input) {
  if (input.rows() != input.cols())
    throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
    prev = m(k, k);
  }
  Integer det = m(n - 1, n - 1);
  return sign > 0 ? det : Integer(-det);
}

namespace {

// Gauss-Jordan on rational rows in place; returns pivot columns.
std::vector<std::size_t> reduce_rows(std::vector<RatVector>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < ncols && pr < rows.size(); ++c) {
    std::size_t sel = pr;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[pr], rows[sel]);
    const Rational inv = 1 / rows[pr][c];
    for (auto& v : rows[pr]) v *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pr || rows[r][c] == 0) continue;
      const Rational f = rows[r][c];
      for (std::size_t k = c; k < rows[r].size(); ++k) rows[r][k] -= f * rows[pr][k];
    }
    pivots.push_back(c);
    ++pr;
  }
  return pivots;
}

std::vector<RatVector> to_rational_rows(const IntMatrix& m) {
  std::vector<RatVector> rows(m.rows(), RatVector(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m(r, c);
  return rows;
}

struct SolveOutcome {
  bool consistent = false;
  bool unique = false;
  RatVector solution;
};

std::optional<std::vector<std::vector<std::int64_t>>> machine_rows(const IntMatrix& m, const IntVector* rhs) {
  std::vector<std::vector<std::int64_t>> rows(m.rows(), std::vector<std::int64_t>(m.cols() + (rhs ? 1 : 0)));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).fits_slong_p()) return std::nullopt;
      rows[r][c] = m(r, c).get_si();
    }
    if (rhs) {
      if (!(*rhs)[r].fits_slong_p()) return std::nullopt;
      rows[r][m.cols()] = (*rhs)[r].get_si();
    }
  }
  return rows;
}

SolveOutcome solve_system(const IntMatrix& m, const IntVector& b) {
  if (b.size() != m.rows())
    throw Error(ErrorKind::DimensionMismatch, "right-hand side length differs from row count");
  const std::size_t n = m.cols();
  if (auto rows = machine_rows(m, &b))
    if (auto ff = detail::fraction_free_reduce(std::move(*rows), n + 1)) {
      SolveOutcome out;
      if (!ff->pivots.empty() && ff->pivots.back() == n) return out;
      out.consistent = true;
      out.unique = ff->pivots.size() == n;
      out.solution.assign(n, Rational(0));
      for (std::size_t k = 0; k < ff->pivots.size(); ++k) {
        Rational q(Integer(static_cast<long>(ff->rows[k][n])), Integer(static_cast<long>(ff->den)));
        q.canonicalize();
        out.solution[ff->pivots[k]] = std::move(q);
      }
      return out;
    }
  std::vector<RatVector> rows(m.rows(), RatVector(n + 1));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) rows[r][c] = m(r, c);
    rows[r][n] = b[r];
  }
  const auto pivots = reduce_rows(rows, n + 1);
  SolveOutcome out;
  if (!pivots.empty() && pivots.back() == n) return out;
  out.consistent = true;
  out.unique = pivots.size() == n;
  out.solution.assign(n, Rational(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) out.solution[pivots[k]] = rows[k][n];
  return out;
}

}  // namespace

std::size_t rank(const IntMatrix& m) {
  if (auto rows = machine_rows(m, nullptr))
    if (auto ff = detail::fraction_free_reduce(std::move(*rows), m.cols())) return ff->pivots.size();
  auto rows = to_rational_rows(m);
  return reduce_rows(rows, m.cols()).size();
}

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  SmithForm s{IntMatrix::identity(nr), m, IntMatrix::identity(nc)};
  IntMatrix& d = s.diagonal;
  const std::size_t steps = std::min(nr, nc);

  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // smallest nonzero magnitude in the trailing block becomes the pivot
      std::size_t pi = nr, pj = nc;
      for (std::size_t i = t; i < nr; ++i)
        for (std::size_t j = t; j < nc; ++j)
          if (d(i, j) != 0 && (pi == nr || abs(d(i, j)) < abs(d(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == nr) return s;
      d.swap_rows(t, pi);
      s.left.swap_rows(t, pi);
      d.swap_cols(t, pj);
      s.right.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < nr; ++i) {
        if (d(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        d.add_row_multiple(i, t, -q);
        s.left.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < nc; ++j) {
        if (d(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        d.add_col_multiple(j, t, -q);
        s.right.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // pivot must divide the whole trailing block for the divisibility chain
      std::size_t bad = nr;
      for (std::size_t i = t + 1; i < nr && bad == nr; ++i)
        for (std::size_t j = t + 1; j < nc; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == nr) break;
      d.add_row_multiple(t, bad, 1);
      s.left.add_row_multiple(t, bad, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.left.negate_row(t);
    }
  }
  return s;
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  const std::size_t nr = h.rows(), nc = h.cols();
  std::size_t pr = 0;
  for (std::size_t c = 0; c < nc && pr < nr; ++c) {
    for (;;) {
      std::size_t sel = nr;
      for (std::size_t i = pr; i < nr; ++i)
        if (h(i, c) != 0 && (sel == nr || abs(h(i, c)) < abs(h(sel, c)))) sel = i;
      if (sel == nr) break;
      h.swap_rows(pr, sel);
      bool clean = true;
      for (std::size_t i = pr + 1; i < nr; ++i) {
        if (h(i, c) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(pr, c).get_mpz_t());
        h.add_row_multiple(i, pr, -q);
        if (h(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(pr, c) == 0) continue;
    if (h(pr, c) < 0) h.negate_row(pr);
    for (std::size_t i = 0; i < pr; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(pr, c).get_mpz_t());
      h.add_row_multiple(i, pr, -q);
    }
    ++pr;
  }
  IntMatrix out(pr, nc);
  for (std::size_t r = 0; r < pr; ++r)
    for (std::size_t c = 0; c < nc; ++c) out(r, c) = h(r, c);
  return out;
}

IntMatrix lattice_basis(std::span<const IntVector> vectors, std::size_t dim) {
  return hermite_normal_form(IntMatrix::from_rows(vectors, dim));
}

std::optional<IntVector> lattice_coordinates(const IntMatrix& basis, const IntVector& x) {
  if (x.size() != basis.cols())
    throw Error(ErrorKind::DimensionMismatch, "vector length differs from lattice dimension");
  IntVector rest = x;
  IntVector coords(basis.rows());
  std::size_t col = 0;
  for (std::size_t k = 0; k < basis.rows(); ++k) {
    while (basis(k, col) == 0) ++col;
    if (!mpz_divisible_p(rest[col].get_mpz_t(), basis(k, col).get_mpz_t())) return std::nullopt;
    coords[k] = rest[col] / basis(k, col);
    for (std::size_t c = col; c < basis.cols(); ++c) rest[c] -= coords[k] * basis(k, c);
  }
  for (const auto& v : rest)
    if (v != 0) return std::nullopt;
  return coords;
}

Integer FiniteAbelianGroup::order() const {
  Integer o = 1;
  for (const auto& f : factors_) o *= f;
  return o;
}

CosetLabel FiniteAbelianGroup::project(const IntVector& x) const {
  const auto coords = lattice_coordinates(basis_, x);
  if (!coords) throw Error(ErrorKind::NotInLattice, "vector is outside the ambient lattice");
  CosetLabel label(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    Integer acc = 0;
    for (std::size_t k = 0; k < coords->size(); ++k) acc += (*coords)[k] * columns_[i][k];
    Integer res;
    mpz_fdiv_r(res.get_mpz_t(), acc.get_mpz_t(), factors_[i].get_mpz_t());
    label[i] = res.get_si();
  }
  return label;
}

CosetLabel FiniteAbelianGroup::project(std::span<const std::int64_t> x) const {
  if (basis64_.size() != basis_.rows() || x.size() != basis_.cols()) {
    IntVector big;
    for (auto v : x) big.emplace_back(static_cast<long>(v));
    return project(big);
  }
  std::vector<std::int64_t> rest(x.begin(), x.end()), coords(basis64_.size());
  std::size_t col = 0;
  for (std::size_t k = 0; k < basis64_.size(); ++k) {
    const auto& row = basis64_[k];
    while (row[col] == 0) ++col;
    if (rest[col] % row[col] != 0) throw Error(ErrorKind::NotInLattice, "vector is outside the ambient lattice");
    coords[k] = rest[col] / row[col];
    for (std::size_t c = col; c < row.size(); ++c) {
      std::int64_t prod;
      if (__builtin_mul_overflow(coords[k], row[c], &prod) || __builtin_sub_overflow(rest[c], prod, &rest[c])) {
        IntVector big;
        for (auto v : x) big.emplace_back(static_cast<long>(v));
        return project(big);
      }
    }
  }
  for (auto v : rest)
    if (v != 0) throw Error(ErrorKind::NotInLattice, "vector is outside the ambient lattice");
  CosetLabel label(factors64_.size());
  for (std::size_t i = 0; i < factors64_.size(); ++i) {
    __int128 acc = 0;
    for (std::size_t k = 0; k < coords.size(); ++k)
      acc = (acc + static_cast<__int128>(coords[k]) * columns64_[i][k]) % factors64_[i];
    if (acc < 0) acc += factors64_[i];
    label[i] = static_cast<std::int64_t>(acc);
  }
  return label;
}

Integer FiniteAbelianGroup::element_order(const IntVector& x) const {
  const auto label = project(x);
  Integer ord = 1;
  for (std::size_t i = 0; i < label.size(); ++i) {
    Integer g = gcd(Integer(label[i]), factors_[i]);
    ord = lcm(ord, Integer(factors_[i] / g));
  }
  return ord;
}

FiniteAbelianGroup quotient_group(const IntMatrix& sup, std::span<const IntVector> sub) {
  FiniteAbelianGroup g;
  g.basis_ = hermite_normal_form(sup);
  const std::size_t k = g.basis_.rows();

  IntMatrix coords(sub.size(), k);
  for (std::size_t r = 0; r < sub.size(); ++r) {
    const auto c = lattice_coordinates(g.basis_, sub[r]);
    if (!c) throw Error(ErrorKind::NotInLattice, "sublattice generator outside the lattice");
    for (std::size_t j = 0; j < k; ++j) coords(r, j) = (*c)[j];
  }
  if (rank(coords) < k)
    throw Error(ErrorKind::InfiniteQuotient, "sublattice has smaller rank than the lattice");

  const SmithForm snf = smith_normal_form(coords);
  for (std::size_t i = 0; i < k; ++i) {
    const Integer& di = snf.diagonal(i, i);
    if (di == 1) continue;
    if (!di.fits_slong_p())
      throw Error(ErrorKind::Overflow, "invariant factor exceeds the coset label range");
    g.factors_.push_back(di);
    g.columns_.push_back(snf.right.column(i));
  }

  auto fits = [](const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& e) { return e.fits_slong_p(); });
  };
  auto narrow = [](const IntVector& v) {
    std::vector<std::int64_t> out;
    for (const auto& e : v) out.push_back(e.get_si());
    return out;
  };
  std::vector<std::vector<std::int64_t>> basis64;
  bool ok = true;
  for (std::size_t r = 0; r < k && ok; ++r) {
    const IntVector row = g.basis_.row(r);
    ok = fits(row);
    if (ok) basis64.push_back(narrow(row));
  }
  for (std::size_t i = 0; i < g.columns_.size() && ok; ++i) ok = fits(g.columns_[i]);
  if (ok) {
    g.basis64_ = std::move(basis64);
    for (const auto& c : g.columns_) g.columns64_.push_back(narrow(c));
    for (const auto& f : g.factors_) g.factors64_.push_back(f.get_si());
  }
  return g;
}

std::optional<RatVector> solve_rational(const IntMatrix& m, const IntVector& b) {
  auto out = solve_system(m, b);
  if (!out.consistent) return std::nullopt;
  if (!out.unique)
    throw Error(ErrorKind::AmbiguousSolution, "columns are linearly dependent");
  return std::move(out.solution);
}

std::optional<RatVector> solve_rational_any(const IntMatrix& m, const IntVector& b) {
  auto out = solve_system(m, b);
  if (!out.consistent) return std::nullopt;
  return std::move(out.solution);
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

}  // namespace monoalg

#pragma once

// Exact integer and rational linear algebra over GMP: Smith and Hermite
// normal forms, lattice bases, finite quotient groups and linear solves.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace monoalg {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Residues modulo the invariant factors of a finite abelian group. The
/// empty tuple labels the single coset of the trivial group.
using CosetLabel = std::vector<std::int64_t>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  /// All rows must share a length; `cols` fixes the width when `rows` is empty.
  static IntMatrix from_rows(std::span<const IntVector> rows, std::size_t cols = 0);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  IntMatrix transpose() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Determinant of a square matrix (fraction-free Bareiss elimination).
Integer determinant(const IntMatrix& m);

/// Rank over Q.
std::size_t rank(const IntMatrix& m);

struct SmithForm {
  IntMatrix left;      // U, unimodular
  IntMatrix diagonal;  // D = U * M * V
  IntMatrix right;     // V, unimodular
};

/// U*M*V = D with D diagonal, nonnegative and each diagonal entry dividing
/// the next. Zero diagonal entries (rank deficiency) come last.
SmithForm smith_normal_form(const IntMatrix& m);

/// Row-style Hermite normal form of the row lattice of `m`: zero rows are
/// dropped, pivots strictly move right, pivots are positive and entries above
/// a pivot lie in [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Basis (as HNF rows) of the integer lattice generated by `vectors`.
IntMatrix lattice_basis(std::span<const IntVector> vectors, std::size_t dim);

/// Integer coordinates of `x` against HNF basis rows, or nullopt when `x` is
/// not in the lattice.
std::optional<IntVector> lattice_coordinates(const IntMatrix& hnf_basis, const IntVector& x);

/// G = L / L' for a sublattice L' of full rank inside L.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;

  /// Invariant factors >= 2, each dividing the next.
  const std::vector<Integer>& invariant_factors() const noexcept { return factors_; }
  Integer order() const;

  /// Coset label of an ambient vector of L. Throws NotInLattice otherwise.
  CosetLabel project(const IntVector& x) const;
  CosetLabel project(std::span<const std::int64_t> x) const;

  /// Order of the class of `x` (1 for elements of the sublattice).
  Integer element_order(const IntVector& x) const;

 private:
  friend FiniteAbelianGroup quotient_group(const IntMatrix&, std::span<const IntVector>);

  IntMatrix basis_;                // HNF rows of L
  std::vector<Integer> factors_;   // nontrivial invariant factors
  std::vector<IntVector> columns_; // columns of V feeding each factor
  // machine-word copies, empty when some entry does not fit
  std::vector<std::vector<std::int64_t>> basis64_, columns64_;
  std::vector<std::int64_t> factors64_;
};

/// Throws InfiniteQuotient when rank(sub) < rank(sup) and NotInLattice when a
/// generator of `sub` lies outside the lattice spanned by `sup`.
FiniteAbelianGroup quotient_group(const IntMatrix& sup, std::span<const IntVector> sub);

/// Unique rational r with M*r = b, treating the columns of M as the unknowns'
/// coefficients. Returns nullopt when b is outside the column span; throws
/// AmbiguousSolution when the columns are dependent and b is in their span.
std::optional<RatVector> solve_rational(const IntMatrix& m, const IntVector& b);

/// Some rational solution of M*r = b (free variables set to zero), or nullopt
/// when the system is inconsistent.
std::optional<RatVector> solve_rational_any(const IntMatrix& m, const IntVector& b);

std::string to_string(const Rational& q);

}  // namespace monoalg

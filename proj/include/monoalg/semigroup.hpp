#pragma once

// Positive affine semigroups B = <b_1, ..., b_n> in N^m: validation, the
// membership oracle, cone geometry, the frame A and the module generators B_A.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "monoalg/lattice.hpp"

namespace monoalg {

/// A lattice point with machine-size coordinates. Arithmetic on points is
/// overflow-checked; the lattice algorithms promote to Integer.
using Point = std::vector<std::int64_t>;

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept;
};

IntVector to_int_vector(const Point& p);
Point add_points(const Point& a, const Point& b);
Point subtract_points(const Point& a, const Point& b);
bool dominates(const Point& a, const Point& b);  // a >= b componentwise
bool is_zero(const Point& p);
std::int64_t coordinate_sum(const Point& p);
std::string to_string(const Point& p);

class AffineSemigroup {
 public:
  /// Throws EmptyInput, DimensionMismatch, NegativeEntry, ZeroGenerator or
  /// DuplicateGenerator.
  static AffineSemigroup validate(std::vector<Point> generators);

  std::size_t ambient_dim() const noexcept;
  std::size_t size() const noexcept;
  const std::vector<Point>& generators() const noexcept;
  const Point& generator(std::size_t i) const { return generators()[i]; }

  /// HNF basis of the group G(B).
  const IntMatrix& group_basis() const;
  std::size_t rank() const;

  /// x in B, by memoized descent: x = 0 or x - b_i in B for some b_i <= x.
  /// Throws DimensionMismatch.
  bool member(const Point& x) const;

 private:
  struct State;
  explicit AffineSemigroup(std::shared_ptr<State> state) : state_(std::move(state)) {}
  std::shared_ptr<State> state_;
};

/// Linearly independent generators e_1..e_d, one per extreme ray, with an
/// exact solver for lambda-coordinates.
class Frame {
 public:
  Frame() = default;
  Frame(std::vector<Point> elements, std::vector<std::size_t> generator_indices);

  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<Point>& elements() const noexcept { return elements_; }
  const Point& element(std::size_t k) const { return elements_[k]; }
  const std::vector<std::size_t>& generator_indices() const noexcept { return indices_; }

  /// Unique lambda with sum lambda_k e_k = x. Throws OutsideSpan.
  RatVector lambda(const Point& x) const;
  /// sum lambda_k e_k; throws Overflow if the result is not integral.
  Point combine(const RatVector& lambda) const;

 private:
  std::vector<Point> elements_;
  std::vector<std::size_t> indices_;
  std::vector<std::size_t> pivot_rows_;
  std::vector<RatVector> inverse_;  // inverse of the frame restricted to pivot rows
  bool invert_machine_words();

  // the same inverse as machine integers over one denominator, when it fits
  std::vector<std::int64_t> inverse_num_;
  std::int64_t inverse_den_ = 0;
};

struct DegreeFunctional {
  RatVector coefficients;

  Rational evaluate(const Point& x) const;
  /// Integer degree; throws NotHomogeneous when the value is fractional.
  std::int64_t degree(const Point& x) const;
};

/// One generator index per extreme ray of C(B): the coordinate-sum-minimal
/// generator on the ray (lexicographic tie-break). Rays are listed in
/// descending lexicographic order of their primitive directions, so the
/// coordinate axes come out as e_1, e_2, ... in order.
std::vector<std::size_t> extreme_rays(const AffineSemigroup& b);

bool is_simplicial(const AffineSemigroup& b);

/// Throws NotSimplicial.
Frame select_frame(const AffineSemigroup& b);

RatVector lambda_coords(const Frame& frame, const Point& x);

std::optional<DegreeFunctional> degree_functional(const AffineSemigroup& b);

/// Indices i with b_i in the semigroup generated by the other generators.
std::vector<std::size_t> minimalize_check(const AffineSemigroup& b);

/// G(B)/G(A) for the frame's free subsemigroup A.
FiniteAbelianGroup frame_quotient(const AffineSemigroup& b, const Frame& frame);

/// B_A = {x in B : x - e_k not in B for all k}, in descending lexicographic
/// order (the canonical point order, which lists x_1-heavy points first).
std::vector<Point> module_generators(const AffineSemigroup& b, const Frame& frame);

}  // namespace monoalg

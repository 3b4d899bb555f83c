#pragma once

// K[B] as a direct sum of shifted monomial ideals I_g(-h_g) over the
// polynomial ring K[A] of a simplicial frame, one summand per coset g of
// G(B)/G(A).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "monoalg/lattice.hpp"
#include "monoalg/semigroup.hpp"

namespace monoalg {

/// Monomial ideal of K[x_1..x_d] given by its minimal exponent vectors in
/// descending lexicographic order. The unit ideal is {0}.
struct MonomialIdeal {
  std::size_t num_vars = 0;
  std::vector<Point> gens;

  static MonomialIdeal unit(std::size_t d);
  static MonomialIdeal maximal(std::size_t d);

  bool is_unit() const;
  /// gens are exactly the d unit vectors
  bool is_maximal() const;
  bool contains(const Point& exponent) const;
  bool is_antichain() const;

  /// "ideal 1" or "ideal (x_1^2, x_2)"
  std::string to_string() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
  friend auto operator<=>(const MonomialIdeal&, const MonomialIdeal&) = default;
};

struct Summand {
  CosetLabel coset;
  std::vector<Point> gamma;  // B_A elements of the coset, descending lex
  Point shift;               // h_g
  RatVector shift_lambda;    // lambda(h_g)
  MonomialIdeal ideal;
  std::optional<std::int64_t> shift_degree;
};

struct Decomposition {
  Frame frame;
  FiniteAbelianGroup group;
  std::vector<Point> module_generators;  // B_A
  std::vector<Summand> summands;         // sorted by coset label

  std::size_t group_order() const { return summands.size(); }
  const Summand* find(const CosetLabel& coset) const;
};

/// Throws NotSimplicial.
Decomposition decompose(const AffineSemigroup& b);

/// deg h_g per coset. Throws NotHomogeneous when a shift has fractional degree.
std::map<CosetLabel, std::int64_t> shift_degrees(const Decomposition& d, const DegreeFunctional& f);

/// Compares #{b in B : deg b = t} with sum_g #{monomials of I_g of degree
/// t - deg h_g} for 0 <= t <= t_max. Throws NotHomogeneous when f is not 1
/// on every generator.
bool hilbert_verify(const AffineSemigroup& b, const Decomposition& d, const DegreeFunctional& f,
                    int t_max);

/// Number of elements of B of each degree 0..t_max, by sums of generators.
std::vector<std::int64_t> semigroup_degree_counts(const AffineSemigroup& b, const DegreeFunctional& f,
                                                  int t_max);

/// Number of monomials of total degree s in the ideal.
std::int64_t ideal_monomials_of_degree(const MonomialIdeal& ideal, std::int64_t s);

}  // namespace monoalg

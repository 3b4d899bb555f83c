#pragma once

// Independent cross-checks run by `--verify`: a second route to each of the
// main computations.

#include <optional>
#include <vector>

#include "monoalg/decomposition.hpp"
#include "monoalg/homology.hpp"

namespace monoalg {

/// B_A by enumerating the box sum n_i b_i with 0 <= n_i < D_i, where D_i is
/// the order of [b_i] in G(B)/G(A), and filtering by minimality.
std::vector<Point> module_generators_box(const AffineSemigroup& b, const Frame& frame,
                                         const FiniteAbelianGroup& group);

/// For each lcm-lattice multidegree, sum_i (-1)^i beta_{i,b} equals the
/// Euler characteristic of the Taylor complex at b.
bool betti_euler_check(const MonomialIdeal& ideal, Characteristic ch);

struct VerificationReport {
  bool module_generators_agree = false;
  bool betti_euler = false;
  std::optional<bool> hilbert;  // only for homogeneous semigroups
  int t_max = 0;

  bool ok() const { return module_generators_agree && betti_euler && hilbert.value_or(true); }
};

VerificationReport verify(const AffineSemigroup& b, const Decomposition& d, Characteristic ch, int t_max);

}  // namespace monoalg

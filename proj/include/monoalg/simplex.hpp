#pragma once

#include <span>

#include "monoalg/lattice.hpp"

namespace monoalg {

/// Exact test whether `target` lies in the rational cone spanned by
/// `generators` (phase-one simplex over Q with Bland's rule).
bool in_rational_cone(std::span<const IntVector> generators, const IntVector& target);

}  // namespace monoalg

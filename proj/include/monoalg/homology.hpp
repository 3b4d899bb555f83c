#pragma once

// Betti numbers of monomial ideals from the reduced homology of upper-Koszul
// simplicial complexes, and the regularity / degree / codimension / depth
// report built on the decomposition.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "monoalg/decomposition.hpp"

namespace monoalg {

/// Field characteristic: 0 (rationals) or a prime.
struct Characteristic {
  std::uint32_t value = 0;

  /// Throws InvalidCharacteristic for 1 and composite numbers.
  static Characteristic of(std::uint64_t p);
};

/// Graded Betti numbers beta_{i,j}, only nonzero entries stored.
class BettiTable {
 public:
  using Key = std::pair<int, std::int64_t>;  // (homological index, total degree)

  void add(int i, std::int64_t j, std::int64_t rank);
  std::int64_t at(int i, std::int64_t j) const;
  const std::map<Key, std::int64_t>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<Key, std::int64_t> entries_;
};

/// beta_{i,b} per multidegree b of the lcm lattice (nonzero entries only).
std::map<Point, std::map<int, std::int64_t>> betti_multigraded(const MonomialIdeal& ideal,
                                                              Characteristic ch);

BettiTable betti_ideal(const MonomialIdeal& ideal, Characteristic ch);

/// max(j - i); throws Internal on an empty table.
std::int64_t reg_of(const BettiTable& table);
int projective_dimension(const BettiTable& table);
/// d - pd via Auslander-Buchsbaum over the d-variable frame ring.
int depth_of(const BettiTable& table, std::size_t num_vars);

struct RegularityWitness {
  CosetLabel coset;
  std::int64_t ideal_regularity = 0;
  std::int64_t shift_degree = 0;
};

struct RegularityReport {
  std::int64_t regularity = 0;
  std::vector<RegularityWitness> witnesses;
  std::int64_t degree = 0;
  std::int64_t codim = 0;
  std::int64_t eg_bound = 0;
  bool eg_holds = false;
  std::int64_t depth = 0;
};

/// Throws NotSimplicial, NotHomogeneous or NonMinimalGenerators.
RegularityReport analyze(const AffineSemigroup& b, Characteristic ch);
RegularityReport analyze(const AffineSemigroup& b, const Decomposition& d, Characteristic ch);

}  // namespace monoalg

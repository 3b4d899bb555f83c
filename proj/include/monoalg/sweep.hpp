#pragma once

// Seeded random sweeps over homogeneous simplicial semigroups: frame D*e_i
// plus distinct random points of coordinate sum D.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "monoalg/homology.hpp"
#include "monoalg/properties.hpp"

namespace monoalg {

struct SweepConfig {
  int ambient_dim = 3;
  int num_generators = 5;  // including the d frame generators
  int max_entry = 4;       // the common degree D of all generators
  int count = 50;
  std::uint64_t seed = 1;
  Characteristic characteristic;
  int t_max = 4;           // hilbert_verify depth per instance; 0 disables

  /// Throws Usage for out-of-range fields.
  void validate() const;
};

/// Uniform integer in [0, n) by rejection on the raw engine output, so the
/// stream is identical on every platform.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

/// Frame D*e_1..D*e_m plus `extra` distinct points of N^m with coordinate sum
/// D off the axes. Throws Usage when fewer than `extra` such points exist.
std::vector<Point> random_homogeneous_generators(std::mt19937_64& rng, int dim, int degree, int extra);

/// The generator lists a sweep with this config analyzes, in order.
std::vector<std::vector<Point>> sweep_inputs(const SweepConfig& cfg);

struct SweepInstance {
  std::vector<Point> generators;
  std::optional<PropertyReport> properties;
  std::optional<RegularityReport> regularity;
  std::optional<bool> hilbert;
  std::string skip_reason;  // empty when analyzed
};

struct SweepSummary {
  SweepConfig config;
  int generated = 0;
  int accepted = 0;
  int skipped = 0;
  int seminormal = 0;
  int normal = 0;
  int cohen_macaulay = 0;
  int buchsbaum = 0;
  int gorenstein = 0;
  int hilbert_failures = 0;
  std::optional<std::int64_t> min_regularity;
  std::optional<std::int64_t> max_regularity;
  std::vector<SweepInstance> eg_violations;
};

SweepInstance analyze_instance(std::vector<Point> generators, Characteristic ch, int t_max);

/// Evaluates instances on up to `threads` workers; the summary does not
/// depend on the thread count.
SweepSummary sweep(const SweepConfig& cfg, unsigned threads);

/// Hardware thread count, capped by MONOALG_THREADS when that is a positive integer.
unsigned default_thread_count();

}  // namespace monoalg

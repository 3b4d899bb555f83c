#include "monoalg/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

#include "monoalg/errors.hpp"

namespace monoalg {

void SweepConfig::validate() const {
  auto fail = [](const std::string& what) { throw Error(ErrorKind::Usage, "sweep: " + what); };
  if (ambient_dim < 1) fail("ambient dimension must be positive");
  if (max_entry < 1) fail("max entry (degree) must be positive");
  if (num_generators < ambient_dim) fail("need at least as many generators as dimensions");
  if (count < 0) fail("count must not be negative");
  if (t_max < 0) fail("tmax must not be negative");
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  for (;;) {
    const std::uint64_t v = rng();
    if (v < limit) return v % n;
  }
}

namespace {

void compositions(int dim, int degree, Point& cur, std::size_t k, std::vector<Point>& out) {
  if (k + 1 == static_cast<std::size_t>(dim)) {
    cur[k] = degree;
    out.push_back(cur);
    return;
  }
  for (int v = degree; v >= 0; --v) {
    cur[k] = v;
    compositions(dim, degree - v, cur, k + 1, out);
  }
}

}  // namespace

std::vector<Point> random_homogeneous_generators(std::mt19937_64& rng, int dim, int degree, int extra) {
  std::vector<Point> all;
  Point cur(static_cast<std::size_t>(dim), 0);
  compositions(dim, degree, cur, 0, all);
  std::vector<Point> pool;
  for (auto& p : all)
    if (std::count(p.begin(), p.end(), 0) != dim - 1) pool.push_back(std::move(p));
  if (static_cast<std::size_t>(extra) > pool.size())
    throw Error(ErrorKind::Usage, "only " + std::to_string(pool.size()) +
                                      " off-axis points of degree " + std::to_string(degree) +
                                      " exist in dimension " + std::to_string(dim));

  std::vector<Point> gens;
  for (int k = 0; k < dim; ++k) {
    Point e(static_cast<std::size_t>(dim), 0);
    e[static_cast<std::size_t>(k)] = degree;
    gens.push_back(std::move(e));
  }
  // partial Fisher-Yates
  for (int k = 0; k < extra; ++k) {
    const auto j = static_cast<std::size_t>(k) + uniform_below(rng, pool.size() - static_cast<std::size_t>(k));
    std::swap(pool[static_cast<std::size_t>(k)], pool[j]);
    gens.push_back(pool[static_cast<std::size_t>(k)]);
  }
  return gens;
}

std::vector<std::vector<Point>> sweep_inputs(const SweepConfig& cfg) {
  cfg.validate();
  std::mt19937_64 rng(cfg.seed);
  std::vector<std::vector<Point>> out;
  for (int i = 0; i < cfg.count; ++i)
    out.push_back(random_homogeneous_generators(rng, cfg.ambient_dim, cfg.max_entry,
                                                cfg.num_generators - cfg.ambient_dim));
  return out;
}

SweepInstance analyze_instance(std::vector<Point> generators, Characteristic ch, int t_max) {
  SweepInstance inst;
  inst.generators = std::move(generators);
  try {
    const auto b = AffineSemigroup::validate(inst.generators);
    const auto d = decompose(b);
    inst.properties = full_report(b, d);
    inst.regularity = analyze(b, d, ch);
    if (t_max > 0) inst.hilbert = hilbert_verify(b, d, *degree_functional(b), t_max);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Internal) throw;
    inst.properties.reset();
    inst.regularity.reset();
    inst.skip_reason = std::string(to_string(e.kind())) + ": " + e.what();
  }
  return inst;
}

SweepSummary sweep(const SweepConfig& cfg, unsigned threads) {
  auto inputs = sweep_inputs(cfg);
  std::vector<SweepInstance> results(inputs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < inputs.size(); i = next++)
      results[i] = analyze_instance(std::move(inputs[i]), cfg.characteristic, cfg.t_max);
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(inputs.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  }

  SweepSummary s;
  s.config = cfg;
  s.generated = static_cast<int>(results.size());
  for (auto& r : results) {
    if (!r.properties) {
      ++s.skipped;
      continue;
    }
    ++s.accepted;
    const auto& p = *r.properties;
    s.seminormal += p.seminormal.holds;
    s.normal += p.normal.holds;
    s.cohen_macaulay += p.cohen_macaulay.holds;
    s.buchsbaum += p.buchsbaum.holds;
    s.gorenstein += p.gorenstein.holds;
    if (r.hilbert && !*r.hilbert) ++s.hilbert_failures;
    const auto reg = r.regularity->regularity;
    s.min_regularity = s.min_regularity ? std::min(*s.min_regularity, reg) : reg;
    s.max_regularity = s.max_regularity ? std::max(*s.max_regularity, reg) : reg;
    if (!r.regularity->eg_holds) s.eg_violations.push_back(std::move(r));
  }
  return s;
}

unsigned default_thread_count() {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("MONOALG_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return std::min(hw, static_cast<unsigned>(v));
  }
  return hw;
}

}  // namespace monoalg

#include "monoalg/verify.hpp"

#include <algorithm>
#include <set>

#include "monoalg/errors.hpp"

namespace monoalg {

std::vector<Point> module_generators_box(const AffineSemigroup& b, const Frame& frame,
                                         const FiniteAbelianGroup& group) {
  const auto& frame_idx = frame.generator_indices();
  std::vector<std::size_t> free_idx;
  std::vector<std::int64_t> bound;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (std::find(frame_idx.begin(), frame_idx.end(), i) != frame_idx.end()) continue;
    const Integer ord = group.element_order(to_int_vector(b.generator(i)));
    free_idx.push_back(i);
    bound.push_back(ord.get_si());
  }

  std::set<Point, std::greater<>> out;
  std::vector<std::int64_t> counts(free_idx.size(), 0);
  for (;;) {
    Point x(b.ambient_dim(), 0);
    for (std::size_t k = 0; k < free_idx.size(); ++k)
      for (std::int64_t r = 0; r < counts[k]; ++r) x = add_points(x, b.generator(free_idx[k]));
    bool minimal = true;
    for (const auto& e : frame.elements())
      if (dominates(x, e) && b.member(subtract_points(x, e))) {
        minimal = false;
        break;
      }
    if (minimal) out.insert(std::move(x));

    std::size_t k = 0;
    while (k < counts.size() && ++counts[k] == bound[k]) counts[k++] = 0;
    if (k == counts.size()) break;
  }
  return {out.begin(), out.end()};
}

bool betti_euler_check(const MonomialIdeal& ideal, Characteristic ch) {
  const auto betti = betti_multigraded(ideal, ch);
  const std::size_t n = ideal.gens.size();
  if (n > 20) throw Error(ErrorKind::Overflow, "too many generators for the Taylor complex");
  std::map<Point, std::int64_t> taylor;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    Point l(ideal.num_vars, 0);
    int size = 0;
    for (std::size_t g = 0; g < n; ++g) {
      if (!(mask >> g & 1u)) continue;
      ++size;
      for (std::size_t k = 0; k < l.size(); ++k) l[k] = std::max(l[k], ideal.gens[g][k]);
    }
    taylor[l] += size % 2 == 1 ? 1 : -1;
  }
  std::set<Point> degrees;
  for (const auto& [b, r] : betti) degrees.insert(b);
  for (const auto& [b, e] : taylor) degrees.insert(b);
  for (const auto& b : degrees) {
    std::int64_t alt = 0;
    if (auto it = betti.find(b); it != betti.end())
      for (const auto& [i, r] : it->second) alt += i % 2 == 0 ? r : -r;
    auto it = taylor.find(b);
    if (alt != (it == taylor.end() ? 0 : it->second)) return false;
  }
  return true;
}

VerificationReport verify(const AffineSemigroup& b, const Decomposition& d, Characteristic ch, int t_max) {
  VerificationReport rep;
  rep.t_max = t_max;
  rep.module_generators_agree = module_generators_box(b, d.frame, d.group) == d.module_generators;
  rep.betti_euler = std::all_of(d.summands.begin(), d.summands.end(),
                                [&](const Summand& s) { return betti_euler_check(s.ideal, ch); });
  if (const auto f = degree_functional(b)) rep.hilbert = hilbert_verify(b, d, *f, t_max);
  return rep;
}

}  // namespace monoalg

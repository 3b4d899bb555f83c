#include "monoalg/decomposition.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "monoalg/errors.hpp"
#include "monoalg/kernels/kernels.hpp"

namespace monoalg {

MonomialIdeal MonomialIdeal::unit(std::size_t d) { return {d, {Point(d, 0)}}; }

MonomialIdeal MonomialIdeal::maximal(std::size_t d) {
  MonomialIdeal ideal{d, {}};
  for (std::size_t k = 0; k < d; ++k) {
    Point e(d, 0);
    e[k] = 1;
    ideal.gens.push_back(std::move(e));
  }
  std::sort(ideal.gens.begin(), ideal.gens.end(), std::greater<>());
  return ideal;
}

bool MonomialIdeal::is_unit() const { return gens.size() == 1 && is_zero(gens.front()); }

bool MonomialIdeal::is_maximal() const { return *this == maximal(num_vars); }

bool MonomialIdeal::contains(const Point& exponent) const {
  std::vector<std::int64_t> packed;
  packed.reserve(gens.size() * num_vars);
  for (const auto& g : gens) packed.insert(packed.end(), g.begin(), g.end());
  return kernels::first_dominated(packed, num_vars, exponent) < gens.size();
}

bool MonomialIdeal::is_antichain() const {
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (i != j && dominates(gens[i], gens[j])) return false;
  return true;
}

std::string MonomialIdeal::to_string() const {
  if (is_unit()) return "ideal 1";
  const std::vector<Point>& order = gens;
  std::ostringstream os;
  os << "ideal (";
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i) os << ", ";
    bool first = true;
    for (std::size_t k = 0; k < num_vars; ++k) {
      if (order[i][k] == 0) continue;
      if (!first) os << '*';
      os << "x_" << (k + 1);
      if (order[i][k] > 1) os << '^' << order[i][k];
      first = false;
    }
  }
  os << ')';
  return os.str();
}

const Summand* Decomposition::find(const CosetLabel& coset) const {
  auto it = std::lower_bound(summands.begin(), summands.end(), coset,
                             [](const Summand& s, const CosetLabel& c) { return s.coset < c; });
  return it != summands.end() && it->coset == coset ? &*it : nullptr;
}

namespace {

Point integral_point(const RatVector& v) {
  Point p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational q = v[i];
    q.canonicalize();
    if (q.get_den() != 1 || !q.get_num().fits_slong_p())
      throw Error(ErrorKind::Internal, "lambda difference inside a coset is not integral");
    p[i] = q.get_num().get_si();
  }
  return p;
}

}  // namespace

Decomposition decompose(const AffineSemigroup& b) {
  Decomposition out;
  out.frame = select_frame(b);
  out.group = frame_quotient(b, out.frame);
  out.module_generators = module_generators(b, out.frame);
  const std::size_t d = out.frame.size();

  std::map<CosetLabel, std::vector<std::pair<Point, RatVector>>> by_coset;
  for (const auto& x : out.module_generators)
    by_coset[out.group.project(x)].emplace_back(x, out.frame.lambda(x));

  if (by_coset.size() != out.group.order())
    throw Error(ErrorKind::Internal, "some coset of G(B)/G(A) has no module generator");

  const auto functional = degree_functional(b);
  for (auto& [coset, members] : by_coset) {
    Summand s;
    s.coset = coset;
    s.shift_lambda = members.front().second;
    for (const auto& [x, lam] : members)
      for (std::size_t k = 0; k < d; ++k) s.shift_lambda[k] = std::min(s.shift_lambda[k], lam[k]);
    s.shift = out.frame.combine(s.shift_lambda);
    s.ideal.num_vars = d;
    for (const auto& [x, lam] : members) {
      s.gamma.push_back(x);
      RatVector diff(d);
      for (std::size_t k = 0; k < d; ++k) diff[k] = lam[k] - s.shift_lambda[k];
      s.ideal.gens.push_back(integral_point(diff));
    }
    std::sort(s.ideal.gens.begin(), s.ideal.gens.end(), std::greater<>());
    if (functional) s.shift_degree = functional->degree(s.shift);
    out.summands.push_back(std::move(s));
  }
  return out;
}

std::map<CosetLabel, std::int64_t> shift_degrees(const Decomposition& d, const DegreeFunctional& f) {
  std::map<CosetLabel, std::int64_t> out;
  for (const auto& s : d.summands) out.emplace(s.coset, f.degree(s.shift));
  return out;
}

std::vector<std::int64_t> semigroup_degree_counts(const AffineSemigroup& b, const DegreeFunctional& f,
                                                  int t_max) {
  for (const auto& g : b.generators())
    if (f.evaluate(g) != 1)
      throw Error(ErrorKind::NotHomogeneous, "functional is not 1 on generator " + to_string(g));
  std::vector<std::int64_t> counts;
  if (t_max < 0) return counts;
  // every generator has degree 1, so degree-t elements are sums of t generators
  std::set<Point> level{Point(b.ambient_dim(), 0)};
  counts.push_back(1);
  for (int t = 1; t <= t_max; ++t) {
    std::set<Point> next;
    for (const auto& x : level)
      for (const auto& g : b.generators()) next.insert(add_points(x, g));
    level = std::move(next);
    counts.push_back(static_cast<std::int64_t>(level.size()));
  }
  return counts;
}

std::int64_t ideal_monomials_of_degree(const MonomialIdeal& ideal, std::int64_t s) {
  if (s < 0) return 0;
  const std::size_t d = ideal.num_vars;
  if (d == 0) return s == 0 && ideal.is_unit() ? 1 : 0;
  std::vector<std::int64_t> packed;
  for (const auto& g : ideal.gens) packed.insert(packed.end(), g.begin(), g.end());

  std::int64_t count = 0;
  Point a(d, 0);
  // enumerate compositions of s into d parts
  auto walk = [&](auto&& self, std::size_t k, std::int64_t left) -> void {
    if (k + 1 == d) {
      a[k] = left;
      if (kernels::first_dominated(packed, d, a) < ideal.gens.size()) ++count;
      return;
    }
    for (std::int64_t v = 0; v <= left; ++v) {
      a[k] = v;
      self(self, k + 1, left - v);
    }
  };
  walk(walk, 0, s);
  return count;
}

bool hilbert_verify(const AffineSemigroup& b, const Decomposition& d, const DegreeFunctional& f,
                    int t_max) {
  const auto lhs = semigroup_degree_counts(b, f, t_max);
  const auto degrees = shift_degrees(d, f);
  for (int t = 0; t <= t_max; ++t) {
    std::int64_t rhs = 0;
    for (const auto& s : d.summands)
      rhs += ideal_monomials_of_degree(s.ideal, t - degrees.at(s.coset));
    if (rhs != lhs[static_cast<std::size_t>(t)]) return false;
  }
  return true;
}

}  // namespace monoalg

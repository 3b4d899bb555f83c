#include "monoalg/homology.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "monoalg/errors.hpp"
#include "monoalg/kernels/kernels.hpp"

namespace monoalg {

Characteristic Characteristic::of(std::uint64_t p) {
  if (p == 0) return {0};
  if (p == 1 || p > 0x7fffffffu)
    throw Error(ErrorKind::InvalidCharacteristic, "characteristic must be 0 or a prime below 2^31");
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0)
      throw Error(ErrorKind::InvalidCharacteristic,
                  "characteristic " + std::to_string(p) + " is not prime");
  return {static_cast<std::uint32_t>(p)};
}

void BettiTable::add(int i, std::int64_t j, std::int64_t rank) {
  if (rank == 0) return;
  entries_[{i, j}] += rank;
}

std::int64_t BettiTable::at(int i, std::int64_t j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

namespace {

using Face = std::uint32_t;  // bitmask over the variables
using SparseColumn = std::vector<std::pair<std::size_t, int>>;  // (row, +-1)

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

std::size_t rank_mod_p(const std::vector<SparseColumn>& cols, std::size_t nrows, std::uint32_t p) {
  // rows of the transpose; rank is the same
  std::vector<std::vector<std::uint32_t>> m(cols.size(), std::vector<std::uint32_t>(nrows, 0));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (auto [r, v] : cols[c]) m[c][r] = v > 0 ? 1u : p - 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < nrows && rank < m.size(); ++col) {
    std::size_t sel = rank;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[rank], m[sel]);
    const std::uint32_t inv = inverse_mod(m[rank][col], p);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][col] == 0) continue;
      const auto factor = static_cast<std::uint32_t>(
          static_cast<std::uint64_t>(p - m[r][col]) * inv % p);
      kernels::axpy_mod(m[r], m[rank], factor, p);
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_rational(const std::vector<SparseColumn>& cols, std::size_t nrows) {
  std::vector<RatVector> m(cols.size(), RatVector(nrows));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (auto [r, v] : cols[c]) m[c][r] = v;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < nrows && rank < m.size(); ++col) {
    std::size_t sel = rank;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[rank], m[sel]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[rank][col];
      for (std::size_t k = col; k < nrows; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Reduced homology dimensions H~_q for q = -1 .. d-1 of the complex given by
// its faces (closed under subsets).
std::vector<std::int64_t> reduced_homology(const std::vector<Face>& faces, std::size_t d,
                                           Characteristic ch) {
  std::vector<std::vector<Face>> by_size(d + 2);
  for (Face f : faces) by_size[static_cast<std::size_t>(std::popcount(f))].push_back(f);
  std::vector<std::map<Face, std::size_t>> index(d + 2);
  for (std::size_t s = 0; s < by_size.size(); ++s)
    for (std::size_t i = 0; i < by_size[s].size(); ++i) index[s][by_size[s][i]] = i;

  // rank of the boundary from faces of size s to faces of size s-1
  std::vector<std::size_t> boundary_rank(d + 3, 0);
  for (std::size_t s = 1; s < by_size.size(); ++s) {
    if (by_size[s].empty() || by_size[s - 1].empty()) continue;
    std::vector<SparseColumn> cols;
    for (Face f : by_size[s]) {
      SparseColumn col;
      int pos = 0;
      for (std::size_t v = 0; v < d; ++v) {
        if (!(f >> v & 1u)) continue;
        col.emplace_back(index[s - 1].at(f & ~(Face{1} << v)), pos % 2 == 0 ? 1 : -1);
        ++pos;
      }
      cols.push_back(std::move(col));
    }
    boundary_rank[s] = ch.value == 0 ? rank_rational(cols, by_size[s - 1].size())
                                     : rank_mod_p(cols, by_size[s - 1].size(), ch.value);
  }

  std::vector<std::int64_t> h(d + 1, 0);  // h[q+1] = H~_q
  for (std::size_t s = 0; s <= d; ++s) {
    const auto f = static_cast<std::int64_t>(by_size[s].size());
    h[s] = f - static_cast<std::int64_t>(boundary_rank[s]) -
           static_cast<std::int64_t>(boundary_rank[s + 1]);
  }
  return h;
}

std::set<Point> lcm_lattice(const MonomialIdeal& ideal) {
  std::set<Point> lat(ideal.gens.begin(), ideal.gens.end());
  std::vector<Point> frontier(lat.begin(), lat.end());
  while (!frontier.empty()) {
    std::vector<Point> next;
    for (const auto& p : frontier)
      for (const auto& g : ideal.gens) {
        Point l(p.size());
        for (std::size_t k = 0; k < p.size(); ++k) l[k] = std::max(p[k], g[k]);
        if (lat.insert(l).second) next.push_back(std::move(l));
      }
    frontier = std::move(next);
  }
  return lat;
}

}  // namespace

std::map<Point, std::map<int, std::int64_t>> betti_multigraded(const MonomialIdeal& ideal,
                                                              Characteristic ch) {
  const std::size_t d = ideal.num_vars;
  if (d > 24) throw Error(ErrorKind::Overflow, "too many variables for the Koszul complexes");
  std::map<Point, std::map<int, std::int64_t>> out;
  for (const auto& b : lcm_lattice(ideal)) {
    Face support = 0;
    for (std::size_t k = 0; k < d; ++k)
      if (b[k] > 0) support |= Face{1} << k;

    // upper-Koszul complex: sigma within the support with x^(b - sigma) in I
    std::vector<Face> faces;
    Point shifted = b;
    for (Face sigma = support;; sigma = (sigma - 1) & support) {
      for (std::size_t k = 0; k < d; ++k) shifted[k] = b[k] - static_cast<std::int64_t>(sigma >> k & 1u);
      if (ideal.contains(shifted)) faces.push_back(sigma);
      if (sigma == 0) break;
    }
    const auto h = reduced_homology(faces, d, ch);
    for (std::size_t q = 0; q < h.size(); ++q)
      if (h[q] != 0) out[b][static_cast<int>(q)] = h[q];
  }
  return out;
}

BettiTable betti_ideal(const MonomialIdeal& ideal, Characteristic ch) {
  BettiTable table;
  for (const auto& [b, ranks] : betti_multigraded(ideal, ch)) {
    std::int64_t j = 0;
    for (auto v : b) j += v;
    for (const auto& [i, r] : ranks) table.add(i, j, r);
  }
  return table;
}

std::int64_t reg_of(const BettiTable& table) {
  if (table.empty()) throw Error(ErrorKind::Internal, "regularity of an empty Betti table");
  std::int64_t reg = table.entries().begin()->first.second - table.entries().begin()->first.first;
  for (const auto& [key, rank] : table.entries()) reg = std::max(reg, key.second - key.first);
  return reg;
}

int projective_dimension(const BettiTable& table) {
  int pd = 0;
  for (const auto& [key, rank] : table.entries()) pd = std::max(pd, key.first);
  return pd;
}

int depth_of(const BettiTable& table, std::size_t num_vars) {
  return static_cast<int>(num_vars) - projective_dimension(table);
}

RegularityReport analyze(const AffineSemigroup& b, Characteristic ch) {
  return analyze(b, decompose(b), ch);
}

RegularityReport analyze(const AffineSemigroup& b, const Decomposition& d, Characteristic ch) {
  const auto f = degree_functional(b);
  if (!f) throw Error(ErrorKind::NotHomogeneous, "no degree functional is 1 on every generator");
  const auto redundant = minimalize_check(b);
  if (!redundant.empty())
    throw Error(ErrorKind::NonMinimalGenerators,
                "generator " + to_string(b.generator(redundant.front())) +
                    " is a sum of the other generators");
  for (const auto& e : d.frame.elements())
    if (f->degree(e) != 1) throw Error(ErrorKind::Internal, "frame element of degree other than 1");

  RegularityReport rep;
  const std::size_t nvars = d.frame.size();
  std::map<MonomialIdeal, std::pair<std::int64_t, int>> cache;  // ideal -> (reg, depth)
  std::vector<std::int64_t> totals;
  bool first = true;
  for (const auto& s : d.summands) {
    auto it = cache.find(s.ideal);
    if (it == cache.end()) {
      const BettiTable t = betti_ideal(s.ideal, ch);
      it = cache.emplace(s.ideal, std::make_pair(reg_of(t), depth_of(t, nvars))).first;
    }
    const auto [ireg, idepth] = it->second;
    const std::int64_t deg = f->degree(s.shift);
    totals.push_back(ireg + deg);
    rep.depth = first ? idepth : std::min<std::int64_t>(rep.depth, idepth);
    first = false;
  }
  rep.regularity = *std::max_element(totals.begin(), totals.end());
  for (std::size_t i = 0; i < d.summands.size(); ++i)
    if (totals[i] == rep.regularity) {
      const auto& s = d.summands[i];
      rep.witnesses.push_back({s.coset, cache.at(s.ideal).first, f->degree(s.shift)});
    }
  rep.degree = static_cast<std::int64_t>(d.group_order());
  rep.codim = static_cast<std::int64_t>(b.size()) - static_cast<std::int64_t>(nvars);
  rep.eg_bound = rep.degree - rep.codim;
  rep.eg_holds = rep.regularity <= rep.eg_bound;
  return rep;
}

}  // namespace monoalg

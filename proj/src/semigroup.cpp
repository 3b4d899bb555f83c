#include "monoalg/semigroup.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "fraction_free.hpp"
#include "monoalg/errors.hpp"
#include "monoalg/kernels/kernels.hpp"
#include "monoalg/simplex.hpp"

namespace monoalg {

std::size_t PointHash::operator()(const Point& p) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull ^ p.size();
  for (auto v : p) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

IntVector to_int_vector(const Point& p) {
  IntVector v;
  v.reserve(p.size());
  for (auto x : p) v.emplace_back(static_cast<long>(x));
  return v;
}

Point add_points(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (__builtin_add_overflow(a[i], b[i], &r[i]))
      throw Error(ErrorKind::Overflow, "coordinate overflow");
  return r;
}

Point subtract_points(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (__builtin_sub_overflow(a[i], b[i], &r[i]))
      throw Error(ErrorKind::Overflow, "coordinate overflow");
  return r;
}

bool dominates(const Point& a, const Point& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

bool is_zero(const Point& p) {
  return std::all_of(p.begin(), p.end(), [](auto v) { return v == 0; });
}

std::int64_t coordinate_sum(const Point& p) {
  std::int64_t s = 0;
  for (auto v : p)
    if (__builtin_add_overflow(s, v, &s)) throw Error(ErrorKind::Overflow, "coordinate overflow");
  return s;
}

std::string to_string(const Point& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------

struct AffineSemigroup::State {
  std::size_t dim = 0;
  std::vector<Point> gens;
  std::vector<std::int64_t> packed;  // generators row-major, for the dominance kernel

  std::once_flag basis_once;
  IntMatrix basis;

  std::mutex memo_mutex;
  std::unordered_map<Point, bool, PointHash> memo;
};

AffineSemigroup AffineSemigroup::validate(std::vector<Point> generators) {
  if (generators.empty()) throw Error(ErrorKind::EmptyInput, "no generators given");
  const std::size_t dim = generators.front().size();
  if (dim == 0) throw Error(ErrorKind::EmptyInput, "generators have no coordinates");
  std::set<Point> seen;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& g = generators[i];
    if (g.size() != dim)
      throw Error(ErrorKind::DimensionMismatch,
                  "generator " + std::to_string(i) + " has " + std::to_string(g.size()) +
                      " coordinates, expected " + std::to_string(dim));
    for (auto v : g)
      if (v < 0)
        throw Error(ErrorKind::NegativeEntry, "generator " + to_string(g) + " has a negative entry");
    if (is_zero(g)) throw Error(ErrorKind::ZeroGenerator, "generator " + std::to_string(i) + " is zero");
    if (!seen.insert(g).second)
      throw Error(ErrorKind::DuplicateGenerator, "generator " + to_string(g) + " repeated");
  }
  auto state = std::make_shared<State>();
  state->dim = dim;
  state->gens = std::move(generators);
  for (const auto& g : state->gens) state->packed.insert(state->packed.end(), g.begin(), g.end());
  return AffineSemigroup(std::move(state));
}

std::size_t AffineSemigroup::ambient_dim() const noexcept { return state_->dim; }
std::size_t AffineSemigroup::size() const noexcept { return state_->gens.size(); }
const std::vector<Point>& AffineSemigroup::generators() const noexcept { return state_->gens; }

const IntMatrix& AffineSemigroup::group_basis() const {
  std::call_once(state_->basis_once, [this] {
    std::vector<IntVector> rows;
    for (const auto& g : state_->gens) rows.push_back(to_int_vector(g));
    state_->basis = lattice_basis(rows, state_->dim);
  });
  return state_->basis;
}

std::size_t AffineSemigroup::rank() const { return group_basis().rows(); }

bool AffineSemigroup::member(const Point& x) const {
  if (x.size() != state_->dim)
    throw Error(ErrorKind::DimensionMismatch, "point " + to_string(x) + " has wrong length");
  if (is_zero(x)) return true;
  for (auto v : x)
    if (v < 0) return false;

  const auto& packed = state_->packed;
  const std::size_t n = state_->gens.size();
  const std::size_t dim = state_->dim;
  auto& memo = state_->memo;
  std::lock_guard lock(state_->memo_mutex);
  if (auto it = memo.find(x); it != memo.end()) return it->second;

  // Iterative descent; each frame resumes at the next generator to try.
  // Coordinate sums strictly decrease along the stack, so it is finite.
  struct Pending {
    Point point;
    std::size_t next;
  };
  std::vector<Pending> stack;
  stack.push_back({x, 0});
  while (!stack.empty()) {
    const std::size_t top = stack.size() - 1;
    if (memo.count(stack[top].point)) {
      stack.pop_back();
      continue;
    }
    bool found = false;
    bool descended = false;
    while (stack[top].next < n) {
      const std::size_t start = stack[top].next;
      const std::size_t hit =
          start + kernels::first_dominated(std::span(packed).subspan(start * dim), dim, stack[top].point);
      if (hit >= n) {
        stack[top].next = n;
        break;
      }
      stack[top].next = hit;
      Point rest = subtract_points(stack[top].point, state_->gens[hit]);
      if (is_zero(rest)) {
        found = true;
        break;
      }
      auto it = memo.find(rest);
      if (it == memo.end()) {
        stack.push_back({std::move(rest), 0});
        descended = true;
        break;
      }
      if (it->second) {
        found = true;
        break;
      }
      ++stack[top].next;
    }
    if (descended) continue;
    memo.emplace(stack[top].point, found);
    stack.pop_back();
  }
  return memo.at(x);
}

// ---------------------------------------------------------------------------

Frame::Frame(std::vector<Point> elements, std::vector<std::size_t> generator_indices)
    : elements_(std::move(elements)), indices_(std::move(generator_indices)) {
  const std::size_t d = elements_.size();
  if (d == 0) return;
  const std::size_t m = elements_.front().size();
  if (invert_machine_words()) return;

  // choose d independent rows of the m x d frame matrix
  std::vector<RatVector> reduced;
  for (std::size_t r = 0; r < m && pivot_rows_.size() < d; ++r) {
    RatVector row(d);
    for (std::size_t k = 0; k < d; ++k) row[k] = static_cast<long>(elements_[k][r]);
    for (std::size_t j = 0; j < reduced.size(); ++j) {
      std::size_t lead = 0;
      while (reduced[j][lead] == 0) ++lead;
      if (row[lead] != 0) {
        const Rational f = row[lead] / reduced[j][lead];
        for (std::size_t k = 0; k < d; ++k) row[k] -= f * reduced[j][k];
      }
    }
    if (std::any_of(row.begin(), row.end(), [](const Rational& q) { return q != 0; })) {
      reduced.push_back(std::move(row));
      pivot_rows_.push_back(r);
    }
  }
  if (pivot_rows_.size() != d)
    throw Error(ErrorKind::Internal, "frame elements are linearly dependent");

  // invert the d x d submatrix on the pivot rows
  std::vector<RatVector> aug(d, RatVector(2 * d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) aug[i][k] = static_cast<long>(elements_[k][pivot_rows_[i]]);
    aug[i][d + i] = 1;
  }
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (aug[p][c] == 0) ++p;
    std::swap(aug[p], aug[c]);
    const Rational inv = 1 / aug[c][c];
    for (auto& v : aug[c]) v *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c || aug[r][c] == 0) continue;
      const Rational f = aug[r][c];
      for (std::size_t k = 0; k < 2 * d; ++k) aug[r][k] -= f * aug[c][k];
    }
  }
  inverse_.assign(d, RatVector(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) inverse_[i][k] = aug[i][d + k];

  Integer den = 1;
  for (const auto& row : inverse_)
    for (const auto& q : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<std::int64_t> num;
  for (const auto& row : inverse_)
    for (const auto& q : row) {
      const Integer v = q.get_num() * (den / q.get_den());
      if (!v.fits_slong_p() || !den.fits_slong_p()) return;
      num.push_back(v.get_si());
    }
  inverse_num_ = std::move(num);
  inverse_den_ = den.get_si();
}

bool Frame::invert_machine_words() {
  const std::size_t d = elements_.size(), m = elements_.front().size();
  // pivot columns of the transpose are the first independent ambient rows
  std::vector<std::vector<std::int64_t>> transposed(d, std::vector<std::int64_t>(m));
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t r = 0; r < m; ++r) transposed[k][r] = elements_[k][r];
  const auto rows = detail::fraction_free_reduce(std::move(transposed), m);
  if (!rows) return false;
  if (rows->pivots.size() != d) throw Error(ErrorKind::Internal, "frame elements are linearly dependent");

  std::vector<std::vector<std::int64_t>> aug(d, std::vector<std::int64_t>(2 * d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) aug[i][k] = elements_[k][rows->pivots[i]];
    aug[i][d + i] = 1;
  }
  const auto inv = detail::fraction_free_reduce(std::move(aug), d);
  if (!inv) return false;
  const std::int64_t sign = inv->den < 0 ? -1 : 1;
  pivot_rows_ = rows->pivots;
  inverse_den_ = sign * inv->den;
  inverse_num_.assign(d * d, 0);
  inverse_.assign(d, RatVector(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      inverse_num_[i * d + k] = sign * inv->rows[i][d + k];
      inverse_[i][k] = Rational(static_cast<long>(inverse_num_[i * d + k]), static_cast<long>(inverse_den_));
      inverse_[i][k].canonicalize();
    }
  return true;
}

namespace {

bool mul_add(std::int64_t& acc, std::int64_t a, std::int64_t b) {
  std::int64_t prod;
  return !__builtin_mul_overflow(a, b, &prod) && !__builtin_add_overflow(acc, prod, &acc);
}

}  // namespace

RatVector Frame::lambda(const Point& x) const {
  const std::size_t d = elements_.size();
  if (d == 0 || x.size() != elements_.front().size())
    throw Error(ErrorKind::DimensionMismatch, "point length differs from frame dimension");
  if (inverse_den_ != 0) {
    std::vector<std::int64_t> num(d, 0);
    bool ok = true;
    for (std::size_t i = 0; i < d && ok; ++i)
      for (std::size_t k = 0; k < d && ok; ++k)
        ok = mul_add(num[i], inverse_num_[i * d + k], x[pivot_rows_[k]]);
    for (std::size_t r = 0; r < x.size() && ok; ++r) {
      std::int64_t acc = 0, want = 0;
      for (std::size_t k = 0; k < d && ok; ++k) ok = mul_add(acc, num[k], elements_[k][r]);
      ok = ok && mul_add(want, inverse_den_, x[r]);
      if (ok && acc != want)
        throw Error(ErrorKind::OutsideSpan, to_string(x) + " is outside the span of the frame");
    }
    if (ok) {
      RatVector lam(d);
      for (std::size_t i = 0; i < d; ++i) {
        lam[i] = Rational(static_cast<long>(num[i]), static_cast<long>(inverse_den_));
        lam[i].canonicalize();
      }
      return lam;
    }
  }
  RatVector lam(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      lam[i] += inverse_[i][k] * static_cast<long>(x[pivot_rows_[k]]);
  for (std::size_t r = 0; r < x.size(); ++r) {
    Rational acc = 0;
    for (std::size_t k = 0; k < d; ++k) acc += lam[k] * static_cast<long>(elements_[k][r]);
    if (acc != static_cast<long>(x[r]))
      throw Error(ErrorKind::OutsideSpan, to_string(x) + " is outside the span of the frame");
  }
  return lam;
}

Point Frame::combine(const RatVector& lambda) const {
  const std::size_t m = elements_.empty() ? 0 : elements_.front().size();
  Point out(m);
  // common denominator first, so the sums stay in machine integers
  std::int64_t den = 1;
  std::vector<std::int64_t> num(lambda.size());
  bool ok = true;
  for (const auto& q : lambda) {
    ok = ok && q.get_den().fits_slong_p();
    if (!ok) break;
    const std::int64_t qd = q.get_den().get_si();
    ok = !__builtin_mul_overflow(den / std::gcd(den, qd), qd, &den);
  }
  for (std::size_t k = 0; k < lambda.size() && ok; ++k) {
    const Integer v = lambda[k].get_num() * (Integer(static_cast<long>(den)) / lambda[k].get_den());
    ok = v.fits_slong_p();
    if (ok) num[k] = v.get_si();
  }
  for (std::size_t r = 0; r < m && ok; ++r) {
    std::int64_t acc = 0;
    for (std::size_t k = 0; k < elements_.size() && ok; ++k) ok = mul_add(acc, num[k], elements_[k][r]);
    if (ok && acc % den != 0)
      throw Error(ErrorKind::Internal, "frame combination is not an integral point");
    out[r] = acc / den;
  }
  if (ok) return out;
  for (std::size_t r = 0; r < m; ++r) {
    Rational acc = 0;
    for (std::size_t k = 0; k < elements_.size(); ++k) acc += lambda[k] * static_cast<long>(elements_[k][r]);
    acc.canonicalize();
    if (acc.get_den() != 1 || !acc.get_num().fits_slong_p())
      throw Error(ErrorKind::Internal, "frame combination is not an integral point");
    out[r] = acc.get_num().get_si();
  }
  return out;
}

Rational DegreeFunctional::evaluate(const Point& x) const {
  Rational acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += coefficients[i] * static_cast<long>(x[i]);
  acc.canonicalize();
  return acc;
}

std::int64_t DegreeFunctional::degree(const Point& x) const {
  const Rational v = evaluate(x);
  if (v.get_den() != 1)
    throw Error(ErrorKind::NotHomogeneous, "degree of " + to_string(x) + " is not an integer");
  return v.get_num().get_si();
}

// ---------------------------------------------------------------------------

namespace {

Point primitive(const Point& p) {
  std::int64_t g = 0;
  for (auto v : p) g = std::gcd(g, v);
  Point out = p;
  if (g > 1)
    for (auto& v : out) v /= g;
  return out;
}

}  // namespace

std::vector<std::size_t> extreme_rays(const AffineSemigroup& b) {
  // one representative per direction, keyed by primitive direction
  std::map<Point, std::size_t, std::greater<>> by_direction;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const Point dir = primitive(b.generator(i));
    auto [it, inserted] = by_direction.emplace(dir, i);
    if (inserted) continue;
    const auto& cur = b.generator(it->second);
    const auto& cand = b.generator(i);
    const auto cs = coordinate_sum(cand), cc = coordinate_sum(cur);
    if (cs < cc || (cs == cc && cand < cur)) it->second = i;
  }

  std::vector<std::size_t> reps;
  for (const auto& [dir, idx] : by_direction) reps.push_back(idx);

  std::vector<std::size_t> rays;
  for (std::size_t a = 0; a < reps.size(); ++a) {
    std::vector<IntVector> others;
    for (std::size_t c = 0; c < reps.size(); ++c)
      if (c != a) others.push_back(to_int_vector(b.generator(reps[c])));
    if (!in_rational_cone(others, to_int_vector(b.generator(reps[a])))) rays.push_back(reps[a]);
  }
  return rays;
}

bool is_simplicial(const AffineSemigroup& b) { return extreme_rays(b).size() == b.rank(); }

Frame select_frame(const AffineSemigroup& b) {
  auto rays = extreme_rays(b);
  if (rays.size() != b.rank())
    throw Error(ErrorKind::NotSimplicial,
                "cone has " + std::to_string(rays.size()) + " extreme rays but the group has rank " +
                    std::to_string(b.rank()));
  std::vector<Point> elements;
  for (auto i : rays) elements.push_back(b.generator(i));
  return Frame(std::move(elements), std::move(rays));
}

RatVector lambda_coords(const Frame& frame, const Point& x) { return frame.lambda(x); }

std::optional<DegreeFunctional> degree_functional(const AffineSemigroup& b) {
  std::vector<IntVector> rows;
  for (const auto& g : b.generators()) rows.push_back(to_int_vector(g));
  const IntMatrix m = IntMatrix::from_rows(rows);
  auto sol = solve_rational_any(m, IntVector(b.size(), Integer(1)));
  if (!sol) return std::nullopt;
  for (auto& q : *sol) q.canonicalize();
  return DegreeFunctional{std::move(*sol)};
}

std::vector<std::size_t> minimalize_check(const AffineSemigroup& b) {
  std::vector<std::size_t> redundant;
  if (b.size() < 2) return redundant;
  for (std::size_t i = 0; i < b.size(); ++i) {
    std::vector<Point> rest;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (j != i) rest.push_back(b.generator(j));
    if (AffineSemigroup::validate(std::move(rest)).member(b.generator(i))) redundant.push_back(i);
  }
  return redundant;
}

FiniteAbelianGroup frame_quotient(const AffineSemigroup& b, const Frame& frame) {
  std::vector<IntVector> sub;
  for (const auto& e : frame.elements()) sub.push_back(to_int_vector(e));
  return quotient_group(b.group_basis(), sub);
}

// B_A is closed under divisors in B: if x = y + z with y, z in B and
// y - e_k in B, then x - e_k = (y - e_k) + z is in B. An element of B_A
// never uses a frame generator in any representation (x - e_k would be in
// B), so every nonzero x in B_A is c + y with c a non-frame generator and
// y in B_A. Growing from 0 by non-frame generators and keeping only B_A
// elements therefore reaches all of B_A.
//
// Minimality needs no membership queries. Since B = A + B_A, x - e_k is in
// B iff x - e_k = a + y with a in A and y in B_A, so x in B lies outside
// B_A iff some y in B_A has lambda(x) - lambda(y) in N^d \ {0}. Such a y
// has strictly smaller lambda-sum, so taking candidates in order of
// lambda-sum means every y that could disqualify x is already known. The
// search is finite because B_A is: with D_i the order of [b_i] in
// G(B)/G(A), D_i*b_i is in A \ {0}, so no element of B_A uses b_i D_i times.
std::vector<Point> module_generators(const AffineSemigroup& b, const Frame& frame) {
  const auto& frame_idx = frame.generator_indices();
  const std::size_t d = frame.size();
  std::vector<const Point*> steps;
  std::vector<RatVector> step_lambda;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (std::find(frame_idx.begin(), frame_idx.end(), i) != frame_idx.end()) continue;
    steps.push_back(&b.generator(i));
    step_lambda.push_back(frame.lambda(b.generator(i)));
  }

  // lambda scaled by a common denominator, so coset tests are divisibility tests
  Integer common = 1;
  for (auto& lam : step_lambda)
    for (auto& q : lam) {
      q.canonicalize();
      mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), q.get_den_mpz_t());
    }
  if (!common.fits_slong_p()) throw Error(ErrorKind::Overflow, "lambda denominators too large");
  const std::int64_t scale = common.get_si();
  std::vector<Point> step_scaled;
  for (const auto& lam : step_lambda) {
    Point v(d);
    for (std::size_t k = 0; k < d; ++k) {
      const Rational q = lam[k] * common;
      if (!q.get_num().fits_slong_p()) throw Error(ErrorKind::Overflow, "scaled lambda too large");
      v[k] = q.get_num().get_si();
    }
    step_scaled.push_back(std::move(v));
  }

  struct Candidate {
    std::int64_t weight;  // scaled lambda-sum
    Point point;
    Point scaled;
    bool operator>(const Candidate& o) const { return weight > o.weight; }
  };
  auto below = [&](const Point& x, const Point& y) {  // lambda(x) - lambda(y) in N^d \ {0}
    bool strict = false;
    for (std::size_t k = 0; k < d; ++k) {
      const std::int64_t diff = x[k] - y[k];
      if (diff < 0 || diff % scale != 0) return false;
      strict = strict || diff > 0;
    }
    return strict;
  };

  const Point zero(b.ambient_dim(), 0);
  std::vector<Point> result;
  std::vector<Point> result_scaled;
  std::unordered_set<Point, PointHash> seen{zero};
  std::priority_queue<Candidate, std::vector<Candidate>, std::greater<>> queue;
  queue.push({0, zero, Point(d, 0)});
  while (!queue.empty()) {
    Candidate cur = queue.top();
    queue.pop();
    const bool minimal = std::none_of(result_scaled.begin(), result_scaled.end(),
                                      [&](const Point& y) { return below(cur.scaled, y); });
    if (!minimal) continue;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      Point y = add_points(cur.point, *steps[i]);
      if (!seen.insert(y).second) continue;
      Point ys = add_points(cur.scaled, step_scaled[i]);
      const std::int64_t w = coordinate_sum(ys);
      queue.push({w, std::move(y), std::move(ys)});
    }
    result.push_back(std::move(cur.point));
    result_scaled.push_back(std::move(cur.scaled));
  }
  std::sort(result.begin(), result.end(), std::greater<>());
  return result;
}

}  // namespace monoalg

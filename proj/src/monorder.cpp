#include "frobsplit/monorder.hpp"

#include <algorithm>
#include <numeric>

namespace frobsplit {

namespace {

long long to_int64(const BigInt& v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw PreconditionError("weight entry too large after scaling");
  return static_cast<long long>(v);
}

std::vector<long long> scale_tier(const std::vector<Rational>& tier) {
  BigInt den = 1;
  for (const auto& r : tier) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(r));
  std::vector<long long> out;
  out.reserve(tier.size());
  for (const auto& r : tier) out.push_back(to_int64(boost::multiprecision::numerator(r) * (den / boost::multiprecision::denominator(r))));
  return out;
}

}  // namespace

WeightOrder::WeightOrder(std::size_t arity, std::vector<std::vector<Rational>> tiers,
                         std::optional<std::vector<std::size_t>> lex)
    : arity_(arity), lex_(std::move(lex)) {
  for (const auto& t : tiers) {
    if (t.size() != arity) throw ArityMismatch("weight tier length differs from arity");
    tiers_.push_back(scale_tier(t));
  }
  check_lex();
}

WeightOrder::WeightOrder(std::size_t arity, const std::vector<std::vector<long long>>& tiers,
                         std::optional<std::vector<std::size_t>> lex)
    : arity_(arity), tiers_(tiers), lex_(std::move(lex)) {
  for (const auto& t : tiers_)
    if (t.size() != arity) throw ArityMismatch("weight tier length differs from arity");
  check_lex();
}

void WeightOrder::check_lex() const {
  if (!lex_) return;
  if (lex_->size() != arity_) throw ArityMismatch("lex tiebreak must list every variable");
  std::vector<bool> seen(arity_, false);
  for (std::size_t v : *lex_) {
    if (v >= arity_ || seen[v]) throw PreconditionError("lex tiebreak is not a permutation");
    seen[v] = true;
  }
}

WeightOrder WeightOrder::weight(std::vector<long long> w) {
  std::size_t n = w.size();
  return WeightOrder(n, std::vector<std::vector<long long>>{std::move(w)});
}

WeightOrder WeightOrder::lex(std::size_t arity) {
  std::vector<std::size_t> perm(arity);
  std::iota(perm.begin(), perm.end(), 0);
  return lex(std::move(perm));
}

WeightOrder WeightOrder::lex(std::vector<std::size_t> permutation) {
  std::size_t n = permutation.size();
  return WeightOrder(n, std::vector<std::vector<long long>>{}, std::move(permutation));
}

WeightOrder WeightOrder::grlex(std::size_t arity) {
  std::vector<std::size_t> perm(arity);
  std::iota(perm.begin(), perm.end(), 0);
  return WeightOrder(arity, std::vector<std::vector<long long>>{std::vector<long long>(arity, 1)}, std::move(perm));
}

long long WeightOrder::tier_weight(std::size_t k, const Monomial& m) const {
  __int128 s = 0;
  const auto& w = tiers_[k];
  for (std::size_t i = 0; i < arity_; ++i) s += static_cast<__int128>(w[i]) * m[i];
  if (s > std::numeric_limits<long long>::max() || s < std::numeric_limits<long long>::min())
    throw PreconditionError("monomial weight overflow");
  return static_cast<long long>(s);
}

int WeightOrder::compare_weights(const Monomial& a, const Monomial& b) const {
  if (a.arity() != arity_ || b.arity() != arity_) throw ArityMismatch("monomial arity differs from order arity");
  for (std::size_t k = 0; k < tiers_.size(); ++k) {
    long long wa = tier_weight(k, a), wb = tier_weight(k, b);
    if (wa != wb) return wa > wb ? 1 : -1;
  }
  return 0;
}

int WeightOrder::compare(const Monomial& a, const Monomial& b) const {
  int c = compare_weights(a, b);
  if (c != 0 || !lex_) return c;
  for (std::size_t v : *lex_)
    if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
  return 0;
}

WeightOrder WeightOrder::refined() const {
  if (is_total()) return *this;
  WeightOrder r = *this;
  r.tiers_.push_back(std::vector<long long>(arity_, 1));
  std::vector<std::size_t> perm(arity_);
  std::iota(perm.begin(), perm.end(), 0);
  r.lex_ = std::move(perm);
  return r;
}

bool WeightOrder::is_well_order() const {
  // Every variable must beat the constant monomial: its column across the
  // tiers has to be lexicographically nonnegative (a zero column falls to lex).
  for (std::size_t v = 0; v < arity_; ++v) {
    for (const auto& t : tiers_) {
      if (t[v] > 0) break;
      if (t[v] < 0) return false;
    }
  }
  return true;
}

std::string WeightOrder::key() const {
  std::string k = std::to_string(arity_) + ":";
  for (const auto& t : tiers_) {
    k += "[";
    for (long long w : t) k += std::to_string(w) + ",";
    k += "]";
  }
  if (lex_) {
    k += "lex";
    for (std::size_t v : *lex_) k += "," + std::to_string(v);
  }
  return k;
}

template <class D>
static Polynomial<D> initial_form_impl(const WeightOrder& order, const Polynomial<D>& f) {
  if (f.is_zero()) throw PreconditionError("initial form of the zero polynomial");
  if (f.arity() != order.arity()) throw ArityMismatch("polynomial arity differs from order arity");
  const Monomial* best = &f.terms().front().monomial;
  for (const auto& t : f.terms())
    if (order.compare_weights(t.monomial, *best) > 0) best = &t.monomial;
  std::vector<typename Polynomial<D>::Term> keep;
  for (const auto& t : f.terms())
    if (order.compare_weights(t.monomial, *best) == 0) keep.push_back(t);
  return Polynomial<D>::from_terms(f.domain(), f.arity(), std::move(keep));
}

template <class D>
static Polynomial<D> leading_term_impl(const WeightOrder& order, const Polynomial<D>& f) {
  if (f.is_zero()) throw PreconditionError("leading term of the zero polynomial");
  if (!order.is_total()) throw PreconditionError("leading term needs a total order");
  if (f.arity() != order.arity()) throw ArityMismatch("polynomial arity differs from order arity");
  const typename Polynomial<D>::Term* best = &f.terms().front();
  for (const auto& t : f.terms())
    if (order.compare(t.monomial, best->monomial) > 0) best = &t;
  return Polynomial<D>::term(f.domain(), best->monomial, best->coeff);
}

PrimePoly initial_form(const WeightOrder& order, const PrimePoly& f) { return initial_form_impl(order, f); }
IntPoly initial_form(const WeightOrder& order, const IntPoly& f) { return initial_form_impl(order, f); }
PrimePoly leading_term(const WeightOrder& order, const PrimePoly& f) { return leading_term_impl(order, f); }
IntPoly leading_term(const WeightOrder& order, const IntPoly& f) { return leading_term_impl(order, f); }

WeightOrder antidiagonal_weight(std::size_t n, std::size_t rows) {
  if (n == 0 || rows == 0) throw PreconditionError("matrix dimensions must be positive");
  // (i+j)L - ij: the (i+j)L part is constant on the terms of a minor, and the
  // rearrangement inequality makes -sum(i*j) uniquely largest on the antidiagonal.
  const long long L = static_cast<long long>(rows * n);
  std::vector<long long> w;
  for (std::size_t i = 1; i <= rows; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      w.push_back(static_cast<long long>(i + j) * L - static_cast<long long>(i * j));
  std::vector<std::size_t> perm(rows * n);
  std::iota(perm.begin(), perm.end(), 0);
  return WeightOrder(rows * n, std::vector<std::vector<long long>>{std::move(w)}, std::move(perm));
}

namespace detail {

namespace {

// Solves M x = rhs exactly; returns nullopt when inconsistent or when the
// columns are dependent.
std::optional<std::vector<Rational>> solve_full_column_rank(std::vector<std::vector<Rational>> M,
                                                           std::vector<Rational> rhs) {
  const std::size_t rows = M.size(), cols = M.empty() ? 0 : M[0].size();
  std::size_t r = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t piv = r;
    while (piv < rows && M[piv][c] == 0) ++piv;
    if (piv == rows) return std::nullopt;
    std::swap(M[piv], M[r]);
    std::swap(rhs[piv], rhs[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || M[i][c] == 0) continue;
      Rational factor = M[i][c] / M[r][c];
      for (std::size_t k = c; k < cols; ++k) M[i][k] -= factor * M[r][k];
      rhs[i] -= factor * rhs[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (rhs[i] != 0) return std::nullopt;
  std::vector<Rational> x(cols);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = rhs[i] / M[i][pivot_col[i]];
  return x;
}

}  // namespace

bool hull_contains_by_subsets(const std::vector<std::vector<long long>>& points,
                              const std::vector<long long>& target) {
  const std::size_t k = points.size(), n = target.size();
  const std::size_t max_size = std::min(k, n + 1);
  // Caratheodory: a feasible point is a convex combination of at most n+1
  // affinely independent exponent vectors, so it suffices to try those subsets.
  std::vector<std::size_t> idx;
  for (std::size_t s = 1; s <= max_size; ++s) {
    std::vector<bool> mask(k, false);
    std::fill(mask.begin(), mask.begin() + static_cast<long>(s), true);
    do {
      idx.clear();
      for (std::size_t i = 0; i < k; ++i)
        if (mask[i]) idx.push_back(i);
      std::vector<std::vector<Rational>> M(n + 1, std::vector<Rational>(s));
      std::vector<Rational> rhs(n + 1);
      for (std::size_t row = 0; row < n; ++row) {
        for (std::size_t c = 0; c < s; ++c) M[row][c] = points[idx[c]][row];
        rhs[row] = target[row];
      }
      for (std::size_t c = 0; c < s; ++c) M[n][c] = 1;
      rhs[n] = 1;
      auto x = solve_full_column_rank(std::move(M), std::move(rhs));
      if (x && std::all_of(x->begin(), x->end(), [](const Rational& v) { return v >= 0; })) return true;
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  return false;
}

bool hull_contains_by_simplex(const std::vector<std::vector<long long>>& points,
                              const std::vector<long long>& target) {
  // Phase-one simplex with Bland's rule on: sum_j lambda_j v_j = target,
  // sum_j lambda_j = 1, lambda >= 0. Feasible iff the artificial optimum is 0.
  const std::size_t k = points.size(), n = target.size(), m = n + 1;
  const std::size_t cols = k + m;
  std::vector<std::vector<Rational>> T(m, std::vector<Rational>(cols + 1));
  for (std::size_t i = 0; i < m; ++i) {
    Rational b = i < n ? Rational(target[i]) : Rational(1);
    int sign = b < 0 ? -1 : 1;
    for (std::size_t j = 0; j < k; ++j) T[i][j] = Rational(sign * (i < n ? points[j][i] : 1));
    T[i][k + i] = 1;
    T[i][cols] = sign * b;
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = k + i;
  std::vector<Rational> cost(cols + 1);
  for (std::size_t j = 0; j <= cols; ++j) {
    if (j >= k && j < cols) continue;
    for (std::size_t i = 0; i < m; ++i) cost[j] -= T[i][j];
  }
  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      Rational ratio = T[i][cols] / T[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded cannot happen in phase one
    Rational piv = T[leave][enter];
    for (auto& v : T[leave]) v /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      Rational factor = T[i][enter];
      for (std::size_t j = 0; j <= cols; ++j) T[i][j] -= factor * T[leave][j];
    }
    Rational factor = cost[enter];
    for (std::size_t j = 0; j <= cols; ++j) cost[j] -= factor * T[leave][j];
    basis[leave] = enter;
  }
  return cost[cols] == 0;
}

}  // namespace detail

bool newton_contains_all_ones(const PrimePoly& f) {
  if (f.is_zero()) throw PreconditionError("Newton polytope of the zero polynomial");
  std::vector<std::vector<long long>> points;
  for (const auto& t : f.terms()) {
    std::vector<long long> v(f.arity());
    for (std::size_t i = 0; i < f.arity(); ++i) v[i] = t.monomial[i];
    points.push_back(std::move(v));
  }
  std::vector<long long> ones(f.arity(), 1);
  if (points.size() <= 12) return detail::hull_contains_by_subsets(points, ones);
  return detail::hull_contains_by_simplex(points, ones);
}

}  // namespace frobsplit

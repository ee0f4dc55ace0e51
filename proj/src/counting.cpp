#include "frobsplit/counting.hpp"

#include <algorithm>

#include "frobsplit/splitting.hpp"

namespace frobsplit {

namespace {

// A polynomial regrouped as sum over prefix monomials (first n-1 variables)
// times powers of the last variable, evaluated prefix by prefix.
class Evaluator {
 public:
  Evaluator(const PrimePoly& f, std::uint32_t p) : F_(p), n_(f.arity()) {
    max_exp_ = 0;
    last_deg_ = 0;
    for (const auto& t : f.terms()) {
      for (std::size_t i = 0; i < n_; ++i) max_exp_ = std::max(max_exp_, t.monomial[i]);
      terms_.push_back(t);
      if (n_) last_deg_ = std::max(last_deg_, t.monomial[n_ - 1]);
    }
    // powers[v][e] = v^e
    powers_.assign(p, std::vector<std::uint32_t>(max_exp_ + 1));
    for (std::uint32_t v = 0; v < p; ++v) {
      powers_[v][0] = 1;
      for (unsigned e = 1; e <= max_exp_; ++e) powers_[v][e] = F_.mul(powers_[v][e - 1], v);
    }
    coeffs_.assign(last_deg_ + 1, 0);
  }

  // Fix the first n-1 coordinates.
  void set_prefix(const std::vector<std::uint32_t>& point) {
    std::fill(coeffs_.begin(), coeffs_.end(), 0);
    for (const auto& t : terms_) {
      std::uint32_t v = t.coeff;
      for (std::size_t i = 0; i + 1 < n_ && v; ++i)
        if (t.monomial[i]) v = F_.mul(v, powers_[point[i]][t.monomial[i]]);
      unsigned e = n_ ? t.monomial[n_ - 1] : 0;
      coeffs_[e] = F_.add(coeffs_[e], v);
    }
  }

  // Horner in the last variable.
  std::uint32_t at_last(std::uint32_t x) const {
    std::uint32_t acc = 0;
    for (std::size_t e = coeffs_.size(); e-- > 0;) acc = F_.add(F_.mul(acc, x), coeffs_[e]);
    return acc;
  }

 private:
  PrimeField F_;
  std::size_t n_;
  unsigned max_exp_, last_deg_;
  std::vector<PrimePoly::Term> terms_;
  std::vector<std::vector<std::uint32_t>> powers_;
  std::vector<std::uint32_t> coeffs_;
};

void check_system(const std::vector<PrimePoly>& system, const PrimeField& field, std::size_t arity) {
  for (const auto& g : system) {
    if (g.arity() != arity) throw ArityMismatch("system polynomials live in different rings");
    if (!(g.domain() == field)) throw DomainMismatch("system polynomials over different fields");
  }
}

void check_budget(std::uint32_t p, std::size_t n, std::uint64_t budget) {
  long double work = 1;
  for (std::size_t i = 0; i < n; ++i) work *= p;
  if (work > static_cast<long double>(budget))
    throw BudgetExceeded("enumerating F_" + std::to_string(p) + "^" + std::to_string(n) + " exceeds the budget of " +
                         std::to_string(budget) + " points");
}

template <class Visit>
void for_each_zero(const std::vector<PrimePoly>& system, const PrimeField& field, std::size_t n,
                   std::uint64_t budget, Visit visit) {
  check_system(system, field, n);
  const std::uint32_t p = field.characteristic();
  check_budget(p, n, budget);
  std::vector<Evaluator> evals;
  for (const auto& g : system) evals.emplace_back(g, p);
  std::vector<std::uint32_t> point(n, 0);
  if (n == 0) {
    bool ok = true;
    for (const auto& g : system) ok = ok && g.is_zero();
    if (ok) visit(point);
    return;
  }
  for (;;) {
    for (auto& e : evals) e.set_prefix(point);
    for (std::uint32_t x = 0; x < p; ++x) {
      bool ok = true;
      for (const auto& e : evals) {
        if (e.at_last(x) != 0) {
          ok = false;
          break;
        }
      }
      if (ok) {
        point[n - 1] = x;
        visit(point);
      }
    }
    point[n - 1] = 0;
    std::size_t i = n - 1;
    while (i > 0 && ++point[i - 1] == p) point[--i] = 0;
    if (i == 0) break;
  }
}

}  // namespace

PointSet::PointSet(std::uint32_t p, std::size_t n, std::vector<std::vector<std::uint32_t>> points,
                   const std::vector<PrimePoly>& system)
    : p_(p), n_(n), points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  if (std::adjacent_find(points_.begin(), points_.end()) != points_.end())
    throw InvariantViolation("point set has duplicates");
  for (const auto& pt : points_) {
    if (pt.size() != n) throw ArityMismatch("point of the wrong length");
    for (const auto& g : system)
      if (eval_at(g, std::span<const std::uint32_t>(pt)) != 0) throw InvariantViolation("point off the variety");
  }
}

bool PointSet::contains(const std::vector<std::uint32_t>& point) const {
  return std::binary_search(points_.begin(), points_.end(), point);
}

PointSet enumerate_points(const std::vector<PrimePoly>& system, const PrimeField& field, std::size_t arity,
                          std::uint64_t budget) {
  std::vector<std::vector<std::uint32_t>> pts;
  for_each_zero(system, field, arity, budget, [&](const std::vector<std::uint32_t>& pt) { pts.push_back(pt); });
  return PointSet(field.characteristic(), arity, std::move(pts), system);
}

PointSet enumerate_points(const std::vector<PrimePoly>& system, std::uint64_t budget) {
  if (system.empty()) throw PreconditionError("empty system: the ambient space is unknown");
  return enumerate_points(system, system.front().domain(), system.front().arity(), budget);
}

std::uint64_t count_points(const std::vector<PrimePoly>& system, const PrimeField& field, std::size_t arity,
                           std::uint64_t budget) {
  std::uint64_t count = 0;
  for_each_zero(system, field, arity, budget, [&](const std::vector<std::uint32_t>&) { ++count; });
  return count;
}

namespace {

CongruenceReport report(std::uint64_t count, std::uint32_t p, std::uint32_t predicted) {
  auto mod = static_cast<std::uint32_t>(count % p);
  return {count, mod, predicted, mod == predicted};
}

std::uint32_t signed_constant(const PrimePoly& f, long sign_exponent) {
  const PrimeField& F = f.domain();
  auto c = splitting_constant(f).value();
  return (sign_exponent % 2 == 0) ? c : F.neg(c);
}

PrimePoly product(const std::vector<PrimePoly>& factors) {
  PrimePoly f = PrimePoly::constant(factors.front().domain(), factors.front().arity(), 1);
  for (const auto& g : factors) f *= g;
  return f;
}

void check_factors(const std::vector<PrimePoly>& factors) {
  if (factors.empty()) throw PreconditionError("no factors given");
  for (const auto& g : factors)
    if (g.is_constant()) throw PreconditionError("constant factor");
}

}  // namespace

CongruenceReport check_pointcount_congruence(const PrimePoly& f, std::uint64_t budget) {
  const long n = static_cast<long>(f.arity());
  if (f.degree() > n) throw PreconditionError("point-count congruence needs deg f <= n");
  auto count = count_points({f}, f.domain(), f.arity(), budget);
  return report(count, f.domain().characteristic(), signed_constant(f, n - 1));
}

CongruenceReport check_factored_congruence(const std::vector<PrimePoly>& factors, std::uint64_t budget) {
  check_factors(factors);
  auto f = product(factors);
  const long n = static_cast<long>(f.arity()), m = static_cast<long>(factors.size());
  if (f.degree() > n) throw PreconditionError("factored congruence needs deg of the product <= n");
  auto count = count_points(factors, f.domain(), f.arity(), budget);
  return report(count, f.domain().characteristic(), signed_constant(f, n - m));
}

CongruenceReport chevalley_warning_check(const std::vector<PrimePoly>& factors, std::uint64_t budget) {
  check_factors(factors);
  long total = 0;
  for (const auto& g : factors) total += g.degree();
  const auto& first = factors.front();
  if (total >= static_cast<long>(first.arity())) throw PreconditionError("Chevalley-Warning needs sum of degrees < n");
  auto count = count_points(factors, first.domain(), first.arity(), budget);
  return report(count, first.domain().characteristic(), 0);
}

}  // namespace frobsplit

#include "frobsplit/gvd.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace frobsplit {

namespace {

// Variable map from H x L to H; l goes to slot 0 and must not occur.
std::vector<std::size_t> to_h_map(std::size_t n, std::size_t ell) {
  std::vector<std::size_t> map(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    if (i != ell) map[i] = i < ell ? i : i - 1;
  return map;
}

PrimePoly to_h(const PrimePoly& f, std::size_t ell) {
  auto map = to_h_map(f.arity(), ell);
  return remap_variables(f, f.arity() - 1, std::span<const std::size_t>(map));
}

// Coefficients of the powers of l, as polynomials on H.
std::vector<PrimePoly> ell_coefficients(const PrimePoly& f, std::size_t ell) {
  std::map<unsigned, std::vector<PrimePoly::Term>> by_power;
  for (const auto& t : f.terms()) {
    Monomial m = t.monomial;
    m.set(ell, 0);
    by_power[t.monomial[ell]].push_back({m, t.coeff});
  }
  std::vector<PrimePoly> out;
  for (auto& [e, terms] : by_power)
    out.push_back(to_h(PrimePoly::from_terms(f.domain(), f.arity(), std::move(terms)), ell));
  return out;
}

void check_ell(std::size_t arity, std::size_t ell) {
  if (ell >= arity) throw ArityMismatch("line variable out of range");
  if (arity < 1) throw PreconditionError("decomposition needs at least one variable");
}

std::vector<std::vector<std::uint32_t>> points_of(const PolyIdeal& I, std::uint64_t budget) {
  return enumerate_points(I.generators(), I.field(), I.arity(), budget).points();
}

}  // namespace

LinearSplit split_poly(const PrimePoly& f, std::size_t ell) {
  check_ell(f.arity(), ell);
  if (f.degree_in(ell) != 1) throw PreconditionError("polynomial must have degree exactly 1 in the line variable");
  std::vector<PrimePoly::Term> t1, t2;
  for (const auto& t : f.terms()) {
    if (t.monomial[ell]) {
      Monomial m = t.monomial;
      m.set(ell, 0);
      t1.push_back({m, t.coeff});
    } else {
      t2.push_back(t);
    }
  }
  return {PrimePoly::from_terms(f.domain(), f.arity(), std::move(t1)),
          PrimePoly::from_terms(f.domain(), f.arity(), std::move(t2))};
}

WeightOrder line_weight(std::size_t arity, std::size_t ell) {
  check_ell(arity, ell);
  std::vector<long long> w(arity, 0);
  w[ell] = 1;
  return WeightOrder(arity, std::vector<std::vector<long long>>{w});
}

std::vector<std::uint32_t> GvdData::project(const std::vector<std::uint32_t>& point) const {
  if (point.size() != X.arity()) throw ArityMismatch("point of the wrong length");
  std::vector<std::uint32_t> h;
  h.reserve(point.size() - 1);
  for (std::size_t i = 0; i < point.size(); ++i)
    if (i != ell_index) h.push_back(point[i]);
  return h;
}

GvdData compute_gvd(const PolyIdeal& I, std::size_t ell) {
  const std::size_t n = I.arity();
  check_ell(n, ell);
  const PrimeField& F = I.field();
  auto limit = initial_ideal(I, line_weight(n, ell));
  auto pi = eliminate(I, {ell});
  auto lambda = eliminate(saturate(limit, PrimePoly::variable(F, n, ell)), {ell});
  std::vector<PrimePoly> coeffs;
  for (const auto& g : I.generators())
    for (auto& c : ell_coefficients(g, ell)) coeffs.push_back(std::move(c));
  PolyIdeal lambda_prime(F, n - 1, std::move(coeffs));
  std::optional<LinearSplit> split;
  if (I.generators().size() == 1 && I.generators().front().degree_in(ell) == 1)
    split = split_poly(I.generators().front(), ell);
  return GvdData{ell, split, I, limit, pi, lambda, lambda_prime};
}

GvdCountReport verify_class_identity(const GvdData& d, std::uint64_t budget) {
  const std::uint32_t p = d.X.field().characteristic();
  auto x = points_of(d.X, budget);
  auto xl = points_of(d.X_limit, budget);
  auto pi = enumerate_points(d.Pi.generators(), d.Pi.field(), d.Pi.arity(), budget);
  auto lam = enumerate_points(d.Lambda.generators(), d.Lambda.field(), d.Lambda.arity(), budget);
  auto lamp = enumerate_points(d.Lambda_prime.generators(), d.Lambda_prime.field(), d.Lambda_prime.arity(), budget);

  GvdCountReport r{x.size(), xl.size(), pi.size(), lam.size(), lamp.size(), true, true, false};
  for (const auto& h : lamp.points()) r.nested = r.nested && lam.contains(h);
  for (const auto& h : lam.points()) r.nested = r.nested && pi.contains(h);

  // Rebuild V(X') from Pi x {0} and Lam x L and compare as sets.
  std::set<std::vector<std::uint32_t>> rebuilt;
  auto lift = [&](const std::vector<std::uint32_t>& h, std::uint32_t l) {
    std::vector<std::uint32_t> pt(h.begin(), h.end());
    pt.insert(pt.begin() + static_cast<std::ptrdiff_t>(d.ell_index), l);
    return pt;
  };
  for (const auto& h : pi.points()) rebuilt.insert(lift(h, 0));
  for (const auto& h : lam.points())
    for (std::uint32_t l = 0; l < p; ++l) rebuilt.insert(lift(h, l));
  r.set_formula = std::equal(rebuilt.begin(), rebuilt.end(), xl.begin(), xl.end());

  r.identity = r.x_limit == r.x + std::uint64_t{p} * (r.lambda - std::min(r.lambda, r.lambda_prime)) &&
               r.lambda >= r.lambda_prime;
  return r;
}

std::vector<std::uint32_t> iota(const GvdData& d, const std::vector<std::uint32_t>& point) {
  auto on = [&](const std::vector<PrimePoly>& sys, const std::vector<std::uint32_t>& pt) {
    for (const auto& g : sys)
      if (eval_at(g, std::span<const std::uint32_t>(pt)) != 0) return false;
    return true;
  };
  if (point.size() != d.X.arity()) throw ArityMismatch("point of the wrong length");
  if (!on(d.X.generators(), point)) throw PreconditionError("point is not on X");
  auto image = point;
  if (!on(d.Lambda_prime.generators(), d.project(point))) image[d.ell_index] = 0;
  if (!on(d.X_limit.generators(), image)) throw InvariantViolation("image of a point of X is off the limit");
  return image;
}

IotaReport check_iota(const GvdData& d, std::uint64_t budget) {
  const std::uint32_t p = d.X.field().characteristic();
  auto x = points_of(d.X, budget);
  auto xl = enumerate_points(d.X_limit.generators(), d.X_limit.field(), d.X_limit.arity(), budget);
  IotaReport r{true, true, true};
  std::set<std::vector<std::uint32_t>> image;
  for (const auto& pt : x) {
    std::vector<std::uint32_t> q;
    try {
      q = iota(d, pt);
    } catch (const InvariantViolation&) {
      r.image_on_limit = false;
      continue;
    }
    if (!image.insert(q).second) r.injective = false;
  }
  auto lam = enumerate_points(d.Lambda.generators(), d.Lambda.field(), d.Lambda.arity(), budget);
  auto lamp = enumerate_points(d.Lambda_prime.generators(), d.Lambda_prime.field(), d.Lambda_prime.arity(), budget);
  std::size_t complement = 0;
  for (const auto& pt : xl.points()) {
    if (image.count(pt)) continue;
    ++complement;
    auto h = d.project(pt);
    if (!lam.contains(h) || lamp.contains(h)) r.complement_is_cylinder = false;
  }
  std::size_t expected = 0;
  for (const auto& h : lam.points()) expected += !lamp.contains(h);
  if (complement != expected * p) r.complement_is_cylinder = false;
  return r;
}

GvdSplitReport gvd_split_consistency(const PrimePoly& f, std::size_t ell, const PolyIdeal& I,
                                     const CompatOptions& options) {
  if (f.arity() != I.arity()) throw ArityMismatch("polynomial and ideal live in different rings");
  auto [g1, g2] = split_poly(f, ell);
  auto g1h = to_h(g1, ell);
  if (!is_splitting(g1h)) throw PreconditionError("the l-coefficient of f does not define a splitting of H");
  auto d = compute_gvd(I, ell);
  GvdSplitReport r;
  r.pi_split = is_compatibly_split(d.Pi, g1h, options);
  r.lambda_split = is_compatibly_split(d.Lambda, g1h, options);
  r.lambda_prime_split = is_compatibly_split(d.Lambda_prime, g1h, options);
  return r;
}

bool radicality_certificate(const PolyIdeal& I) {
  const std::size_t n = I.arity();
  std::vector<std::size_t> rev(n);
  std::iota(rev.rbegin(), rev.rend(), std::size_t{0});
  std::vector<WeightOrder> orders{WeightOrder::grlex(n), WeightOrder::lex(n), WeightOrder::lex(rev)};
  // graded reverse lex
  std::vector<std::vector<long long>> tiers{std::vector<long long>(n, 1)};
  for (std::size_t i = n; i-- > 0;) {
    std::vector<long long> w(n, 0);
    w[i] = -1;
    tiers.push_back(w);
  }
  std::vector<std::size_t> id(n);
  std::iota(id.begin(), id.end(), std::size_t{0});
  orders.emplace_back(n, tiers, id);
  for (const auto& o : orders)
    if (MonomialIdeal::initial(I, o).is_squarefree()) return true;
  return false;
}

}  // namespace frobsplit

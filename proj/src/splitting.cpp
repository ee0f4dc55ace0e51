#include "frobsplit/splitting.hpp"

#include <unordered_map>

namespace frobsplit {

PrimePoly tr(const PrimePoly& g) {
  const std::uint32_t p = g.domain().characteristic();
  std::vector<PrimePoly::Term> out;
  for (const auto& t : g.terms()) {
    Monomial root(g.arity());
    bool ok = true;
    for (std::size_t i = 0; i < g.arity() && ok; ++i) {
      unsigned e = t.monomial[i] + 1;
      ok = e % p == 0;
      if (ok) root.set(i, e / p - 1);
    }
    if (ok) out.push_back({root, t.coeff});
  }
  return PrimePoly::from_terms(g.domain(), g.arity(), std::move(out));
}

namespace {

Monomial all_ones(std::size_t n, unsigned e) {
  Monomial m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, e);
  return m;
}

std::optional<FieldElem> constant_from_power(const PrimePoly& f, const PrimePoly& f_power) {
  const std::uint32_t p = f.domain().characteristic();
  if (f.degree() <= static_cast<long>(f.arity()))
    return FieldElem(f_power.coeff(all_ones(f.arity(), p - 1)), f.domain());
  auto t = tr(f_power);
  if (!t.is_constant()) return std::nullopt;
  return FieldElem(t.constant_coeff(), f.domain());
}

}  // namespace

FieldElem splitting_constant(const PrimePoly& f) {
  auto c = constant_from_power(f, pow(f, f.domain().characteristic() - 1));
  if (!c) throw PreconditionError("Tr(f^{p-1}) is not a constant");
  return *c;
}

std::optional<FieldElem> is_splitting(const PrimePoly& f) {
  auto c = constant_from_power(f, pow(f, f.domain().characteristic() - 1));
  if (!c || c->is_zero()) return std::nullopt;
  return c->inverse();
}

SplittingSpec::SplittingSpec(PrimePoly poly)
    : f(std::move(poly)), p(f.domain().characteristic()), f_power(pow(f, p - 1)) {
  constant = constant_from_power(f, f_power);
  if (constant && !constant->is_zero()) normalizer = constant->inverse();
}

bool compatibly_split_oracle(const PolyIdeal& I, const SplittingSpec& spec, std::uint64_t budget) {
  if (!(I.field() == spec.f.domain())) throw DomainMismatch("ideal and polynomial over different fields");
  if (I.arity() != spec.f.arity()) throw ArityMismatch("ideal and polynomial in different rings");
  const std::size_t n = I.arity();
  const std::uint32_t p = spec.p;
  // p^n * #generators, saturating.
  long double work = static_cast<long double>(I.generators().size());
  for (std::size_t i = 0; i < n; ++i) work *= p;
  if (work > static_cast<long double>(budget))
    throw BudgetExceeded("compatibility criterion needs p^n * generators = " + std::to_string(static_cast<double>(work)) +
                         " trace evaluations, above the budget of " + std::to_string(budget));
  const PrimeField& F = I.field();
  for (const auto& g : I.generators()) {
    auto h = spec.f_power * g;
    // Tr(h m) collects exactly the terms x^e of h with e_i + m_i + 1 = 0 mod p,
    // so each term of h contributes to a single m. Monomials m that receive no
    // term give Tr(h m) = 0, which lies in I.
    std::unordered_map<Monomial, std::vector<PrimePoly::Term>, MonomialHash> classes;
    for (const auto& t : h.terms()) {
      Monomial m(n), root(n);
      for (std::size_t i = 0; i < n; ++i) {
        unsigned r = (p - 1 - t.monomial[i] % p) % p;
        m.set(i, r);
        root.set(i, (t.monomial[i] + r + 1) / p - 1);
      }
      classes[m].push_back({root, t.coeff});
    }
    for (auto& [m, terms] : classes)
      if (!I.contains(PrimePoly::from_terms(F, n, std::move(terms)))) return false;
  }
  return true;
}

bool compatibly_split_fedder(const PolyIdeal& I, const SplittingSpec& spec) {
  if (!(I.field() == spec.f.domain())) throw DomainMismatch("ideal and polynomial over different fields");
  if (I.arity() != spec.f.arity()) throw ArityMismatch("ideal and polynomial in different rings");
  const auto grlex = WeightOrder::grlex(I.arity());
  // The p-th powers of a Groebner basis of I form a Groebner basis of I^[p].
  std::vector<PrimePoly> frob;
  for (const auto& g : I.groebner_basis()) frob.push_back(pow(g, spec.p));
  for (const auto& g : I.generators())
    if (!normal_form(spec.f_power * g, frob, grlex).is_zero()) return false;
  return true;
}

bool is_compatibly_split(const PolyIdeal& I, const SplittingSpec& spec, const CompatOptions& options) {
  switch (options.strategy) {
    case CompatStrategy::Oracle:
      return compatibly_split_oracle(I, spec, options.budget);
    case CompatStrategy::Fedder:
      return compatibly_split_fedder(I, spec);
    case CompatStrategy::Automatic:
      break;
  }
  try {
    return compatibly_split_oracle(I, spec, options.budget);
  } catch (const BudgetExceeded&) {
    return compatibly_split_fedder(I, spec);
  }
}

bool is_compatibly_split(const PolyIdeal& I, const PrimePoly& f, const CompatOptions& options) {
  return is_compatibly_split(I, SplittingSpec(f), options);
}

bool trinit_check(const PrimePoly& g, const WeightOrder& order) {
  auto lhs = tr(initial_form(order, g));
  if (lhs.is_zero()) return true;
  auto t = tr(g);
  return !t.is_zero() && lhs == initial_form(order, t);
}

bool initial_form_contains_all_ones(const PrimePoly& f, const WeightOrder& order) {
  return f.arity() > 0 && initial_form(order, f).coeff(all_ones(f.arity(), 1)) != 0;
}

bool frobdegen_constant_check(const PrimePoly& f, const WeightOrder& order) {
  if (!initial_form_contains_all_ones(f, order))
    throw PreconditionError("the product of all variables is not a term of the initial form");
  const std::uint32_t p = f.domain().characteristic();
  return tr(pow(f, p - 1)) == tr(pow(initial_form(order, f), p - 1));
}

}  // namespace frobsplit

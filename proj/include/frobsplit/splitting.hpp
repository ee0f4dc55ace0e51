#pragma once

// The trace operator Tr on F_p[x_1..x_n], the near-splittings Tr(f^{p-1} .),
// and finite tests for compatibility of ideals with them.

#include <optional>

#include "frobsplit/groebner.hpp"
#include "frobsplit/monorder.hpp"
#include "frobsplit/polyring.hpp"

namespace frobsplit {

/// Termwise: x^e maps to x^((e+1)/p - 1) when every e_i + 1 is divisible by
/// p, otherwise to 0. Coefficients are unchanged (F_p is perfect).
PrimePoly tr(const PrimePoly& g);

/// Tr(f^{p-1}) as a field element. When deg f <= n this is the coefficient
/// of prod x_i^{p-1} in f^{p-1}; otherwise the full trace is computed and
/// must be constant (PreconditionError if not).
FieldElem splitting_constant(const PrimePoly& f);

/// c with c * Tr(f^{p-1}) = 1, when Tr(f^{p-1}) is a nonzero constant.
std::optional<FieldElem> is_splitting(const PrimePoly& f);

/// f together with the data of the near-splitting Tr(f^{p-1} .).
struct SplittingSpec {
  PrimePoly f;
  std::uint32_t p;
  PrimePoly f_power;                    // f^{p-1}
  std::optional<FieldElem> constant;    // Tr(f^{p-1}) when it is constant
  std::optional<FieldElem> normalizer;  // inverse of a nonzero constant

  explicit SplittingSpec(PrimePoly f);
  bool is_splitting() const { return normalizer.has_value(); }
};

enum class CompatStrategy {
  Oracle,     // the finite criterion over all p^n monomials
  Fedder,     // f^{p-1} g lies in the Frobenius power of I
  Automatic,  // Oracle within budget, Fedder beyond it
};

struct CompatOptions {
  std::uint64_t budget = 100000;  // cap on p^n * (number of generators) for the oracle
  CompatStrategy strategy = CompatStrategy::Automatic;
};

/// Whether Tr(f^{p-1} .) maps I into I.
bool is_compatibly_split(const PolyIdeal& I, const SplittingSpec& spec, const CompatOptions& options = {});
bool is_compatibly_split(const PolyIdeal& I, const PrimePoly& f, const CompatOptions& options = {});

/// The finite criterion: Tr(f^{p-1} m g) in I for every generator g and every
/// monomial m with exponents below p. Throws BudgetExceeded past the budget.
bool compatibly_split_oracle(const PolyIdeal& I, const SplittingSpec& spec, std::uint64_t budget);

/// Frobenius-power test: f^{p-1} g in I^[p] for every generator g.
bool compatibly_split_fedder(const PolyIdeal& I, const SplittingSpec& spec);

/// Tr(init g) is 0 or init(Tr g), for the weight tiers of `order`.
bool trinit_check(const PrimePoly& g, const WeightOrder& order);

/// Tr(f^{p-1}) = Tr(init(f)^{p-1}); requires prod x_i to be a term of init f.
bool frobdegen_constant_check(const PrimePoly& f, const WeightOrder& order);

/// Whether prod x_i (times a nonzero scalar) is a term of initial_form(order, f).
bool initial_form_contains_all_ones(const PrimePoly& f, const WeightOrder& order);

}  // namespace frobsplit

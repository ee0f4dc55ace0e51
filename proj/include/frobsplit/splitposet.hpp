#pragma once

// Posets of compatibly split ideals: the closure algorithm, the degeneration
// map to coordinate subspaces, basic elements and concatenated Groebner bases.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "frobsplit/groebner.hpp"
#include "frobsplit/splitting.hpp"

namespace frobsplit {

// ---------------------------------------------------------------------------
// Finite posets

/// A finite poset on 0..size-1, held as its full order relation.
class FinitePoset {
 public:
  /// `leq[i][j]` means i <= j. Throws InvariantViolation unless the relation
  /// is reflexive, antisymmetric and transitive.
  FinitePoset(std::vector<std::vector<bool>> leq, std::vector<std::string> labels = {});
  /// Order generated by the given cover pairs (lower, upper).
  static FinitePoset from_covers(std::size_t size, const std::vector<std::pair<std::size_t, std::size_t>>& covers,
                                 std::vector<std::string> labels = {});

  std::size_t size() const { return leq_.size(); }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq_[a][b]; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  /// Cover pairs (lower, upper), sorted.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;
  /// Greatest lower bound of a set, when one exists (the empty set has one
  /// only when the poset has a maximum).
  std::optional<std::size_t> glb(const std::vector<std::size_t>& elements) const;

 private:
  std::vector<std::vector<bool>> leq_;
  std::vector<std::string> labels_;
};

/// Elements p that are not the unique greatest lower bound of {q : q > p}.
/// Maximal elements are basic. Sorted ascending.
std::vector<std::size_t> basic_elements(const FinitePoset& Q);

/// Hasse diagram in Graphviz DOT, upper elements drawn on top.
std::string to_dot(const FinitePoset& Q, std::string_view name = "poset");

// ---------------------------------------------------------------------------
// Component hooks

/// Irreducible components (as prime ideals) of V(I), or nullopt when the hook
/// does not recognize I. The unit ideal has no components.
using ComponentHook = std::function<std::optional<std::vector<PolyIdeal>>(const PolyIdeal&)>;

/// Monomial ideals: the coordinate ideals of the minimal primes.
ComponentHook monomial_hook();
/// Principal ideals whose generator is, up to a scalar, a product of distinct
/// supplied irreducible factors.
ComponentHook factor_hook(std::vector<PrimePoly> factors);
/// Radical ideals equal to the intersection of the maximal-variety catalog
/// primes containing them.
ComponentHook catalog_hook(std::vector<PolyIdeal> primes);
/// First hook that recognizes the ideal wins.
ComponentHook combine_hooks(std::vector<ComponentHook> hooks);

// ---------------------------------------------------------------------------
// Split posets

struct SplitMember {
  PolyIdeal ideal;
  bool composite = false;  // the hooks could not decompose it
  bool verified = false;   // passed is_compatibly_split
  MonomialIdeal degen;     // initial ideal under the poset's total order
  DimDegree dim_degree;    // of degen (of its radical when not squarefree)
};

class SplitPoset {
 public:
  /// Members are registered as given (deduplicated), plus the zero ideal.
  /// Every member is checked with is_compatibly_split; a failure throws
  /// PreconditionError. `order` must be total; lex by default.
  static SplitPoset from_members(const PrimePoly& f, const std::vector<PolyIdeal>& members,
                                 std::optional<WeightOrder> order = std::nullopt, const CompatOptions& options = {});

  const PrimePoly& f() const { return f_; }
  const WeightOrder& order() const { return order_; }
  std::size_t arity() const { return f_.arity(); }
  const std::vector<SplitMember>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  /// Index of the member with the same reduced GB.
  std::optional<std::size_t> find(const PolyIdeal& I) const;
  /// V(member a) within V(member b).
  bool variety_leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
  /// Non-composite members under variety containment, labelled by index.
  FinitePoset resolved_poset() const;
  std::vector<std::size_t> resolved() const;
  /// Every degen is squarefree.
  bool degenerations_squarefree() const;

  /// Adds a member when new; returns its index.
  std::size_t add(const PolyIdeal& I, bool composite, const CompatOptions& options);

 private:
  SplitPoset(PrimePoly f, WeightOrder order);
  PrimePoly f_;
  SplittingSpec spec_;
  WeightOrder order_;
  std::vector<SplitMember> members_;
  std::vector<std::vector<bool>> leq_;
};

struct ClosureOptions {
  CompatOptions compat;
  std::vector<PolyIdeal> colon_by;  // designated J for I : J steps
  std::size_t max_members = 256;
  std::optional<WeightOrder> order;  // lex when absent
};

/// Iterates sums, intersections involving unresolved composites, colons and
/// components to a fixed point. Seeds must be compatibly split
/// (PreconditionError otherwise); produced ideals that fail the check throw
/// InvariantViolation. BudgetExceeded past max_members.
SplitPoset closure_algorithm(const std::vector<PolyIdeal>& seeds, const PrimePoly& f, const ComponentHook& hook,
                             const ClosureOptions& options = {});

/// Variables whose product is the leading term of f under the poset order;
/// throws PreconditionError unless that term is a product of distinct variables.
std::vector<std::size_t> init_support(const SplitPoset& P);

/// The containment-minimal non-composite member whose degeneration contains the
/// coordinate subspace V(x_i : i in zero_vars). zero_vars must lie in init_support.
std::size_t pi_f_init(const SplitPoset& P, const std::vector<std::size_t>& zero_vars);

struct PosetMapReport {
  std::vector<std::pair<std::vector<std::size_t>, std::size_t>> pi;  // coordinate subspace -> member
  bool order_preserving = true;
  bool surjective = true;
  bool two_sided = true;
  bool dimension_bound = true;  // dim pi(Y') >= dim Y'
  bool count_bound = true;      // #members of dim k <= C(n, k); only when init f = prod x_i
  bool ok() const { return order_preserving && surjective && two_sided && dimension_bound && count_bound; }
};

PosetMapReport check_poset_map(const SplitPoset& P);

struct DegreeReport {
  struct Row {
    std::size_t member;
    std::size_t fiber_degree;  // number of equal-dimensional subspaces over it
    std::size_t degree;        // degree of its degeneration
  };
  std::vector<Row> rows;
  bool ok = true;
};

/// Requires f homogeneous.
DegreeReport degree_identity_check(const SplitPoset& P);

struct ConcatReport {
  bool certified = false;  // every subset intersection has squarefree initial ideal
  bool holds = false;      // init(sum) = sum of inits; meaningful when certified
};

/// Throws BudgetExceeded for more than 12 ideals.
ConcatReport concat_groebner_check(const std::vector<PolyIdeal>& ideals, const WeightOrder& order);

/// h + l -> h + l - l_f(h) along coordinate j, using the members of P.
std::vector<std::uint32_t> iota_shift(const SplitPoset& P, std::size_t j, const std::vector<std::uint32_t>& point,
                                      std::uint64_t budget = 10'000'000);

struct IotaChainReport {
  bool bijective = true;
  bool into_initial = true;  // each member's points land in its initial member's points
  bool ok() const { return bijective && into_initial; }
};

/// Composes the shifts along the lex order of P (most significant variable
/// first), degenerating the members one coordinate at a time, and checks the
/// result pointwise. Requires a pure lex order.
IotaChainReport check_iota_chain(const SplitPoset& P, std::uint64_t budget = 10'000'000);

/// Non-cylinder members (not of the form P x L along `ell`) have pairwise
/// distinct projection closures.
bool projection_injectivity_check(const SplitPoset& P, std::size_t ell);

}  // namespace frobsplit

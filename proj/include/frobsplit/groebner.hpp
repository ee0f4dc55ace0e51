#pragma once

// Buchberger's algorithm over F_p and the ideal operations built on it.

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "frobsplit/monorder.hpp"
#include "frobsplit/polyring.hpp"

namespace frobsplit {

/// Reduced Groebner basis of the ideal generated by `gens` under a total
/// well-order: monic, fully interreduced, sorted by decreasing leading monomial.
/// An empty result is the zero ideal; {1} is the unit ideal.
std::vector<PrimePoly> buchberger(const std::vector<PrimePoly>& gens, const WeightOrder& order);

/// Remainder of f after full reduction by `basis` (any list; a GB gives the normal form).
PrimePoly normal_form(const PrimePoly& f, const std::vector<PrimePoly>& basis, const WeightOrder& order);

class MonomialIdeal;

/// An ideal of F_p[x_1..x_n] given by generators, with reduced Groebner bases
/// cached per order. Copies share the cache.
class PolyIdeal {
 public:
  PolyIdeal(PrimeField field, std::size_t arity, std::vector<PrimePoly> generators = {});
  static PolyIdeal unit(PrimeField field, std::size_t arity);
  static PolyIdeal from_monomials(PrimeField field, const MonomialIdeal& m);

  const PrimeField& field() const { return field_; }
  std::size_t arity() const { return arity_; }
  const std::vector<PrimePoly>& generators() const& { return generators_; }
  std::vector<PrimePoly> generators() && { return std::move(generators_); }

  /// Reduced GB under `order` (refined to a total order when it is not).
  const std::vector<PrimePoly>& groebner_basis(const WeightOrder& order) const;
  /// Reduced GB under graded lex; the canonical form used for equality.
  const std::vector<PrimePoly>& groebner_basis() const;

  bool is_zero() const { return groebner_basis().empty(); }
  bool is_unit() const;
  bool contains(const PrimePoly& f) const;
  /// J is a subset of this ideal.
  bool contains(const PolyIdeal& J) const;

  void check_same_ring(const PolyIdeal& other) const;

  friend bool operator==(const PolyIdeal& a, const PolyIdeal& b);

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::string, std::vector<PrimePoly>> bases;
  };

  PrimeField field_;
  std::size_t arity_;
  std::vector<PrimePoly> generators_;
  std::shared_ptr<Cache> cache_;
};

bool ideal_member(const PrimePoly& f, const PolyIdeal& I);
PolyIdeal ideal_sum(const PolyIdeal& I, const PolyIdeal& J);
PolyIdeal ideal_product(const PolyIdeal& I, const PolyIdeal& J);
PolyIdeal ideal_intersect(const PolyIdeal& I, const PolyIdeal& J);
/// I : <g>.
PolyIdeal ideal_colon(const PolyIdeal& I, const PrimePoly& g);
/// I : J, intersected over J's generators; J must be nonzero.
PolyIdeal ideal_colon(const PolyIdeal& I, const PolyIdeal& J);
/// I : f^infinity.
PolyIdeal saturate(const PolyIdeal& I, const PrimePoly& f);

/// I intersected with the subring in the remaining variables, as an ideal of
/// the smaller ring (remaining variables keep their relative order).
PolyIdeal eliminate(const PolyIdeal& I, const std::vector<std::size_t>& vars);
/// Same elimination ideal, kept in the original ring.
PolyIdeal eliminate_in_place(const PolyIdeal& I, const std::vector<std::size_t>& vars);

/// Ideal of leading forms: generated by the initial forms (under the weight
/// tiers of `order`) of a GB for the refined order. Monomial when `order` is total.
PolyIdeal initial_ideal(const PolyIdeal& I, const WeightOrder& order);

/// Ideal generated by the images of I's generators under a substitution of
/// every variable by a polynomial in the target ring.
PolyIdeal substitute_ideal(const PolyIdeal& I, const std::vector<PrimePoly>& images);

/// Monomial ideal held as its minimal generators.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t arity, std::vector<Monomial> generators = {});
  /// Leading monomials of I's reduced GB under the total order.
  static MonomialIdeal initial(const PolyIdeal& I, const WeightOrder& order);
  /// Throws PreconditionError when some generator is not a monomial.
  static MonomialIdeal from_ideal(const PolyIdeal& I);

  std::size_t arity() const { return arity_; }
  const std::vector<Monomial>& generators() const& { return gens_; }
  std::vector<Monomial> generators() && { return std::move(gens_); }
  bool contains(const Monomial& m) const;
  bool contains(const MonomialIdeal& J) const;
  bool is_squarefree() const;
  bool is_unit() const;
  bool is_zero() const { return gens_.empty(); }

  MonomialIdeal operator+(const MonomialIdeal& o) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t arity_;
  std::vector<Monomial> gens_;  // minimal, sorted descending grlex
};

/// Minimal primes of a squarefree monomial ideal, each a sorted set of
/// variables (the prime is generated by them). The unit ideal has none.
std::vector<std::vector<std::size_t>> monomial_minimal_primes(const MonomialIdeal& M);

struct DimDegree {
  long dimension;  // -1 for the unit ideal
  std::size_t degree;
  friend bool operator==(const DimDegree&, const DimDegree&) = default;
};

/// Dimension and degree of the Stanley-Reisner scheme of a squarefree ideal.
DimDegree monomial_dim_degree(const MonomialIdeal& M);

/// Ideal generated by the given variables.
PolyIdeal coordinate_ideal(PrimeField field, std::size_t arity, const std::vector<std::size_t>& vars);

std::string to_string(const PolyIdeal& I, const VariableNames& names);
std::string to_string(const MonomialIdeal& M, const VariableNames& names);

}  // namespace frobsplit

#pragma once

// Monomial orders given by tiers of weight vectors plus an optional lex tiebreak.
//
// Tier k is consulted only when all earlier tiers tie, which models weights
// with values in N[eps] exactly. Rational tier entries are accepted and scaled
// to integers per tier; scaling a tier does not change the order it induces.

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "frobsplit/polyring.hpp"

namespace frobsplit {

using Rational = boost::multiprecision::cpp_rational;

class WeightOrder {
 public:
  /// `lex`, when present, lists variable indices from most to least significant.
  WeightOrder(std::size_t arity, std::vector<std::vector<Rational>> tiers,
              std::optional<std::vector<std::size_t>> lex = std::nullopt);
  WeightOrder(std::size_t arity, const std::vector<std::vector<long long>>& tiers,
              std::optional<std::vector<std::size_t>> lex = std::nullopt);

  /// Single weight tier, no tiebreak.
  static WeightOrder weight(std::vector<long long> w);
  /// Pure lex with x1 > x2 > ... .
  static WeightOrder lex(std::size_t arity);
  static WeightOrder lex(std::vector<std::size_t> permutation);
  /// Graded lex with x1 > x2 > ... .
  static WeightOrder grlex(std::size_t arity);

  std::size_t arity() const { return arity_; }
  const std::vector<std::vector<long long>>& tiers() const { return tiers_; }
  const std::optional<std::vector<std::size_t>>& lex_tiebreak() const { return lex_; }
  bool is_total() const { return lex_.has_value(); }

  /// Weight of m under tier k.
  long long tier_weight(std::size_t k, const Monomial& m) const;

  /// Negative, zero or positive; zero only for equal monomials when total.
  int compare(const Monomial& a, const Monomial& b) const;
  /// Comparison using the weight tiers alone.
  int compare_weights(const Monomial& a, const Monomial& b) const;

  /// This order when total; otherwise the tiers followed by graded lex.
  WeightOrder refined() const;

  /// True when the refined order is a well-order, i.e. every variable is larger
  /// than 1. Buchberger requires it.
  bool is_well_order() const;

  /// Stable textual key, used for caching.
  std::string key() const;

  friend bool operator==(const WeightOrder&, const WeightOrder&) = default;

 private:
  WeightOrder() = default;
  void check_lex() const;

  std::size_t arity_ = 0;
  std::vector<std::vector<long long>> tiers_;
  std::optional<std::vector<std::size_t>> lex_;
};

/// Sum of the terms of f that are maximal under the weight tiers (lex ignored).
PrimePoly initial_form(const WeightOrder& order, const PrimePoly& f);
IntPoly initial_form(const WeightOrder& order, const IntPoly& f);

/// The unique maximal term of f under a total order.
PrimePoly leading_term(const WeightOrder& order, const PrimePoly& f);
IntPoly leading_term(const WeightOrder& order, const IntPoly& f);

/// Weight order on a rows x n matrix of variables m_ij (row-major) under which
/// every minor's leading term is its antidiagonal product. Total (lex tiebreak).
WeightOrder antidiagonal_weight(std::size_t n, std::size_t rows);

/// Whether (1,...,1) lies in the convex hull of the exponent vectors of f.
bool newton_contains_all_ones(const PrimePoly& f);

namespace detail {
/// Convex-hull membership of `target` among `points`, two independent methods.
bool hull_contains_by_subsets(const std::vector<std::vector<long long>>& points,
                              const std::vector<long long>& target);
bool hull_contains_by_simplex(const std::vector<std::vector<long long>>& points,
                              const std::vector<long long>& target);
}  // namespace detail

}  // namespace frobsplit

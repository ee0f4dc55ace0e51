#pragma once

// Brute-force enumeration of F_p-points and the point-count congruences.

#include <cstdint>
#include <vector>

#include "frobsplit/polyring.hpp"

namespace frobsplit {

inline constexpr std::uint64_t kDefaultPointBudget = 10'000'000;

/// Common zeros of a polynomial system in F_p^n, listed in row-major order
/// (last coordinate fastest).
class PointSet {
 public:
  /// Revalidates: every point must satisfy every generator, no duplicates.
  PointSet(std::uint32_t p, std::size_t n, std::vector<std::vector<std::uint32_t>> points,
           const std::vector<PrimePoly>& system);

  std::uint32_t p() const { return p_; }
  std::size_t n() const { return n_; }
  const std::vector<std::vector<std::uint32_t>>& points() const& { return points_; }
  std::vector<std::vector<std::uint32_t>> points() && { return std::move(points_); }
  std::size_t size() const { return points_.size(); }
  bool contains(const std::vector<std::uint32_t>& point) const;

 private:
  std::uint32_t p_;
  std::size_t n_;
  std::vector<std::vector<std::uint32_t>> points_;  // sorted
};

/// All common zeros. `field` and `arity` describe the ambient space, which is
/// needed when the system is empty. Throws BudgetExceeded when p^n > budget.
PointSet enumerate_points(const std::vector<PrimePoly>& system, const PrimeField& field, std::size_t arity,
                          std::uint64_t budget = kDefaultPointBudget);
PointSet enumerate_points(const std::vector<PrimePoly>& system, std::uint64_t budget = kDefaultPointBudget);

/// Number of common zeros, without materializing them.
std::uint64_t count_points(const std::vector<PrimePoly>& system, const PrimeField& field, std::size_t arity,
                           std::uint64_t budget = kDefaultPointBudget);

struct CongruenceReport {
  std::uint64_t count;
  std::uint32_t count_mod_p;
  std::uint32_t predicted_mod_p;
  bool ok;
};

/// |V(f)| against (-1)^{n-1} Tr(f^{p-1}); requires deg f <= n.
CongruenceReport check_pointcount_congruence(const PrimePoly& f, std::uint64_t budget = kDefaultPointBudget);

/// |V(f_1..f_m)| against (-1)^{n-m} Tr(f^{p-1}) for f = prod f_i; requires
/// nonconstant factors and deg f <= n.
CongruenceReport check_factored_congruence(const std::vector<PrimePoly>& factors,
                                           std::uint64_t budget = kDefaultPointBudget);

/// |V(f_1..f_m)| = 0 mod p; requires sum of degrees < n.
CongruenceReport chevalley_warning_check(const std::vector<PrimePoly>& factors,
                                         std::uint64_t budget = kDefaultPointBudget);

}  // namespace frobsplit

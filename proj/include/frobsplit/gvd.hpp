#pragma once

// Geometric vertex decomposition of X inside H x L, where L is the line of
// one chosen coordinate l and H the span of the remaining coordinates.
//
//   X'  = limit of X under scaling l to 0 = V(init_l I)
//   Pi  = closure of the projection of X to H
//   Lam = {h : {h} x L lies in X'}
//   Lam' = {h : {h} x L lies in X}

#include <optional>
#include <vector>

#include "frobsplit/counting.hpp"
#include "frobsplit/groebner.hpp"
#include "frobsplit/splitting.hpp"

namespace frobsplit {

struct LinearSplit {
  PrimePoly g1;  // f = l*g1 + g2, neither part involving l
  PrimePoly g2;
};

/// Requires f to have degree exactly 1 in the variable `ell`.
LinearSplit split_poly(const PrimePoly& f, std::size_t ell);

struct GvdData {
  std::size_t ell_index;
  std::optional<LinearSplit> split;  // set for a principal ideal linear in l
  PolyIdeal X;                       // ring H x L
  PolyIdeal X_limit;                 // ring H x L
  PolyIdeal Pi;                      // ring H
  PolyIdeal Lambda;                  // ring H
  PolyIdeal Lambda_prime;            // ring H

  /// Point of H x L -> its H-coordinates.
  std::vector<std::uint32_t> project(const std::vector<std::uint32_t>& point) const;
};

GvdData compute_gvd(const PolyIdeal& I, std::size_t ell);

/// The weight order putting weight 1 on `ell` and 0 elsewhere.
WeightOrder line_weight(std::size_t arity, std::size_t ell);

struct GvdCountReport {
  std::uint64_t x, x_limit, pi, lambda, lambda_prime;
  bool nested;         // Lam' within Lam within Pi, pointwise
  bool set_formula;    // V(X') = (Pi x {0}) union (Lam x L), pointwise
  bool identity;       // |X'| = |X| + p |Lam \ Lam'|
  bool ok() const { return nested && set_formula && identity; }
};

/// Enumerates all point sets over the ideals' field.
GvdCountReport verify_class_identity(const GvdData& d, std::uint64_t budget = kDefaultPointBudget);

/// (h, l) when h is in Lam', else (h, 0). Throws PreconditionError when the
/// point is off X and InvariantViolation when the image is off X'.
std::vector<std::uint32_t> iota(const GvdData& d, const std::vector<std::uint32_t>& point);

struct IotaReport {
  bool injective;
  bool image_on_limit;
  bool complement_is_cylinder;  // X' minus image = (Lam \ Lam') x L
  bool ok() const { return injective && image_on_limit && complement_is_cylinder; }
};

IotaReport check_iota(const GvdData& d, std::uint64_t budget = kDefaultPointBudget);

struct GvdSplitReport {
  bool pi_split;
  bool lambda_split;
  bool lambda_prime_split;  // reported, not required
  bool ok() const { return pi_split && lambda_split; }
};

/// With f = l g1 + g2 and Tr_H(g1^{p-1} .) a splitting of H, checks that Pi and
/// Lam are compatibly split by it; reports the verdict for Lam'.
GvdSplitReport gvd_split_consistency(const PrimePoly& f, std::size_t ell, const PolyIdeal& I,
                                     const CompatOptions& options = {});

/// Certifies radicality when some standard order gives a squarefree initial ideal.
bool radicality_certificate(const PolyIdeal& I);

}  // namespace frobsplit

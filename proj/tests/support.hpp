#pragma once

// Seeded random generators shared by the property tests.

#include <random>

#include "frobsplit/polyring.hpp"

namespace frobsplit::testing {

/// Random polynomial in n variables over F_p with up to `terms` terms of total degree <= max_deg.
inline PrimePoly random_poly(std::mt19937_64& rng, std::uint32_t p, std::size_t n, unsigned max_deg,
                             unsigned terms) {
  PrimeField F(p);
  std::vector<PrimePoly::Term> out;
  unsigned count = 1 + static_cast<unsigned>(rng() % terms);
  for (unsigned t = 0; t < count; ++t) {
    Monomial m(n);
    unsigned budget = static_cast<unsigned>(rng() % (max_deg + 1));
    for (unsigned k = 0; k < budget; ++k) {
      std::size_t v = rng() % n;
      m.set(v, m[v] + 1);
    }
    out.push_back({m, F.from_integer(static_cast<long long>(1 + rng() % (p - 1 ? p - 1 : 1)))});
  }
  return PrimePoly::from_terms(F, n, std::move(out));
}

/// Random nonzero polynomial (retries until nonzero).
inline PrimePoly random_nonzero_poly(std::mt19937_64& rng, std::uint32_t p, std::size_t n, unsigned max_deg,
                                     unsigned terms) {
  for (;;) {
    auto f = random_poly(rng, p, n, max_deg, terms);
    if (!f.is_zero()) return f;
  }
}

}  // namespace frobsplit::testing

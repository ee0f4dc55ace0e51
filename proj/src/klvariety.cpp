#include "frobsplit/klvariety.hpp"

#include <algorithm>
#include <numeric>

namespace frobsplit {

namespace {

IntPoly int_const(std::size_t arity, long long c) { return IntPoly::constant(IntegerRing{}, arity, c); }

void check_index(std::size_t a, std::size_t n) {
  if (a < 1 || a >= n) throw PreconditionError("simple reflection index out of range");
}

// Positions of `word` kept, as a subword.
std::vector<std::size_t> restrict_word(const std::vector<std::size_t>& word, std::uint64_t keep_mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < word.size(); ++i)
    if (keep_mask >> i & 1U) out.push_back(word[i]);
  return out;
}

void collect_words(const Permutation& v, std::vector<std::size_t>& suffix, std::vector<std::vector<std::size_t>>& out) {
  if (v.length() == 0) {
    out.emplace_back(suffix.rbegin(), suffix.rend());
    return;
  }
  // v = u * s_d with l(u) = l(v) - 1 exactly when d is a descent of v.
  for (std::size_t d : v.descents()) {
    suffix.push_back(d);
    collect_words(v * Permutation::simple(v.size(), d), suffix, out);
    suffix.pop_back();
  }
}

using NumMatrix = std::vector<std::vector<std::uint32_t>>;

std::uint32_t num_det(NumMatrix a, std::uint32_t p) {
  const std::size_t k = a.size();
  PrimeField F(p);
  std::uint32_t det = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t r = c;
    while (r < k && a[r][c] == 0) ++r;
    if (r == k) return 0;
    if (r != c) {
      std::swap(a[r], a[c]);
      det = F.neg(det);
    }
    det = F.mul(det, a[c][c]);
    auto inv = F.inv(a[c][c]);
    for (std::size_t i = c + 1; i < k; ++i) {
      auto factor = F.mul(a[i][c], inv);
      if (factor == 0) continue;
      for (std::size_t j = c; j < k; ++j) a[i][j] = F.sub(a[i][j], F.mul(factor, a[c][j]));
    }
  }
  return det;
}

std::uint32_t num_minor(const NumMatrix& g, std::size_t i, std::uint32_t p) {
  NumMatrix sub(i, std::vector<std::uint32_t>(i));
  for (std::size_t r = 0; r < i; ++r)
    for (std::size_t c = 0; c < i; ++c) sub[r][c] = g[r][c];
  return num_det(std::move(sub), p);
}

// Rows a, a+1 (1-based a) replaced by [[c, -1], [1, 0]] times them.
NumMatrix apply_er(const NumMatrix& g, std::size_t a, std::uint32_t c, std::uint32_t p) {
  PrimeField F(p);
  NumMatrix out = g;
  for (std::size_t j = 0; j < g.size(); ++j) {
    out[a - 1][j] = F.sub(F.mul(c, g[a - 1][j]), g[a][j]);
    out[a][j] = g[a - 1][j];
  }
  return out;
}

// Rows a, a+1 replaced by [[0, -1], [1, 0]] times them.
NumMatrix apply_r(const NumMatrix& g, std::size_t a, std::uint32_t p) { return apply_er(g, a, 0, p); }

}  // namespace

Permutation demazure_product(const std::vector<std::size_t>& word, std::size_t n) {
  auto w = Permutation::identity(n);
  for (std::size_t a : word) {
    check_index(a, n);
    auto ws = w * Permutation::simple(n, a);
    if (ws.length() > w.length()) w = std::move(ws);
  }
  return w;
}

ReducedWord::ReducedWord(std::size_t n, std::vector<std::size_t> entries)
    : n_(n), entries_(std::move(entries)), v_(demazure_product(entries_, n)) {
  if (v_.length() != entries_.size()) throw PreconditionError("word is not reduced");
}

ReducedWord ReducedWord::parse(std::size_t n, std::string_view digits) {
  std::vector<std::size_t> w;
  for (char c : digits) {
    if (c == ',' || c == ' ') continue;
    if (c < '1' || c > '9') throw ParseError("word entries must be digits 1-9");
    w.push_back(static_cast<std::size_t>(c - '0'));
  }
  return ReducedWord(n, std::move(w));
}

std::vector<ReducedWord> reduced_words(const Permutation& v) {
  std::vector<std::vector<std::size_t>> words;
  std::vector<std::size_t> suffix;
  collect_words(v, suffix, words);
  std::sort(words.begin(), words.end());
  std::vector<ReducedWord> out;
  out.reserve(words.size());
  for (auto& w : words) out.emplace_back(v.size(), std::move(w));
  return out;
}

ReducedWord square_word(std::size_t n) {
  if (n < 1) throw PreconditionError("n must be positive");
  std::vector<std::size_t> w;
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t s = 0; s < n; ++s) w.push_back(n + k - 1 - s);
  return ReducedWord(2 * n, std::move(w));
}

PolyMatrix bott_samelson_matrix(const ReducedWord& Q) {
  const std::size_t n = Q.n(), N = Q.size();
  PolyMatrix M(n, std::vector<IntPoly>(n, int_const(N, 0)));
  for (std::size_t i = 0; i < n; ++i) M[i][i] = int_const(N, 1);
  // Right multiplication by [[c, -1], [1, 0]] on columns a, a+1:
  // new col a = c * col a + col a+1, new col a+1 = -col a.
  for (std::size_t k = 0; k < N; ++k) {
    const std::size_t a = Q.entries()[k] - 1;
    auto c = IntPoly::variable(IntegerRing{}, N, k);
    for (std::size_t r = 0; r < n; ++r) {
      IntPoly left = c * M[r][a] + M[r][a + 1];
      IntPoly right = -M[r][a];
      M[r][a] = std::move(left);
      M[r][a + 1] = std::move(right);
    }
  }
  return M;
}

IntPoly determinant(const PolyMatrix& M) {
  const std::size_t k = M.size();
  if (k == 0) throw PreconditionError("empty matrix");
  const std::size_t arity = M[0][0].arity();
  if (k == 1) return M[0][0];
  // Laplace expansion along the first row, skipping zero entries.
  IntPoly det = int_const(arity, 0);
  for (std::size_t j = 0; j < k; ++j) {
    if (M[0][j].is_zero()) continue;
    PolyMatrix sub;
    sub.reserve(k - 1);
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<IntPoly> row;
      row.reserve(k - 1);
      for (std::size_t c = 0; c < k; ++c)
        if (c != j) row.push_back(M[r][c]);
      sub.push_back(std::move(row));
    }
    IntPoly term = M[0][j] * determinant(sub);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

IntPoly upper_left_minor(const PolyMatrix& M, std::size_t i) {
  if (i < 1 || i > M.size()) throw PreconditionError("minor size out of range");
  PolyMatrix sub;
  for (std::size_t r = 0; r < i; ++r) sub.emplace_back(M[r].begin(), M[r].begin() + static_cast<std::ptrdiff_t>(i));
  return determinant(sub);
}

IntPoly kl_splitting_poly(const ReducedWord& Q) {
  const std::size_t N = Q.size();
  auto M = bott_samelson_matrix(Q);
  IntPoly f = int_const(N, 1);
  for (std::size_t i = 1; i < Q.n(); ++i) f *= upper_left_minor(M, i);
  auto lead = leading_term(WeightOrder::lex(N), f);
  std::vector<unsigned> ones(N, 1);
  if (lead.size() != 1 || lead.terms()[0].monomial != Monomial::from_exponents(ones) ||
      (lead.terms()[0].coeff != 1 && lead.terms()[0].coeff != -1))
    throw InvariantViolation("lex leading term of the splitting polynomial is not the product of the c_i");
  return f;
}

PolyIdeal kl_ideal(const ReducedWord& Q, const Permutation& w, std::uint32_t p) {
  const std::size_t n = Q.n();
  if (w.size() != n) throw ArityMismatch("permutation and word live in different S_n");
  if (!bruhat_leq(w, Q.target())) throw PreconditionError("w is not below the word's product");
  PrimeField F(p);
  auto M = bott_samelson_matrix(Q);
  std::vector<PrimePoly> images;
  images.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) images.push_back(reduce_mod_p(M[r][c], F));
  // The Bott-Samelson matrix at c = 0 has its entries at (v(j), j), which is
  // v^{-1} in the row convention of the rank conditions.
  auto fulton = fulton_generators(w.inverse(), F, n * n);
  std::vector<PrimePoly> gens;
  for (const auto& g : fulton.generators()) {
    auto h = substitute(g, std::span<const PrimePoly>(images));
    if (!h.is_zero()) gens.push_back(std::move(h));
  }
  return PolyIdeal(F, Q.size(), std::move(gens));
}

MonomialIdeal subword_complex(const ReducedWord& Q, const Permutation& w) {
  const std::size_t N = Q.size();
  if (w.size() != Q.n()) throw ArityMismatch("permutation and word live in different S_n");
  if (!bruhat_leq(w, Q.target())) throw PreconditionError("w is not below the word's product");
  if (N > 30) throw BudgetExceeded("subword complex limited to words of length 30");
  const std::uint64_t all = (std::uint64_t{1} << N) - 1;
  auto is_face = [&](std::uint64_t F) {
    return bruhat_leq(w, demazure_product(restrict_word(Q.entries(), all & ~F), Q.n()));
  };
  // Faces are closed under subsets, so minimal non-faces are the non-faces
  // all of whose one-smaller subsets are faces.
  std::vector<Monomial> gens;
  for (std::uint64_t F = 1; F <= all; ++F) {
    if (is_face(F)) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < N && minimal; ++i)
      if ((F >> i & 1U) && !is_face(F & ~(std::uint64_t{1} << i))) minimal = false;
    if (!minimal) continue;
    std::vector<unsigned> e(N, 0);
    for (std::size_t i = 0; i < N; ++i) e[i] = F >> i & 1U;
    gens.push_back(Monomial::from_exponents(e));
  }
  return MonomialIdeal(N, std::move(gens));
}

KlPoset kl_poset(const ReducedWord& Q, std::uint32_t p, const CompatOptions& options) {
  PrimeField F(p);
  auto f = reduce_mod_p(kl_splitting_poly(Q), F);
  std::vector<Permutation> perms;
  for (const auto& w : all_permutations(Q.n()))
    if (bruhat_leq(w, Q.target())) perms.push_back(w);
  std::vector<PolyIdeal> ideals;
  for (const auto& w : perms) ideals.push_back(kl_ideal(Q, w, p));
  KlPoset out{SplitPoset::from_members(f, ideals, WeightOrder::lex(Q.size()), options), perms, {}};
  for (const auto& I : ideals) out.member_of.push_back(*out.poset.find(I));
  if (out.poset.size() != perms.size()) throw InvariantViolation("distinct permutations gave equal ideals");
  return out;
}

MomegaReport momega_identity_check(std::size_t n, std::uint32_t p, std::size_t trials, std::uint64_t seed) {
  if (n < 2) throw PreconditionError("n must be at least 2");
  PrimeField F(p);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> coin(0, p - 1);
  MomegaReport report;
  for (std::size_t t = 0; t < trials; ++t) {
    NumMatrix g(n, std::vector<std::uint32_t>(n));
    for (auto& row : g)
      for (auto& x : row) x = coin(rng);
    const std::uint32_t c = coin(rng);
    for (std::size_t j = 1; j < n; ++j) {
      auto moved = apply_er(g, j, c, p);
      for (std::size_t i = 1; i < n; ++i) {
        if (i != j) {
          ++report.orthogonal_checks;
          if (num_minor(moved, i, p) != num_minor(g, i, p)) ++report.failures;
        } else {
          ++report.pairing_checks;
          auto rhs = F.add(F.mul(c, num_minor(g, i, p)), num_minor(apply_r(g, j, p), i, p));
          if (num_minor(moved, i, p) != rhs) ++report.failures;
        }
      }
    }
  }
  return report;
}

}  // namespace frobsplit

#include <doctest.h>

#include <random>

#include "frobsplit/klvariety.hpp"

using namespace frobsplit;

namespace {

Permutation P(std::string_view s) { return Permutation::parse(s); }

IntPoly C(std::string_view s, std::size_t N) {
  return parse_polynomial(s, IntegerRing{}, VariableNames::indexed("c", N));
}

// Ordinary product s_{a_1} ... s_{a_k}.
Permutation word_product(const std::vector<std::size_t>& word, std::size_t n) {
  auto w = Permutation::identity(n);
  for (auto a : word) w = w * Permutation::simple(n, a);
  return w;
}

std::vector<std::size_t> subword(const std::vector<std::size_t>& word, std::uint64_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < word.size(); ++i)
    if (mask >> i & 1U) out.push_back(word[i]);
  return out;
}

// Demazure product as the Bruhat maximum of all subword products.
Permutation demazure_by_max(const std::vector<std::size_t>& word, std::size_t n) {
  auto best = Permutation::identity(n);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << word.size()); ++m) {
    auto u = word_product(subword(word, m), n);
    if (u.length() > best.length()) best = u;
  }
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << word.size()); ++m)
    REQUIRE(bruhat_leq(word_product(subword(word, m), n), best));
  return best;
}

// F is a face when its complement contains a reduced word for w.
bool face_by_reduced_subword(const ReducedWord& Q, const Permutation& w, std::uint64_t F) {
  const std::size_t N = Q.size();
  const std::uint64_t comp = ((std::uint64_t{1} << N) - 1) & ~F;
  for (std::uint64_t T = comp;; T = (T - 1) & comp) {
    auto sub = subword(Q.entries(), T);
    if (sub.size() == w.length() && word_product(sub, Q.n()) == w) return true;
    if (T == 0) break;
  }
  return false;
}

std::vector<std::vector<std::uint32_t>> numeric_factor(std::size_t n, std::size_t a, std::uint32_t c,
                                                       std::uint32_t p) {
  std::vector<std::vector<std::uint32_t>> m(n, std::vector<std::uint32_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  m[a - 1][a - 1] = c;
  m[a - 1][a] = p - 1;
  m[a][a - 1] = 1;
  m[a][a] = 0;
  return m;
}

std::vector<std::vector<std::uint32_t>> mat_mul(const std::vector<std::vector<std::uint32_t>>& x,
                                                const std::vector<std::vector<std::uint32_t>>& y, std::uint32_t p) {
  const std::size_t n = x.size();
  std::vector<std::vector<std::uint32_t>> z(n, std::vector<std::uint32_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) z[i][j] = static_cast<std::uint32_t>((z[i][j] + 1ULL * x[i][k] * y[k][j]) % p);
  return z;
}

}  // namespace

TEST_CASE("Demazure product and reduced words") {
  CHECK(demazure_product({1, 2, 3, 2}, 4) == P("2431"));
  CHECK(demazure_product({1, 1}, 3) == P("213"));
  CHECK(demazure_product({1, 2, 1, 2}, 3) == P("321"));
  CHECK_THROWS_AS(demazure_product({3}, 3), PreconditionError);

  std::mt19937_64 rng(41);
  for (int t = 0; t < 150; ++t) {
    std::vector<std::size_t> word(rng() % 9);
    for (auto& a : word) a = 1 + rng() % 3;
    CHECK(demazure_product(word, 4) == demazure_by_max(word, 4));
  }

  CHECK_THROWS_AS(ReducedWord(3, {1, 1}), PreconditionError);
  CHECK_THROWS_AS(ReducedWord::parse(4, "12x"), ParseError);
  CHECK(ReducedWord::parse(4, "1,2,3,2").target() == P("2431"));

  CHECK(reduced_words(Permutation::longest(3)).size() == 2);
  CHECK(reduced_words(Permutation::longest(4)).size() == 16);
  for (const auto& v : all_permutations(4))
    for (const auto& Q : reduced_words(v)) {
      CHECK(Q.target() == v);
      CHECK(word_product(Q.entries(), 4) == v);
    }
}

TEST_CASE("Bott-Samelson matrix of 1232") {
  auto Q = ReducedWord::parse(4, "1232");
  auto M = bott_samelson_matrix(Q);
  const std::size_t N = 4;
  std::vector<std::vector<std::string>> expected = {
      {"c1", "c3 - c2*c4", "c2", "-1"}, {"1", "0", "0", "0"}, {"0", "c4", "-1", "0"}, {"0", "1", "0", "0"}};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(M[i][j] == C(expected[i][j], N));

  CHECK(upper_left_minor(M, 1) == C("c1", N));
  CHECK(upper_left_minor(M, 2) == C("c2*c4 - c3", N));
  CHECK(upper_left_minor(M, 3) == C("c3", N));
  CHECK(upper_left_minor(M, 4) == C("1", N));
  CHECK(kl_splitting_poly(Q) == C("c1", N) * C("c2*c4 - c3", N) * C("c3", N));
}

TEST_CASE("Bott-Samelson matrix against numeric products") {
  std::mt19937_64 rng(7);
  const std::uint32_t p = 101;
  PrimeField F(p);
  for (const auto& v : {P("2431"), P("4321"), P("3412"), P("231")})
    for (const auto& Q : reduced_words(v)) {
      auto M = bott_samelson_matrix(Q);
      for (int t = 0; t < 3; ++t) {
        std::vector<std::uint32_t> c(Q.size());
        for (auto& x : c) x = static_cast<std::uint32_t>(rng() % p);
        std::vector<std::vector<std::uint32_t>> prod(Q.n(), std::vector<std::uint32_t>(Q.n(), 0));
        for (std::size_t i = 0; i < Q.n(); ++i) prod[i][i] = 1;
        for (std::size_t k = 0; k < Q.size(); ++k) prod = mat_mul(prod, numeric_factor(Q.n(), Q.entries()[k], c[k], p), p);
        for (std::size_t i = 0; i < Q.n(); ++i)
          for (std::size_t j = 0; j < Q.n(); ++j) CHECK(eval_at(reduce_mod_p(M[i][j], F), c) == prod[i][j]);
      }
    }
}

TEST_CASE("lex leading term of the splitting polynomial for every reduced word") {
  std::size_t words = 0;
  for (std::size_t n : {3, 4})
    for (const auto& v : all_permutations(n))
      for (const auto& Q : reduced_words(v)) {
        CHECK_NOTHROW(kl_splitting_poly(Q));
        ++words;
      }
  // Brute force: words over the simple reflections whose product has full length.
  std::size_t brute = 0;
  for (std::size_t n : {3, 4}) {
    const std::size_t top = n * (n - 1) / 2;
    for (std::size_t len = 0; len <= top; ++len) {
      std::size_t total = 1;
      for (std::size_t i = 0; i < len; ++i) total *= n - 1;
      for (std::size_t code = 0; code < total; ++code) {
        std::vector<std::size_t> word;
        for (std::size_t i = 0, c = code; i < len; ++i, c /= n - 1) word.push_back(1 + c % (n - 1));
        brute += word_product(word, n).length() == len;
      }
    }
  }
  CHECK(words == brute);
}

TEST_CASE("square word") {
  for (std::size_t n : {2, 3}) {
    auto Q = square_word(n);
    std::vector<unsigned> v;
    for (std::size_t i = n + 1; i <= 2 * n; ++i) v.push_back(static_cast<unsigned>(i));
    for (std::size_t i = 1; i <= n; ++i) v.push_back(static_cast<unsigned>(i));
    CHECK(Q.target() == Permutation(v));

    // Rename position (k-1) n + s to m_{n-s, k}.
    std::vector<std::size_t> map(n * n);
    for (std::size_t k = 1; k <= n; ++k)
      for (std::size_t s = 0; s < n; ++s) map[(k - 1) * n + s] = (n - s - 1) * n + (k - 1);
    auto M = bott_samelson_matrix(Q);
    const long long sign = n % 2 ? -1 : 1;
    for (std::size_t i = 1; i <= 2 * n; ++i)
      for (std::size_t j = 1; j <= 2 * n; ++j) {
        IntPoly expected = IntPoly::constant(IntegerRing{}, n * n, 0);
        if (i <= n && j <= n) {
          expected = IntPoly::variable(IntegerRing{}, n * n, (i - 1) * n + (j - 1));
          if (j % 2 == 0) expected = -expected;
        } else if (i <= n && j == i + n) {
          expected = IntPoly::constant(IntegerRing{}, n * n, sign);
        } else if (i > n && j == i - n) {
          expected = IntPoly::constant(IntegerRing{}, n * n, 1);
        }
        CHECK(remap_variables(M[i - 1][j - 1], n * n, std::span<const std::size_t>(map)) == expected);
      }
    auto f = remap_variables(kl_splitting_poly(Q), n * n, std::span<const std::size_t>(map));
    auto g = schubert_splitting_poly(n);
    CHECK((f == g || f == -g));
  }
}

TEST_CASE("subword complexes") {
  auto Q = ReducedWord::parse(4, "1232");
  CHECK(subword_complex(Q, P("2134")) == MonomialIdeal(4, {Monomial::from_exponents(std::vector<unsigned>{1, 0, 0, 0})}));
  CHECK(subword_complex(Q, P("1324")) == MonomialIdeal(4, {Monomial::from_exponents(std::vector<unsigned>{0, 1, 0, 1})}));
  CHECK(subword_complex(Q, P("1234")).is_zero());
  CHECK_THROWS_AS(subword_complex(Q, P("4321")), PreconditionError);

  for (const auto& v : {P("2431"), P("3421"), P("4231")})
    for (const auto& R : reduced_words(v))
      for (const auto& w : all_permutations(4)) {
        if (!bruhat_leq(w, v)) continue;
        auto sr = subword_complex(R, w);
        for (std::uint64_t F = 0; F < (std::uint64_t{1} << R.size()); ++F) {
          std::vector<unsigned> e(R.size());
          for (std::size_t i = 0; i < R.size(); ++i) e[i] = F >> i & 1U;
          CHECK(sr.contains(Monomial::from_exponents(e)) == !face_by_reduced_subword(R, w, F));
        }
      }
}

TEST_CASE("initial ideal of I_w^Q is the subword complex") {
  auto Q = ReducedWord::parse(4, "1232");
  CHECK(kl_ideal(Q, P("2134"), 5) == PolyIdeal(PrimeField(5), 4, {reduce_mod_p(C("c1", 4), PrimeField(5))}));
  CHECK(kl_ideal(Q, P("1243"), 5) == PolyIdeal(PrimeField(5), 4, {reduce_mod_p(C("c3", 4), PrimeField(5))}));
  CHECK(kl_ideal(Q, P("2431"), 3) ==
        PolyIdeal(PrimeField(3), 4,
                  {reduce_mod_p(C("c1", 4), PrimeField(3)), reduce_mod_p(C("c2", 4), PrimeField(3)),
                   reduce_mod_p(C("c3", 4), PrimeField(3)), reduce_mod_p(C("c4", 4), PrimeField(3))}));
  CHECK_THROWS_AS(kl_ideal(Q, P("3214"), 3), PreconditionError);

  auto lex = WeightOrder::lex(4);
  std::size_t below = 0;
  for (std::uint32_t p : {2U, 3U, 5U})
    for (const auto& w : all_permutations(4)) {
      if (!bruhat_leq(w, Q.target())) continue;
      if (p == 2) ++below;
      auto init = MonomialIdeal::initial(kl_ideal(Q, w, p), lex);
      CHECK(init == subword_complex(Q, w));
      CHECK(monomial_dim_degree(init).dimension == static_cast<long>(4 - w.length()));
    }
  CHECK(below == 12);

  // A longer word in S_4 at one prime.
  auto R = ReducedWord::parse(4, "12321");
  for (const auto& w : all_permutations(4))
    if (bruhat_leq(w, R.target()))
      CHECK(MonomialIdeal::initial(kl_ideal(R, w, 3), WeightOrder::lex(5)) == subword_complex(R, w));
}

TEST_CASE("the degeneration map on the KL poset is the Demazure product of subwords") {
  auto Q = ReducedWord::parse(4, "1232");
  for (std::uint32_t p : {2U, 3U, 5U}) {
    auto K = kl_poset(Q, p);
    CHECK(K.poset.size() == K.perms.size());
    CHECK(K.poset.degenerations_squarefree());
    CHECK(init_support(K.poset) == std::vector<std::size_t>{0, 1, 2, 3});
    for (std::uint64_t S = 0; S < 16; ++S) {
      std::vector<std::size_t> zero;
      for (std::size_t i = 0; i < 4; ++i)
        if (S >> i & 1U) zero.push_back(i);
      auto target = demazure_product(subword(Q.entries(), S), 4);
      auto it = std::find(K.perms.begin(), K.perms.end(), target);
      REQUIRE(it != K.perms.end());
      CHECK(pi_f_init(K.poset, zero) == K.member_of[static_cast<std::size_t>(it - K.perms.begin())]);
    }
    // Containment of varieties reverses Bruhat order.
    for (std::size_t a = 0; a < K.perms.size(); ++a)
      for (std::size_t b = 0; b < K.perms.size(); ++b)
        CHECK(K.poset.variety_leq(K.member_of[a], K.member_of[b]) == bruhat_leq(K.perms[b], K.perms[a]));
  }
}

TEST_CASE("generalized minors under e_a(c) r_a") {
  for (std::size_t n : {2, 3, 4, 5})
    for (std::uint32_t p : {2U, 7U, 101U}) {
      auto r = momega_identity_check(n, p, 40, 1000 + n + p);
      CHECK(r.ok());
      CHECK(r.pairing_checks == 40 * (n - 1));
    }
}

#include <doctest.h>

#include <algorithm>

#include "frobsplit/counting.hpp"
#include "frobsplit/schubert.hpp"

using namespace frobsplit;

namespace {

Permutation P(std::string_view s) { return Permutation::parse(s); }

PrimePoly M(std::string_view s, std::uint32_t p, std::size_t n) {
  return parse_polynomial(s, PrimeField(p), VariableNames::matrix("m", n, n));
}

// Tableau criterion: sorted prefixes compare entrywise.
bool tableau_leq(const Permutation& a, const Permutation& b) {
  for (std::size_t k = 1; k <= a.size(); ++k) {
    std::vector<unsigned> x(a.one_line().begin(), a.one_line().begin() + static_cast<std::ptrdiff_t>(k));
    std::vector<unsigned> y(b.one_line().begin(), b.one_line().begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    for (std::size_t i = 0; i < k; ++i)
      if (x[i] > y[i]) return false;
  }
  return true;
}

// Rank of a matrix over F_p by elimination.
unsigned rank_mod_p(std::vector<std::vector<std::uint32_t>> a, std::uint32_t p) {
  PrimeField F(p);
  unsigned r = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    auto inv = F.inv(a[r][c]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      auto factor = F.mul(a[i][c], inv);
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = F.sub(a[i][j], F.mul(factor, a[r][j]));
    }
    ++r;
  }
  return r;
}

// Every upper-left i x j rank bounded by r_pi(i, j).
bool satisfies_rank_conditions(const std::vector<std::uint32_t>& entries, const Permutation& pi, std::uint32_t p) {
  const std::size_t n = pi.size();
  auto r = rank_matrix(pi);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      std::vector<std::vector<std::uint32_t>> sub(i, std::vector<std::uint32_t>(j));
      for (std::size_t a = 0; a < i; ++a)
        for (std::size_t b = 0; b < j; ++b) sub[a][b] = entries[a * n + b];
      if (rank_mod_p(sub, p) > r[i][j]) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("permutation basics") {
  auto w = P("2431");
  CHECK(w(2) == 4);
  CHECK(w.length() == 4);
  CHECK(w.descents() == std::vector<std::size_t>{2, 3});
  CHECK(w.inverse() == P("4132"));
  CHECK(w * w.inverse() == Permutation::identity(4));
  CHECK(Permutation::longest(3) == P("321"));
  CHECK(Permutation::simple(3, 2) == P("132"));
  CHECK(all_permutations(3).size() == 6);
  CHECK(all_permutations(3).front() == P("123"));
  CHECK(w.to_string() == "2431");
  CHECK_THROWS_AS(P("122"), PreconditionError);
  CHECK_THROWS_AS(P("1a"), ParseError);
  CHECK_THROWS_AS(Permutation::simple(3, 3), PreconditionError);
  CHECK_THROWS_AS(bruhat_leq(P("12"), P("123")), ArityMismatch);
}

TEST_CASE("rank matrices and essential sets") {
  auto r = rank_matrix(P("213"));
  CHECK(r[1][1] == 0);
  CHECK(r[1][2] == 1);
  CHECK(r[2][1] == 1);
  CHECK(rank_conditions(P("213")).essential == std::vector<EssentialBox>{{1, 1, 0}});
  CHECK(rank_conditions(P("132")).essential == std::vector<EssentialBox>{{2, 2, 1}});
  CHECK(rank_conditions(P("123")).essential.empty());
  CHECK(rank_conditions(P("2143")).essential == std::vector<EssentialBox>{{1, 1, 0}, {3, 3, 2}});
  CHECK(diagram(P("321")).size() == 3);
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& w : all_permutations(n)) CHECK(diagram(w).size() == w.length());
}

TEST_CASE("Bruhat order") {
  CHECK(bruhat_leq(P("213"), P("321")));
  CHECK_FALSE(bruhat_leq(P("321"), P("213")));
  CHECK_FALSE(bruhat_leq(P("132"), P("213")));
  CHECK(upper_covers(P("123")) == std::vector<Permutation>{P("132"), P("213")});
  CHECK(lower_covers(P("321")) == std::vector<Permutation>{P("231"), P("312")});
  for (std::size_t n = 1; n <= 5; ++n) {
    auto perms = all_permutations(n);
    for (const auto& a : perms)
      for (const auto& b : perms) CHECK(bruhat_leq(a, b) == tableau_leq(a, b));
  }
  for (std::size_t n : {3u, 4u}) {
    auto perms = all_permutations(n);
    for (const auto& w : perms) {
      std::vector<Permutation> below;
      for (const auto& s : perms)
        if (bruhat_leq(s, w) && s.length() + 1 == w.length()) below.push_back(s);
      CHECK(lower_covers(w) == below);
      if (w.length() >= 2) CHECK(lower_covers(w).size() >= 2);
      for (const auto& u : upper_covers(w)) {
        auto down = lower_covers(u);
        CHECK(std::count(down.begin(), down.end(), w) == 1);
      }
    }
  }
}

TEST_CASE("bigrassmannian permutations are the basic elements") {
  CHECK(bigrassmannian(P("231")));
  CHECK_FALSE(bigrassmannian(P("321")));
  CHECK(bigrassmannian(P("123")));
  for (std::size_t n : {3u, 4u}) {
    auto Q = schubert_containment_poset(n);
    auto perms = all_permutations(n);
    std::vector<std::size_t> expected;
    for (std::size_t i = 0; i < perms.size(); ++i)
      if (bigrassmannian(perms[i])) expected.push_back(i);
    CHECK(basic_elements(Q) == expected);
  }
  CHECK(basic_elements(schubert_containment_poset(4)).size() == 11);
}

TEST_CASE("minors and antidiagonal orders") {
  PrimeField F(7);
  CHECK(minor(F, 2, 2, {1, 2}, {1, 2}) == M("m11*m22 - m12*m21", 7, 2));
  CHECK(minor(F, 3, 3, {2}, {3}) == M("m23", 7, 3));
  CHECK(minor(F, 3, 3, {1, 2, 3}, {1, 2, 3}).size() == 6);
  CHECK_THROWS_AS(minor(F, 2, 2, {1, 3}, {1, 2}), ArityMismatch);
  CHECK(is_antidiagonal_order(antidiagonal_weight(3, 3), 3, 3));
  CHECK(is_antidiagonal_order(antidiagonal_weight(4, 2), 2, 4));
  CHECK_FALSE(is_antidiagonal_order(WeightOrder::lex(4), 2, 2));
}

TEST_CASE("Fulton generators") {
  PrimeField F(3);
  CHECK(fulton_generators(P("213"), F, 9) == PolyIdeal(F, 9, {M("m11", 3, 3)}));
  CHECK(fulton_generators(P("132"), F, 9) == PolyIdeal(F, 9, {M("m11*m22 - m12*m21", 3, 3)}));
  CHECK(fulton_generators(P("123"), F, 9).is_zero());
  CHECK(fulton_generators(P("321"), F, 9) == PolyIdeal(F, 9, {M("m11", 3, 3), M("m12", 3, 3), M("m21", 3, 3)}));
  CHECK_THROWS_AS(fulton_generators(P("12"), F, 9), ArityMismatch);
  // pointwise against all rank conditions
  for (std::uint32_t p : {2u, 3u}) {
    PrimeField G(p);
    for (const auto& w : all_permutations(3)) {
      auto I = fulton_generators(w, G, 9);
      auto pts = enumerate_points(I.generators(), G, 9);
      std::size_t expected = 0;
      for (const auto& m : enumerate_points({}, G, 9).points()) {
        bool in = satisfies_rank_conditions(m, w, p);
        expected += in;
        CHECK(in == pts.contains(m));
      }
      CHECK(pts.size() == expected);
    }
  }
}

TEST_CASE("Fulton generators are antidiagonal Groebner bases") {
  PrimeField F(5);
  for (std::size_t n : {2u, 3u}) {
    auto o = antidiagonal_weight(n, n);
    for (const auto& w : all_permutations(n)) {
      auto I = fulton_generators(w, F, n * n);
      auto init = MonomialIdeal::initial(I, o);
      CHECK(init == fulton_antidiagonal_ideal(w));
      CHECK(init.is_squarefree());
      CHECK(monomial_dim_degree(init).dimension == static_cast<long>(n * n - w.length()));
    }
  }
  auto o4 = antidiagonal_weight(4, 4);
  for (auto s : {"2143", "1432", "1342", "2413", "3412"}) {
    auto w = P(s);
    auto init = MonomialIdeal::initial(fulton_generators(w, F, 16), o4);
    CHECK(init == fulton_antidiagonal_ideal(w));
    CHECK(monomial_dim_degree(init).dimension == static_cast<long>(16 - w.length()));
  }
}

TEST_CASE("splitting polynomials of matrices") {
  IntegerRing Z;
  auto names2 = VariableNames::matrix("m", 2, 2);
  // m11 * det * m22
  CHECK(schubert_splitting_poly(2) == parse_polynomial("m11^2*m22^2 - m11*m12*m21*m22", Z, names2));
  CHECK(schubert_splitting_poly(2).degree() == 4);
  CHECK(schubert_splitting_poly(3).degree() == 9);
  CHECK(rect_splitting_poly(1, 2) == parse_polynomial("m11*m12", Z, VariableNames::matrix("m", 1, 2)));
  CHECK(rect_splitting_poly(3, 3) == schubert_splitting_poly(3));
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t k = 1; k <= n; ++k) {
      auto f = rect_splitting_poly(k, n);
      CHECK(f.degree() == static_cast<long>(k * n));
      auto lead = leading_term(antidiagonal_weight(n, k), f).terms().front();
      Monomial all(k * n);
      for (std::size_t v = 0; v < k * n; ++v) all.set(v, 1);
      CHECK(lead.monomial == all);
      CHECK(abs(lead.coeff) == 1);
    }
  CHECK_THROWS_AS(rect_splitting_poly(3, 2), PreconditionError);
  for (std::uint32_t p : {2u, 3u, 5u})
    for (std::size_t n : {2u, 3u}) {
      auto c = splitting_constant(reduce_mod_p(schubert_splitting_poly(n), p)).value();
      CHECK((c == 1 || c == p - 1));
    }
}

TEST_CASE("matrix Schubert varieties from the closure") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto two = generate_matrix_schuberts(2, p);
    CHECK(two.poset.size() == 2);
    CHECK(two.poset.members()[two.member_of[1]].ideal == PolyIdeal(PrimeField(p), 4, {M("m11", p, 2)}));
    auto S = generate_matrix_schuberts(3, p);
    CHECK(S.poset.size() == 6);
    CHECK(S.poset.degenerations_squarefree());
    for (std::size_t i = 0; i < S.perms.size(); ++i) {
      const auto& m = S.poset.members()[S.member_of[i]];
      CHECK(m.verified);
      CHECK_FALSE(m.composite);
      CHECK(m.ideal == fulton_generators(S.perms[i], PrimeField(p), 9));
      CHECK(m.dim_degree.dimension == static_cast<long>(9 - S.perms[i].length()));
      CHECK(m.degen == fulton_antidiagonal_ideal(S.perms[i]));
    }
    // containment of members is reverse Bruhat order
    for (std::size_t a = 0; a < 6; ++a)
      for (std::size_t b = 0; b < 6; ++b)
        CHECK(S.poset.variety_leq(S.member_of[a], S.member_of[b]) == bruhat_leq(S.perms[b], S.perms[a]));
  }
}

TEST_CASE("Fulton presentations from basic elements") {
  PrimeField F(3);
  auto perms = all_permutations(3);
  auto Q = schubert_containment_poset(3);
  auto o = antidiagonal_weight(3, 3);
  for (std::size_t i = 0; i < perms.size(); ++i) {
    if (perms[i].length() == 0) continue;
    // minimal basic elements above (as varieties) the member
    std::vector<PolyIdeal> basics;
    for (std::size_t b : basic_elements(Q)) {
      if (!Q.leq(i, b) || perms[b].length() == 0) continue;
      bool minimal = true;
      for (std::size_t c : basic_elements(Q))
        if (c != b && perms[c].length() && Q.leq(i, c) && Q.less(c, b)) minimal = false;
      if (minimal) basics.push_back(fulton_generators(perms[b], F, 9));
    }
    auto sum = basics.front();
    for (std::size_t k = 1; k < basics.size(); ++k) sum = ideal_sum(sum, basics[k]);
    CHECK(sum == fulton_generators(perms[i], F, 9));
    auto r = concat_groebner_check(basics, o);
    CHECK(r.certified);
    CHECK(r.holds);
  }
  // 2143 from its two bigrassmannian varieties
  PrimeField G(5);
  std::vector<PolyIdeal> pair{fulton_generators(P("2134"), G, 16), fulton_generators(P("1243"), G, 16)};
  auto r = concat_groebner_check(pair, antidiagonal_weight(4, 4));
  CHECK(r.certified);
  CHECK(r.holds);
  CHECK(ideal_sum(pair[0], pair[1]) == fulton_generators(P("2143"), G, 16));
}

#include <doctest.h>

#include <functional>
#include <random>

#include "frobsplit/groebner.hpp"
#include "support.hpp"

using namespace frobsplit;

namespace {

const VariableNames xyl = VariableNames(std::vector<std::string>{"x", "y", "l"});
const VariableNames xyz = VariableNames(std::vector<std::string>{"x", "y", "z"});

PrimePoly P(std::string_view s, std::uint32_t p, const VariableNames& names) {
  return parse_polynomial(s, PrimeField(p), names);
}

PolyIdeal I(std::initializer_list<std::string_view> gens, std::uint32_t p, const VariableNames& names) {
  std::vector<PrimePoly> g;
  for (auto s : gens) g.push_back(P(s, p, names));
  return PolyIdeal(PrimeField(p), names.size(), std::move(g));
}

// All points of F_p^n where every generator vanishes (test-local oracle).
std::vector<std::vector<std::uint32_t>> zeros(const PolyIdeal& J) {
  const std::uint32_t p = J.field().characteristic();
  const std::size_t n = J.arity();
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> pt(n, 0);
  for (;;) {
    bool ok = true;
    for (const auto& g : J.generators()) ok = ok && eval_at(g, std::span<const std::uint32_t>(pt)) == 0;
    if (ok) out.push_back(pt);
    std::size_t i = n;
    while (i > 0 && ++pt[i - 1] == p) pt[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

// Is f in the F_p-span of {m*g : deg(m*g) <= deg f}? Exact for homogeneous ideals.
bool member_by_linear_algebra(const PrimePoly& f, const std::vector<PrimePoly>& gens) {
  const PrimeField& F = f.domain();
  const std::size_t n = f.arity();
  const long D = f.degree();
  std::vector<PrimePoly> span;
  for (const auto& g : gens) {
    if (g.degree() > D) continue;
    // all monomials of degree D - deg g
    unsigned need = static_cast<unsigned>(D - g.degree());
    std::vector<unsigned> e(n, 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
      if (i + 1 == n) {
        e[i] = left;
        span.push_back(g.times_monomial(Monomial::from_exponents(e)));
        return;
      }
      for (unsigned k = 0; k <= left; ++k) {
        e[i] = k;
        rec(i + 1, left - k);
      }
    };
    rec(0, need);
  }
  // Gaussian elimination on coefficient vectors indexed by monomial.
  std::vector<PrimePoly> rows;
  auto reduce = [&](PrimePoly v) {
    for (const auto& r : rows) {
      const auto& lead = r.terms().front();
      auto c = v.coeff(lead.monomial);
      if (c) v -= r.scaled(F.mul(c, F.inv(lead.coeff)));
    }
    return v;
  };
  for (const auto& s : span) {
    auto v = reduce(s);
    if (v.is_zero()) continue;
    // keep rows reduced against the new pivot
    for (auto& r : rows) {
      auto c = r.coeff(v.terms().front().monomial);
      if (c) r -= v.scaled(F.mul(c, F.inv(v.terms().front().coeff)));
    }
    rows.push_back(v);
  }
  return reduce(f).is_zero();
}

}  // namespace

TEST_CASE("buchberger examples") {
  auto lex = WeightOrder::lex(3);
  CHECK(buchberger({P("x*y - 1", 5, xyl)}, lex) == std::vector<PrimePoly>{P("x*y - 1", 5, xyl)});
  WeightOrder ell(3, std::vector<std::vector<long long>>{{0, 0, 1}});
  auto gb = buchberger({P("x - l*y", 5, xyl)}, ell.refined());
  REQUIRE(gb.size() == 1);
  CHECK(gb[0] == P("l*y - x", 5, xyl));
  CHECK(buchberger({P("x^2", 5, xyl), P("x*y", 5, xyl)}, lex) ==
        std::vector<PrimePoly>{P("x^2", 5, xyl), P("x*y", 5, xyl)});
  CHECK(buchberger({P("x*y - 1", 5, xyl), P("x", 5, xyl)}, lex) == std::vector<PrimePoly>{P("1", 5, xyl)});
  CHECK_THROWS_AS(buchberger({P("x", 5, xyl)}, WeightOrder::weight({1, 1, 1})), PreconditionError);
}

TEST_CASE("a textbook basis") {
  // Twisted cubic: <y - x^2, z - x^3> under lex x > y > z.
  auto gb = buchberger({P("y - x^2", 7, xyz), P("z - x^3", 7, xyz)}, WeightOrder::lex(3));
  CHECK(gb == std::vector<PrimePoly>{P("x^2 - y", 7, xyz), P("x*y - z", 7, xyz), P("x*z - y^2", 7, xyz),
                                     P("y^3 - z^2", 7, xyz)});
}

TEST_CASE("membership") {
  CHECK(ideal_member(P("x^2*y", 5, xyl), I({"x*y"}, 5, xyl)));
  CHECK(ideal_member(P("1", 5, xyl), I({"x*y - 1", "x"}, 5, xyl)));
  CHECK_FALSE(ideal_member(P("x", 5, xyl), I({"x*y"}, 5, xyl)));
  CHECK_THROWS_AS(ideal_member(P("x1", 5, VariableNames::indexed("x", 2)), I({"x*y"}, 5, xyl)), ArityMismatch);
  CHECK(I({"x*y - 1", "x"}, 5, xyl).is_unit());
  CHECK(PolyIdeal(PrimeField(5), 3).is_zero());
}

TEST_CASE("sum, intersection, colon") {
  CHECK(ideal_intersect(I({"x"}, 5, xyl), I({"y"}, 5, xyl)) == I({"x*y"}, 5, xyl));
  CHECK(ideal_colon(I({"x*y"}, 5, xyl), I({"x"}, 5, xyl)) == I({"y"}, 5, xyl));
  CHECK(ideal_colon(I({"x*y", "x^2"}, 5, xyl), I({"x"}, 5, xyl)) == I({"x", "y"}, 5, xyl));
  CHECK(ideal_sum(I({"x"}, 5, xyl), I({"y"}, 5, xyl)) == I({"y", "x"}, 5, xyl));
  CHECK_THROWS_AS(ideal_colon(I({"x"}, 5, xyl), PolyIdeal(PrimeField(5), 3)), PreconditionError);
  CHECK_THROWS_AS(ideal_sum(I({"x"}, 5, xyl), I({"x"}, 7, xyl)), DomainMismatch);
  CHECK(ideal_intersect(I({"x"}, 3, xyl), PolyIdeal(PrimeField(3), 3)).is_zero());
}

TEST_CASE("elimination and saturation") {
  auto pi = eliminate(I({"x - l*y"}, 5, xyl), {2});
  CHECK(pi.arity() == 2);
  CHECK(pi.is_zero());
  VariableNames xyt(std::vector<std::string>{"x", "y", "t"});
  auto e = eliminate(I({"t*x", "y - t*y"}, 5, xyt), {2});
  CHECK(e == I({"x*y"}, 5, VariableNames(std::vector<std::string>{"x", "y"})));
  CHECK(eliminate(I({"x"}, 5, xyl), {0}).is_zero());
  CHECK(saturate(I({"l*y"}, 5, xyl), P("l", 5, xyl)) == I({"y"}, 5, xyl));
  CHECK(saturate(I({"x^2"}, 5, xyl), P("x", 5, xyl)).is_unit());
  CHECK(saturate(I({"l*y", "x"}, 5, xyl), P("l", 5, xyl)) == I({"y", "x"}, 5, xyl));
  CHECK_THROWS_AS(saturate(I({"x"}, 5, xyl), PrimePoly(PrimeField(5), 3)), PreconditionError);
}

TEST_CASE("initial ideals") {
  auto w = WeightOrder::weight({0, 0, 1});
  CHECK(initial_ideal(I({"x - l*y"}, 5, xyl), w) == I({"l*y"}, 5, xyl));
  CHECK(initial_ideal(I({"x*y", "z^2"}, 5, xyz), WeightOrder::lex(3)) == I({"x*y", "z^2"}, 5, xyz));
  auto c = VariableNames::indexed("c", 4);
  auto f = P("c1*c3", 3, c) * P("c2*c4 - c3", 3, c);
  PolyIdeal J(PrimeField(3), 4, {f});
  CHECK(initial_ideal(J, WeightOrder::lex(4)) == PolyIdeal(PrimeField(3), 4, {P("c1*c2*c3*c4", 3, c)}));
  CHECK(MonomialIdeal::initial(J, WeightOrder::lex(4)) == MonomialIdeal(4, {Monomial{1, 1, 1, 1}}));
}

TEST_CASE("monomial ideal combinatorics") {
  MonomialIdeal xy(2, {Monomial{1, 1}});
  CHECK(monomial_minimal_primes(xy) == std::vector<std::vector<std::size_t>>{{0}, {1}});
  MonomialIdeal m3(3, {Monomial{1, 1, 1}});
  CHECK(monomial_minimal_primes(m3) == std::vector<std::vector<std::size_t>>{{0}, {1}, {2}});
  MonomialIdeal m(3, {Monomial{1, 1, 0}, Monomial{1, 0, 1}});
  CHECK(monomial_minimal_primes(m) == std::vector<std::vector<std::size_t>>{{0}, {1, 2}});
  CHECK_FALSE(MonomialIdeal(2, {Monomial{2, 0}}).is_squarefree());
  CHECK_THROWS_AS(monomial_dim_degree(MonomialIdeal(2, {Monomial{2, 0}})), PreconditionError);
  CHECK(monomial_dim_degree(xy) == DimDegree{1, 2});
  CHECK(monomial_dim_degree(m) == DimDegree{2, 1});
  CHECK(monomial_dim_degree(MonomialIdeal(3)) == DimDegree{3, 1});
  CHECK(monomial_dim_degree(MonomialIdeal(3, {Monomial{0, 0, 0}})) == DimDegree{-1, 0});
  CHECK(MonomialIdeal(2, {Monomial{1, 1}, Monomial{1, 0}}).generators().size() == 1);
}

TEST_CASE("reduced bases do not depend on the generating set") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    std::uint32_t p = trial % 2 ? 3 : 5;
    std::vector<PrimePoly> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(testing::random_nonzero_poly(rng, p, 3, 3, 3));
    // Another generating set: add combinations and permute.
    std::vector<PrimePoly> alt{gens[2], gens[1] + gens[2] * testing::random_poly(rng, p, 3, 1, 2),
                               gens[0] + gens[1] * testing::random_poly(rng, p, 3, 1, 2)};
    for (const auto& order : {WeightOrder::lex(3), WeightOrder::grlex(3)}) {
      CHECK(buchberger(gens, order) == buchberger(alt, order));
    }
  }
}

TEST_CASE("varieties of intersections and sums") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    std::uint32_t p = 3;
    PolyIdeal A(PrimeField(p), 3, {testing::random_nonzero_poly(rng, p, 3, 2, 3)});
    PolyIdeal B(PrimeField(p), 3,
                {testing::random_nonzero_poly(rng, p, 3, 2, 3), testing::random_nonzero_poly(rng, p, 3, 2, 2)});
    auto za = zeros(A), zb = zeros(B);
    std::vector<std::vector<std::uint32_t>> uni, meet;
    std::set_union(za.begin(), za.end(), zb.begin(), zb.end(), std::back_inserter(uni));
    std::set_intersection(za.begin(), za.end(), zb.begin(), zb.end(), std::back_inserter(meet));
    CHECK(zeros(ideal_intersect(A, B)) == uni);
    CHECK(zeros(ideal_sum(A, B)) == meet);
    auto inter = ideal_intersect(A, B);
    CHECK(A.contains(inter));
    CHECK(B.contains(inter));
    CHECK(inter.contains(ideal_product(A, B)));
  }
}

TEST_CASE("squarefree initial ideals have no p-th power heads") {
  std::mt19937_64 rng(77);
  int squarefree_seen = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::uint32_t p = 2 + (trial % 2);
    PolyIdeal J(PrimeField(p), 3,
                {testing::random_nonzero_poly(rng, p, 3, 3, 3), testing::random_nonzero_poly(rng, p, 3, 2, 3)});
    auto init = MonomialIdeal::initial(J, WeightOrder::lex(3));
    if (!init.is_squarefree()) continue;
    ++squarefree_seen;
    for (const auto& g : J.groebner_basis(WeightOrder::lex(3))) {
      auto lt = leading_term(WeightOrder::lex(3), g).terms().front().monomial;
      bool pth = false;
      for (std::size_t i = 0; i < 3; ++i) pth = pth || lt[i] >= p;
      CHECK_FALSE(pth);
    }
  }
  CHECK(squarefree_seen > 0);
}

TEST_CASE("membership agrees with linear algebra on homogeneous ideals") {
  std::mt19937_64 rng(404);
  PrimeField F(5);
  auto homogeneous = [&](unsigned deg, unsigned terms) {
    std::vector<PrimePoly::Term> t;
    for (unsigned k = 0; k < terms; ++k) {
      Monomial m(3);
      for (unsigned d = 0; d < deg; ++d) {
        auto v = rng() % 3;
        m.set(v, m[v] + 1);
      }
      t.push_back({m, F.from_integer(static_cast<long long>(1 + rng() % 4))});
    }
    return PrimePoly::from_terms(F, 3, t);
  };
  int members = 0;
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<PrimePoly> gens{homogeneous(2, 2), homogeneous(2, 3)};
    if (gens[0].is_zero() || gens[1].is_zero()) continue;
    PolyIdeal J(F, 3, gens);
    // Either a combination of the generators or a random form.
    PrimePoly f = trial % 2 ? gens[0] * homogeneous(2, 2) + gens[1] * homogeneous(2, 1) : homogeneous(4, 3);
    if (f.is_zero()) continue;
    bool a = J.contains(f), b = member_by_linear_algebra(f, gens);
    CHECK(a == b);
    members += a;
  }
  CHECK(members > 5);
}

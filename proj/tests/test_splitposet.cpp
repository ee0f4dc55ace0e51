#include <doctest.h>

#include <random>

#include "frobsplit/gvd.hpp"
#include "frobsplit/splitposet.hpp"
#include "support.hpp"

using namespace frobsplit;

namespace {

PrimePoly X(std::string_view s, std::uint32_t p, std::size_t n = 3) {
  return parse_polynomial(s, PrimeField(p), VariableNames::indexed("x", n));
}

PolyIdeal XI(std::uint32_t p, std::size_t n, std::initializer_list<std::string_view> gens) {
  std::vector<PrimePoly> v;
  for (auto s : gens) v.push_back(X(s, p, n));
  return PolyIdeal(PrimeField(p), n, std::move(v));
}

FinitePoset chain3() { return FinitePoset::from_covers(3, {{0, 1}, {1, 2}}); }

// 0 < a, b < 1
FinitePoset diamond() { return FinitePoset::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {"0", "a", "b", "1"}); }

// Buchberger's criterion on the concatenation, without computing a new basis.
bool concatenation_is_groebner(const std::vector<PolyIdeal>& ideals, const WeightOrder& o) {
  std::vector<PrimePoly> all;
  for (const auto& I : ideals)
    for (const auto& g : I.groebner_basis(o)) all.push_back(g);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      auto a = leading_term(o, all[i]).terms().front();
      auto b = leading_term(o, all[j]).terms().front();
      auto l = a.monomial.lcm(b.monomial);
      const auto& F = all[i].domain();
      auto s = all[i].times_monomial(l.quotient(a.monomial)).scaled(F.inv(a.coeff)) -
               all[j].times_monomial(l.quotient(b.monomial)).scaled(F.inv(b.coeff));
      if (!normal_form(s, all, o).is_zero()) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("finite poset basics") {
  auto c = chain3();
  CHECK(c.covers() == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}});
  CHECK(c.glb({1, 2}) == 1);
  CHECK(c.glb({}) == 2);
  CHECK(basic_elements(c) == std::vector<std::size_t>{0, 1, 2});
  auto d = diamond();
  CHECK(d.glb({1, 2}) == 0);
  CHECK(basic_elements(d) == std::vector<std::size_t>{1, 2, 3});
  CHECK_THROWS_AS(FinitePoset::from_covers(2, {{0, 1}, {1, 0}}), InvariantViolation);
  CHECK_THROWS_AS(FinitePoset({{true, true, false}, {false, true, true}, {false, false, true}}), InvariantViolation);
  auto dot = to_dot(d, "diamond");
  CHECK(dot.find("n0 -> n1") != std::string::npos);
  CHECK(dot.find("label=\"a\"") != std::string::npos);
  // two incomparable maxima
  auto v = FinitePoset::from_covers(3, {{0, 1}, {0, 2}});
  CHECK(basic_elements(v) == std::vector<std::size_t>{1, 2});
  CHECK_FALSE(v.glb({}).has_value());
}

TEST_CASE("every element is the glb of the basic elements above it") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + rng() % 8;
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (rng() % 3 == 0) covers.emplace_back(a, b);
    auto Q = FinitePoset::from_covers(n, covers);
    auto basic = basic_elements(Q);
    for (std::size_t p = 0; p < n; ++p) {
      std::vector<std::size_t> above;
      for (std::size_t q : basic)
        if (Q.leq(p, q)) above.push_back(q);
      CHECK(Q.glb(above) == p);
    }
  }
}

TEST_CASE("closure for the coordinate hyperplanes") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto f = X("x1*x2*x3", p);
    auto P = closure_algorithm({XI(p, 3, {"x1"}), XI(p, 3, {"x2"}), XI(p, 3, {"x3"})}, f, monomial_hook());
    CHECK(P.size() == 8);
    CHECK(P.resolved().size() == 8);
    for (const auto& m : P.members()) {
      CHECK(m.verified);
      CHECK(m.degen == MonomialIdeal::initial(m.ideal, WeightOrder::lex(3)));
      CHECK(PolyIdeal::from_monomials(PrimeField(p), m.degen) == m.ideal);
    }
    CHECK(P.find(XI(p, 3, {"x1", "x3"})).has_value());
    CHECK(P.resolved_poset().covers().size() == 12);
    auto r = check_poset_map(P);
    CHECK(r.ok());
    for (auto& [S, m] : r.pi) CHECK(PolyIdeal::from_monomials(PrimeField(p), P.members()[m].degen) ==
                                    coordinate_ideal(PrimeField(p), 3, S));
    CHECK(degree_identity_check(P).ok);
    // a reducible seed is decomposed by the hook
    auto Q = closure_algorithm({XI(p, 3, {"x1*x2*x3"})}, f, monomial_hook());
    CHECK(Q.size() == 8);
  }
}

TEST_CASE("closure with supplied factorizations") {
  std::uint32_t p = 5;
  // f = x1 x2 + 2 x2^2: two lines through the origin
  auto f = X("x1*x2 + 2*x2^2", p, 2);
  auto hook = combine_hooks({monomial_hook(), factor_hook({X("x2", p, 2), X("x1 + 2*x2", p, 2)})});
  auto P = closure_algorithm({PolyIdeal(PrimeField(p), 2, {f})}, f, hook);
  CHECK(P.size() == 4);
  CHECK(P.find(XI(p, 2, {"x1 + 2*x2"})).has_value());
  CHECK(P.find(XI(p, 2, {"x1", "x2"})).has_value());
  CHECK(check_poset_map(P).ok());
  CHECK(check_iota_chain(P).ok());
  // the line x1 = -2 x2 is moved onto x1 = 0 by the first shift
  CHECK(iota_shift(P, 0, {1, 2}) == std::vector<std::uint32_t>{0, 2});

  // f = x2 (x1 x3 + x2^2)
  auto g = X("x1*x2*x3 + x2^3", p);
  auto hook3 = combine_hooks({monomial_hook(), factor_hook({X("x2", p), X("x1*x3 + x2^2", p)})});
  auto Q = closure_algorithm({PolyIdeal(PrimeField(p), 3, {g})}, g, hook3);
  CHECK(Q.size() == 6);
  CHECK(Q.degenerations_squarefree());
  auto r = check_poset_map(Q);
  CHECK(r.ok());
  CHECK(degree_identity_check(Q).ok);
  // the conic cone takes both planes x1 = 0 and x3 = 0
  auto cone = *Q.find(XI(p, 3, {"x1*x3 + x2^2"}));
  CHECK(pi_f_init(Q, {0}) == cone);
  CHECK(pi_f_init(Q, {2}) == cone);
  CHECK(pi_f_init(Q, {1}) == *Q.find(XI(p, 3, {"x2"})));
  CHECK(check_iota_chain(Q).ok());

  // an unrecognized seed stays a composite
  auto C = closure_algorithm({PolyIdeal(PrimeField(p), 3, {g})}, g, monomial_hook());
  CHECK(C.members()[*C.find(PolyIdeal(PrimeField(p), 3, {g}))].composite);
}

TEST_CASE("hand-registered poset of the nodal cubic") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    auto f = X("x1*x2*x3 + x2^3 + x3^3", p);
    auto P = SplitPoset::from_members(f, {PolyIdeal(PrimeField(p), 3, {f}), XI(p, 3, {"x2", "x3"}),
                                          XI(p, 3, {"x1", "x2", "x3"})});
    CHECK(P.size() == 4);
    auto cubic = *P.find(PolyIdeal(PrimeField(p), 3, {f}));
    CHECK(pi_f_init(P, {0}) == cubic);
    CHECK(pi_f_init(P, {0, 1}) == cubic);
    CHECK(pi_f_init(P, {1, 2}) == *P.find(XI(p, 3, {"x2", "x3"})));
    CHECK(pi_f_init(P, {}) == *P.find(PolyIdeal(PrimeField(p), 3)));
    auto r = check_poset_map(P);
    CHECK(r.ok());
    CHECK(r.pi.size() == 8);
    auto d = degree_identity_check(P);
    CHECK(d.ok);
    for (const auto& row : d.rows)
      if (row.member == cubic) CHECK(row.degree == 3);
    CHECK_THROWS_AS(SplitPoset::from_members(f, {XI(p, 3, {"x1"})}), PreconditionError);
    CHECK_THROWS_AS(pi_f_init(P, {3}), ArityMismatch);
  }
  CHECK_THROWS_AS(SplitPoset::from_members(X("x1*x2", 3), {}), PreconditionError);
  auto inhom = SplitPoset::from_members(X("x1*x2 + x2^3", 3, 2), {});
  CHECK_THROWS_AS(degree_identity_check(inhom), PreconditionError);
}

TEST_CASE("concatenated Groebner bases") {
  auto xy = concat_groebner_check({XI(5, 2, {"x1"}), XI(5, 2, {"x2"})}, WeightOrder::lex(2));
  CHECK(xy.certified);
  CHECK(xy.holds);
  // x1 and x1 + x2^2 with x2 > x1: the intersection has a non-squarefree initial ideal
  auto bad = concat_groebner_check({XI(5, 2, {"x1"}), XI(5, 2, {"x1 + x2^2"})}, WeightOrder::lex({1, 0}));
  CHECK_FALSE(bad.certified);
  // declining is not a verdict: coprime leading terms make this concatenation a GB anyway
  CHECK(concatenation_is_groebner({XI(5, 2, {"x1"}), XI(5, 2, {"x1 + x2^2"})}, WeightOrder::lex({1, 0})));
  // without the certificate concatenation can fail: x1 x2 - 1 and x1 under lex
  CHECK_FALSE(concatenation_is_groebner({XI(5, 2, {"x1*x2 - 1"}), XI(5, 2, {"x2"})}, WeightOrder::lex(2)));
  CHECK_FALSE(concat_groebner_check({XI(5, 2, {"x1*x2 - 1"}), XI(5, 2, {"x2"})}, WeightOrder::lex(2)).holds);
  // members of a split poset: the certificate holds and agrees with the S-pair test
  auto f = X("x1*x2*x3 + x2^3", 3);
  auto hook = combine_hooks({monomial_hook(), factor_hook({X("x2", 3), X("x1*x3 + x2^2", 3)})});
  auto P = closure_algorithm({PolyIdeal(PrimeField(3), 3, {f})}, f, hook);
  auto ids = P.resolved();
  for (std::size_t a = 1; a < ids.size(); ++a)
    for (std::size_t b = a + 1; b < ids.size(); ++b) {
      std::vector<PolyIdeal> pair{P.members()[ids[a]].ideal, P.members()[ids[b]].ideal};
      auto r = concat_groebner_check(pair, P.order());
      CHECK(r.certified);
      CHECK(r.holds);
      CHECK(concatenation_is_groebner(pair, P.order()));
    }
}

TEST_CASE("shifts along lines agree with the vertex decomposition") {
  // f = x (l y - x) with l the most significant variable
  std::uint32_t p = 5;
  PrimeField F(p);
  auto names = VariableNames::gvd(3);
  auto f = parse_polynomial("h1*h2*l - h1^2", F, names);
  auto line = parse_polynomial("h2*l - h1", F, names);
  auto hook = combine_hooks({monomial_hook(), factor_hook({parse_polynomial("h1", F, names), line})});
  ClosureOptions opts;
  opts.order = WeightOrder::lex(std::vector<std::size_t>{2, 0, 1});
  auto P = closure_algorithm({PolyIdeal(F, 3, {f})}, f, hook, opts);
  CHECK(P.size() == 6);
  CHECK(check_iota_chain(P).ok());
  CHECK(projection_injectivity_check(P, 2));
  auto d = compute_gvd(PolyIdeal(F, 3, {line}), 2);
  auto on_line = enumerate_points({line});
  for (const auto& pt : on_line.points()) CHECK(iota_shift(P, 2, pt) == iota(d, pt));
}

TEST_CASE("shift examples for coordinate posets") {
  auto f = X("x1*x2*x3", 3);
  auto P = closure_algorithm({XI(3, 3, {"x1*x2*x3"})}, f, monomial_hook());
  auto cube = enumerate_points({}, PrimeField(3), 3);
  for (const auto& pt : cube.points())
    for (std::size_t j = 0; j < 3; ++j) CHECK(iota_shift(P, j, pt) == pt);
  CHECK(check_iota_chain(P).ok());
  CHECK_THROWS_AS(iota_shift(P, 3, {0, 0, 0}), ArityMismatch);
  CHECK_THROWS_AS(iota_shift(P, 0, {0, 0}), ArityMismatch);
}

TEST_CASE("degenerations stay compatibly split and squarefree across primes") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    auto f = X("x1*x2*x3 + x2^3", p);
    auto hook = combine_hooks({monomial_hook(), factor_hook({X("x2", p), X("x1*x3 + x2^2", p)})});
    auto P = closure_algorithm({PolyIdeal(PrimeField(p), 3, {f})}, f, hook);
    CHECK(P.degenerations_squarefree());
    auto init_f = leading_term(P.order(), f);
    for (const auto& m : P.members())
      CHECK(is_compatibly_split(PolyIdeal::from_monomials(PrimeField(p), m.degen), init_f));
  }
}

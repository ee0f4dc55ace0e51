#include <doctest.h>

#include <random>

#include "frobsplit/gvd.hpp"
#include "support.hpp"

using namespace frobsplit;

namespace {

PrimePoly G(std::string_view s, std::uint32_t p, std::size_t n) {
  return parse_polynomial(s, PrimeField(p), VariableNames::gvd(n));
}

PolyIdeal ideal(std::uint32_t p, std::size_t n, std::initializer_list<std::string_view> gens) {
  std::vector<PrimePoly> v;
  for (auto s : gens) v.push_back(G(s, p, n));
  return PolyIdeal(PrimeField(p), n, std::move(v));
}

PolyIdeal h_ideal(std::uint32_t p, std::size_t n, std::initializer_list<std::string_view> gens) {
  std::vector<PrimePoly> v;
  for (auto s : gens) v.push_back(parse_polynomial(s, PrimeField(p), VariableNames::indexed("h", n)));
  return PolyIdeal(PrimeField(p), n, std::move(v));
}

bool on(const PolyIdeal& I, const std::vector<std::uint32_t>& pt) {
  for (const auto& g : I.generators())
    if (eval_at(g, std::span<const std::uint32_t>(pt)) != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("split_poly examples") {
  auto s = split_poly(G("h1*h2*l + h2^3 + l", 5, 3), 2);
  CHECK(s.g1 == G("h1*h2 + 1", 5, 3));
  CHECK(s.g2 == G("h2^3", 5, 3));
  auto t = split_poly(parse_polynomial("x1*x2*x3 + x2^3 + x3^3", PrimeField(5), VariableNames::indexed("x", 3)), 0);
  CHECK(t.g1 == parse_polynomial("x2*x3", PrimeField(5), VariableNames::indexed("x", 3)));
  CHECK_THROWS_AS(split_poly(G("l^2*h2", 5, 3), 2), PreconditionError);
  CHECK_THROWS_AS(split_poly(G("h1", 5, 3), 2), PreconditionError);
  CHECK_THROWS_AS(split_poly(G("h1", 5, 3), 3), ArityMismatch);
}

TEST_CASE("line through the origin with varying slope") {
  // X = {x = l y}
  auto d = compute_gvd(ideal(5, 3, {"h1 - l*h2"}), 2);
  CHECK(d.X_limit == ideal(5, 3, {"l*h2"}));
  CHECK(d.Pi.is_zero());
  CHECK(d.Lambda == h_ideal(5, 2, {"h2"}));
  CHECK(d.Lambda_prime == h_ideal(5, 2, {"h1", "h2"}));
  REQUIRE(d.split);
  CHECK(d.split->g1 == G("-h2", 5, 3));
  auto r = verify_class_identity(d);
  CHECK(r.x == 25);
  CHECK(r.x_limit == 45);
  CHECK(r.pi == 25);
  CHECK(r.lambda == 5);
  CHECK(r.lambda_prime == 1);
  CHECK(r.ok());
  CHECK(check_iota(d).ok());
}

TEST_CASE("non-radical Lambda'") {
  // X = V(x(l y - x))
  auto d = compute_gvd(ideal(3, 3, {"h1*h2*l - h1^2"}), 2);
  CHECK(d.Lambda_prime == h_ideal(3, 2, {"h1*h2", "h1^2"}));
  CHECK_FALSE(radicality_certificate(d.Lambda_prime));
  CHECK(d.Lambda_prime.contains(parse_polynomial("h1^2", PrimeField(3), VariableNames::indexed("h", 2))));
  CHECK_FALSE(d.Lambda_prime.contains(parse_polynomial("h1", PrimeField(3), VariableNames::indexed("h", 2))));
  CHECK(d.Pi.is_zero());
  CHECK(d.Lambda == h_ideal(3, 2, {"h1*h2"}));
  auto r = verify_class_identity(d);
  CHECK(r.x == 13);
  CHECK(r.x_limit == 19);
  CHECK(r.lambda == 5);
  CHECK(r.lambda_prime == 3);
  CHECK(r.ok());
  CHECK(check_iota(d).ok());
  CHECK(radicality_certificate(d.Lambda));
}

TEST_CASE("degenerate cases") {
  auto d = compute_gvd(ideal(3, 2, {"l"}), 1);
  CHECK(d.X_limit == ideal(3, 2, {"l"}));
  CHECK(d.Pi.is_zero());
  CHECK(d.Lambda.is_unit());
  CHECK(d.Lambda_prime.is_unit());
  CHECK(verify_class_identity(d).ok());
  // a cylinder: the decomposition changes nothing
  auto c = compute_gvd(ideal(3, 3, {"h1*h2"}), 2);
  CHECK(c.X_limit == c.X);
  CHECK(c.Lambda == c.Pi);
  CHECK(c.Lambda_prime == c.Pi);
  CHECK(verify_class_identity(c).ok());
  CHECK_THROWS_AS(compute_gvd(ideal(3, 2, {"l"}), 2), ArityMismatch);
}

TEST_CASE("iota examples") {
  auto d = compute_gvd(ideal(7, 3, {"h1 - l*h2"}), 2);
  CHECK(iota(d, {6, 3, 2}) == std::vector<std::uint32_t>{6, 3, 0});
  CHECK(iota(d, {0, 0, 4}) == std::vector<std::uint32_t>{0, 0, 4});
  CHECK_THROWS_AS(iota(d, {1, 1, 2}), PreconditionError);
  CHECK_THROWS_AS(iota(d, {1, 1}), ArityMismatch);
}

TEST_CASE("splitting consistency on the degree-two example") {
  // f = (l y - x)(x - 1) compatibly splits X = V(l y - x)
  auto f = G("h1*h2*l - h2*l - h1^2 + h1", 3, 3);
  auto I = ideal(3, 3, {"h2*l - h1"});
  CHECK(is_compatibly_split(I, f));
  auto r = gvd_split_consistency(f, 2, I);
  CHECK(r.pi_split);
  CHECK(r.lambda_split);
  CHECK_FALSE(r.lambda_prime_split);
  CHECK(r.ok());
  // the point (1, 0) is compatibly split where the origin is not
  auto g1 = parse_polynomial("h1*h2 - h2", PrimeField(3), VariableNames::indexed("h", 2));
  CHECK(is_compatibly_split(h_ideal(3, 2, {"h1 - 1", "h2"}), g1));
  CHECK_FALSE(is_compatibly_split(h_ideal(3, 2, {"h1", "h2"}), g1));
  CHECK_THROWS_AS(gvd_split_consistency(G("h1^2*l + h2", 3, 3), 2, I), PreconditionError);
}

TEST_CASE("principal ideals linear in l satisfy the identity and iota") {
  std::mt19937_64 rng(0x6bd);
  for (int trial = 0; trial < 40; ++trial) {
    std::uint32_t p = trial % 2 ? 3 : 5;
    std::size_t n = 2 + trial % 2;
    PrimeField F(p);
    auto g1 = testing::random_nonzero_poly(rng, p, n - 1, 2, 3);
    auto g2 = testing::random_poly(rng, p, n - 1, 2, 3);
    std::vector<std::size_t> up(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) up[i] = i;
    auto lift = [&](const PrimePoly& g) { return remap_variables(g, n, std::span<const std::size_t>(up)); };
    auto f = PrimePoly::variable(F, n, n - 1) * lift(g1) + lift(g2);
    auto d = compute_gvd(PolyIdeal(F, n, {f}), n - 1);
    INFO("f = ", to_string(f, VariableNames::gvd(n)));
    auto r = verify_class_identity(d);
    CHECK(r.ok());
    CHECK(check_iota(d).ok());
    // Lambda' pointwise: fibers that are whole lines
    auto xs = enumerate_points({f}, F, n);
    auto lp = enumerate_points(d.Lambda_prime.generators(), F, n - 1);
    std::vector<std::uint32_t> h(n - 1, 0);
    for (;;) {
      bool line = true;
      for (std::uint32_t l = 0; l < p; ++l) {
        auto pt = h;
        pt.push_back(l);
        line = line && xs.contains(pt);
      }
      CHECK(line == lp.contains(h));
      std::size_t i = n - 1;
      while (i > 0 && ++h[i - 1] == p) h[--i] = 0;
      if (i == 0) break;
    }
  }
}

TEST_CASE("projection of X lies in Pi and Lambda in Pi") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    std::uint32_t p = 3;
    auto a = testing::random_nonzero_poly(rng, p, 3, 3, 3);
    auto b = testing::random_nonzero_poly(rng, p, 3, 2, 3);
    PolyIdeal I(PrimeField(p), 3, {a, b});
    auto d = compute_gvd(I, 2);
    INFO("I = ", to_string(I, VariableNames::gvd(3)), "  Pi = ", to_string(d.Pi, VariableNames::indexed("h", 2)));
    auto xs = enumerate_points(I.generators(), I.field(), 3);
    for (const auto& pt : xs.points()) CHECK(on(d.Pi, d.project(pt)));
    CHECK(d.Lambda.contains(d.Pi));
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rsphere/sphere_integration.hpp"
#include "support/random_values.hpp"

using namespace rsph;
using MV = Multivector<Rational>;
using Poly = CliffordPolynomial<Rational>;
using rsph::testsupport::Rng;

TEST_CASE("surface areas") {
  CHECK(omega_exact(2) == PiRational(Rational(2), 1));
  CHECK(omega_exact(3) == PiRational(Rational(4), 1));
  CHECK(omega_exact(4) == PiRational(Rational(2), 2));
  CHECK(omega_exact(5) == PiRational(Rational(8, 3), 2));
}

TEST_CASE("monomial moments on S^2") {
  // u1^2 integrates to 4pi/3; odd monomials vanish
  CHECK(sphere_moment(3, {2, 0, 0}) == PiRational(Rational(4, 3), 1));
  CHECK(sphere_moment(3, {1, 0, 0}).zero());
  CHECK(sphere_moment(3, {1, 2, 0}).zero());
  CHECK(sphere_moment(3, {2, 2, 0}) == PiRational(Rational(4, 15), 1));
  CHECK(sphere_moment(3, {4, 0, 0}) == PiRational(Rational(4, 5), 1));
}

TEST_CASE("integrate polynomial over sphere") {
  int n = 3, gens = 4;
  BlockLayout layout{n};
  auto one = Poly::constant(layout, MV::scalar(gens, Rational(1)));
  auto r = integrate_sphere(one, 0);
  CHECK(r.scalar_part() == PiRational(Rational(4), 1));

  auto u1 = Poly::variable(layout, gens, 0, 0);
  CHECK(integrate_sphere(u1 * u1, 0).scalar_part() == PiRational(Rational(4, 3), 1));
}

TEST_CASE("inner product example") {
  // (e1 u1, e1 u1)_u = e1 e1 * 4pi/3 = -4pi/3
  int n = 3, gens = 4;
  BlockLayout layout{n};
  auto p = Poly::variable(layout, gens, 0, 0).mul_left(MV::basis_vector(gens, 1));
  auto v = inner_product_u(p, p, 0);
  CHECK(v.scalar_part() == PiRational(Rational(-4, 3), 1));
}

TEST_CASE("bilinearity") {
  Rng rng(31);
  int n = 3, gens = 4;
  BlockLayout layout{n};
  for (int trial = 0; trial < 10; ++trial) {
    Poly a(layout, gens), b(layout, gens), c(layout, gens);
    for (int t = 0; t < 4; ++t) {
      Expo e(layout.total(), 0);
      for (int j = 0; j < rng.uniform_int(0, 3); ++j) e[rng.uniform_int(0, n - 1)] += 1;
      a.add_term(e, rng.multivector(gens, 2));
      Expo f(layout.total(), 0);
      for (int j = 0; j < rng.uniform_int(0, 3); ++j) f[rng.uniform_int(0, n - 1)] += 1;
      b.add_term(f, rng.multivector(gens, 2));
      Expo g(layout.total(), 0);
      for (int j = 0; j < rng.uniform_int(0, 3); ++j) g[rng.uniform_int(0, n - 1)] += 1;
      c.add_term(g, rng.multivector(gens, 2));
    }
    auto lhs = inner_product_u(a + b, c, 0);
    auto rhs = inner_product_u(a, c, 0) + inner_product_u(b, c, 0);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("pair_over_block matches direct integration") {
  Rng rng(32);
  int n = 3, gens = 4;
  BlockLayout layout{1, n};  // one passenger variable + u block
  for (int trial = 0; trial < 10; ++trial) {
    Poly a(layout, gens), b(layout, gens);
    for (int t = 0; t < 5; ++t) {
      Expo e(layout.total(), 0);
      e[0] = std::uint8_t(rng.uniform_int(0, 2));
      for (int j = 0; j < rng.uniform_int(0, 2); ++j) e[1 + rng.uniform_int(0, n - 1)] += 1;
      a.add_term(e, rng.multivector(gens, 2));
      Expo f(layout.total(), 0);
      f[0] = std::uint8_t(rng.uniform_int(0, 2));
      for (int j = 0; j < rng.uniform_int(0, 2); ++j) f[1 + rng.uniform_int(0, n - 1)] += 1;
      b.add_term(f, rng.multivector(gens, 2));
    }
    auto paired = pair_over_block(a, b, 1);
    // oracle: expand the product and integrate the u block monomial-wise
    auto prod = a * b;
    CliffordPolynomial<PiRational> direct(layout, gens);
    for (const auto& [e, c] : prod.terms()) {
      std::vector<int> alpha(n);
      for (int i = 0; i < n; ++i) alpha[i] = e[1 + i];
      auto mom = sphere_moment(n, alpha);
      if (mom.zero()) continue;
      Expo rest = e;
      for (int i = 0; i < n; ++i) rest[1 + i] = 0;
      direct.add_term(rest, to_pi_mv(c).scaled(mom));
    }
    CHECK(paired == direct);
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rsphere/kernels.hpp"
#include "rsphere/monogenic.hpp"
#include "support/random_values.hpp"

using namespace rsph;
using MV = Multivector<Rational>;
using MVd = Multivector<double>;
using Poly = CliffordPolynomial<Rational>;
using RH = RationalHomogeneous<Rational>;
using rsph::testsupport::Rng;

namespace {

double mv_norm(const MVd& a) { return std::sqrt(a.norm_squared()); }

double poly_norm(const CliffordPolynomial<double>& p) {
  double m = 0;
  for (const auto& [e, c] : p.terms()) m = std::max(m, mv_norm(c));
  return m;
}

// rational points on the unit sphere from Pythagorean-style tuples
std::vector<std::vector<Rational>> rational_unit_points(int n) {
  std::vector<std::vector<Rational>> pts;
  if (n == 3) {
    pts.push_back({Rational(3, 5), Rational(4, 5), Rational(0)});
    pts.push_back({Rational(1, 3), Rational(2, 3), Rational(-2, 3)});
    pts.push_back({Rational(-2, 7), Rational(3, 7), Rational(6, 7)});
    pts.push_back({Rational(12, 13), Rational(-4, 13), Rational(3, 13)});
  } else if (n == 4) {
    pts.push_back({Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)});
    pts.push_back({Rational(3, 5), Rational(0), Rational(-4, 5), Rational(0)});
    pts.push_back({Rational(2, 3), Rational(-1, 3), Rational(0), Rational(2, 3)});
  }
  return pts;
}

MVd random_sphere_point(Rng& rng, int n) {
  auto p = rng.point_on_sphere(n + 1);
  while (std::abs(p[std::size_t(n)] - 1.0) < 0.25) p = rng.point_on_sphere(n + 1);
  return MVd::vector(p);
}

}  // namespace

TEST_CASE("Z_0 is the constant kernel") {
  for (int n : {3, 4}) {
    auto z = zk(n, 0);
    BlockLayout uv{n, n};
    CHECK(z->poly == Poly::constant(uv, MV::scalar(n + 1, Rational(1))));
    auto om = omega_exact(n);
    CHECK(z->prefactor * om == PiRational(Rational(1)));
  }
}

TEST_CASE("Z_k monogenicity and homogeneity") {
  for (int n : {3, 4})
    for (int k = 0; k <= 2; ++k) {
      auto z = zk(n, k);
      CHECK(z->poly.dirac_left(kZkBlockU).zero());
      CHECK(z->poly.dirac_right(kZkBlockV).zero());
      CHECK(z->poly.homogeneous_degree(kZkBlockU) == k);
      CHECK(z->poly.homogeneous_degree(kZkBlockV) == k);
    }
}

TEST_CASE("Z_k against the Cauchy-kernel Taylor expansion") {
  // Independent oracle: the degree-k part of G(v - u) v on |v| = 1 is
  // (-1)^k sum_{|alpha|=k} u^alpha/alpha! (d^alpha G)(v) v.  Evaluated at
  // exact rational points; G^ = -v|v|^{-n} (the 1/omega_n prefactor is
  // common to both sides and omitted).
  for (int n : {3, 4}) {
    BlockLayout vonly{n};
    const int gens = n + 1;
    auto vvec = Poly::position_vector(vonly, gens, 0);
    auto ghat = RH::from_polynomial(vvec.scaled(Rational(-1)), 0, n);
    Rng rng(71);
    for (int k = 0; k <= 2; ++k) {
      auto z = zk(n, k);
      // enumerate multi-indices of degree k over n variables
      std::vector<std::vector<int>> alphas;
      std::vector<int> cur(std::size_t(n), 0);
      std::function<void(int, int)> rec = [&](int var, int rem) {
        if (var == n - 1) {
          cur[std::size_t(var)] = rem;
          alphas.push_back(cur);
          return;
        }
        for (int d = 0; d <= rem; ++d) {
          cur[std::size_t(var)] = d;
          rec(var + 1, rem - d);
        }
      };
      rec(0, k);

      for (const auto& v0 : rational_unit_points(n)) {
        std::vector<Rational> u0(std::size_t(n), Rational(0));
        for (int i = 0; i < n; ++i) u0[std::size_t(i)] = rng.rational();
        // oracle value
        MV oracle(gens);
        for (const auto& alpha : alphas) {
          RH d = ghat;
          Rational fact(1);
          for (int i = 0; i < n; ++i)
            for (int c = 0; c < alpha[std::size_t(i)]; ++c) {
              d = d.derivative(0, i);
              fact *= (c + 1);
            }
          Rational mono(1);
          for (int i = 0; i < n; ++i)
            mono *= rational_pow(u0[std::size_t(i)], alpha[std::size_t(i)]);
          auto val = d.evaluate(v0) * MV::vector(v0);
          oracle += val.scaled(mono / fact);
        }
        if (k % 2 == 1) oracle = -oracle;
        // kernel value
        std::vector<Rational> uv0;
        uv0.insert(uv0.end(), u0.begin(), u0.end());
        uv0.insert(uv0.end(), v0.begin(), v0.end());
        CHECK(z->poly.evaluate(uv0) == oracle);
      }
    }
  }
}

TEST_CASE("Z_k reproduces the monogenic basis exactly") {
  for (int n : {3, 4})
    for (int k = 0; k <= 2; ++k) {
      auto z = zk(n, k);
      BlockLayout uv{n, n};
      auto basis = monogenic_basis(n, k);
      for (const auto& p : basis->elements) {
        auto pv = embed_block(p, uv, kZkBlockV);
        auto paired = pair_over_block(z->poly, pv, kZkBlockV);
        auto back = pi_poly_to_rational(paired.scaled(z->prefactor));
        CHECK(back == embed_block(p, uv, kZkBlockU));
      }
    }
}

TEST_CASE("Z_k scaling in u") {
  Rng rng(72);
  int n = 3, k = 2;
  auto z = zk(n, k);
  for (int t = 0; t < 10; ++t) {
    std::vector<Rational> u0(std::size_t(n), Rational(0)), v0(std::size_t(n), Rational(0));
    for (auto& x : u0) x = rng.rational();
    for (auto& x : v0) x = rng.rational();
    Rational s = rng.nonzero_rational();
    std::vector<Rational> su0 = u0;
    for (auto& x : su0) x *= s;
    std::vector<Rational> a = su0, b = u0;
    a.insert(a.end(), v0.begin(), v0.end());
    b.insert(b.end(), v0.begin(), v0.end());
    CHECK(z->poly.evaluate(a) == z->poly.evaluate(b).scaled(rational_pow(s, k)));
  }
}

TEST_CASE("Z_k reflection identity") {
  // Z_k(u, a v a) = -a Z_k(a u a, v) a for unit a in R^n
  int n = 3, gens = 4;
  BlockLayout uv{n, n};
  std::vector<MV> units;
  units.push_back(MV::basis_vector(gens, 1));
  units.push_back(MV::vector({Rational(3, 5), Rational(4, 5), Rational(0), Rational(0)}));
  units.push_back(MV::vector({Rational(1, 3), Rational(-2, 3), Rational(2, 3), Rational(0)}));
  for (int k = 1; k <= 2; ++k) {
    auto z = zk(n, k);
    for (const auto& a : units) {
      REQUIRE(a.norm_squared() == Rational(1));
      // rows of the reflection u -> a u a
      std::vector<Poly> rows;
      for (int m = 1; m <= n; ++m) {
        std::vector<Rational> coeffs(std::size_t(n), Rational(0));
        for (int j = 1; j <= n; ++j)
          coeffs[std::size_t(j - 1)] = (a * MV::basis_vector(gens, j) * a).vec_comp(m);
        rows.push_back(linear_form<Rational>(uv, gens, kZkBlockU, coeffs));
      }
      std::vector<Poly> vrows;
      for (int m = 1; m <= n; ++m) {
        std::vector<Rational> coeffs(std::size_t(n), Rational(0));
        for (int j = 1; j <= n; ++j)
          coeffs[std::size_t(j - 1)] = (a * MV::basis_vector(gens, j) * a).vec_comp(m);
        vrows.push_back(linear_form<Rational>(uv, gens, kZkBlockV, coeffs));
      }
      std::vector<int> keep_u(std::size_t(uv.total()), 0);
      for (int i = 0; i < n; ++i)
        keep_u[std::size_t(uv.flat(kZkBlockU, i))] = uv.flat(kZkBlockU, i);
      std::vector<int> keep_v(std::size_t(uv.total()), 0);
      for (int i = 0; i < n; ++i)
        keep_v[std::size_t(uv.flat(kZkBlockV, i))] = uv.flat(kZkBlockV, i);

      auto lhs = z->poly.substitute_block(kZkBlockV, vrows, uv, keep_u);
      auto rhs = -(z->poly.substitute_block(kZkBlockU, rows, uv, keep_v)
                       .mul_left(a)
                       .mul_right(a));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("E_k structure and fundamental equation") {
  int n = 3;
  for (int k = 0; k <= 2; ++k) {
    auto e = ek(n, k);
    // homogeneity degree 1-n in the difference variable
    for (const auto& t : e->expr.terms()) {
      CHECK(t.numer.homogeneous_degree(kEkBlockD) == 2 * k + 1);
      CHECK(t.power == n + 2 * k);
    }
    // left monogenic in u, right monogenic in v
    CHECK(e->expr.dirac_left(kEkBlockU).is_zero_function());
    CHECK(e->expr.dirac_right(kEkBlockV).is_zero_function());
    // R_k E_k = 0 exactly away from the singular center
    auto rk = project_Pk(e->expr.dirac_left(kEkBlockD), kEkBlockU, n, k);
    CHECK(rk.is_zero_function());
  }
}

TEST_CASE("E_0 closed form") {
  int n = 3;
  auto e = ek(n, 0);
  BlockLayout duv{n, n, n};
  auto dvec = Poly::position_vector(duv, n + 1, kEkBlockD);
  REQUIRE(e->expr.terms().size() == 1);
  CHECK(e->expr.terms()[0].numer == dvec);
  CHECK(e->expr.terms()[0].power == n);
  // prefactor 1/(omega_n^2 c_0), c_0 = 1
  CHECK(e->prefactor == PiRational(Rational(1, 16), -2));
}

TEST_CASE("spherical kernel: left and right representations agree up to reflection") {
  Rng rng(73);
  int n = 3;
  for (int k = 0; k <= 2; ++k) {
    for (int t = 0; t < 17; ++t) {
      auto xs = random_sphere_point(rng, n);
      auto ys = random_sphere_point(rng, n);
      if ((xs - ys).norm_squared() < 0.05) continue;
      auto left = eks_at(xs, ys, n, k, Side::left);
      auto right = eks_at(xs, ys, n, k, Side::right);
      auto jxinv = vector_inverse(weight_J(CayleyDir::inverse, xs, n));
      auto b = jxinv.scaled(1.0 / std::sqrt(jxinv.norm_squared()));
      auto conj = -(left.mul_left(b).mul_right(b));
      CHECK(poly_norm(right - conj) < 1e-10 * std::max(1.0, poly_norm(right)));
    }
  }
}

TEST_CASE("spherical kernel monogenicity in the spinor slots") {
  Rng rng(74);
  int n = 3, k = 2;
  for (int t = 0; t < 10; ++t) {
    auto xs = random_sphere_point(rng, n);
    auto ys = random_sphere_point(rng, n);
    if ((xs - ys).norm_squared() < 0.05) continue;
    auto left = eks_at(xs, ys, n, k, Side::left);
    CHECK(poly_norm(left.dirac_left(kZkBlockU)) < 1e-11 * std::max(1.0, poly_norm(left)));
    CHECK(poly_norm(left.dirac_right(kZkBlockV)) < 1e-11 * std::max(1.0, poly_norm(left)));
    CHECK(left.homogeneous_degree(kZkBlockU) == k);
    CHECK(left.homogeneous_degree(kZkBlockV) == k);
  }
}

TEST_CASE("spherical kernel growth near the diagonal") {
  // |E_k^S| ~ |x_s - y_s|^{1-n}: fit the log-log slope along a geodesic
  Rng rng(75);
  int n = 3, k = 1;
  auto xs = random_sphere_point(rng, n);
  // tangent direction
  auto tv = rng.point_on_sphere(n + 1);
  auto xv = xs.vec_comps();
  double dot = 0;
  for (int i = 0; i < n + 1; ++i) dot += tv[std::size_t(i)] * xv[std::size_t(i)];
  for (int i = 0; i < n + 1; ++i) tv[std::size_t(i)] -= dot * xv[std::size_t(i)];
  double tn = 0;
  for (double c : tv) tn += c * c;
  for (auto& c : tv) c /= std::sqrt(tn);

  std::vector<double> dist, mag;
  for (int j = 0; j < 6; ++j) {
    double t = 0.4 * std::pow(0.5, j);
    std::vector<double> yv(std::size_t(n + 1));
    for (int i = 0; i < n + 1; ++i)
      yv[std::size_t(i)] = std::cos(t) * xv[std::size_t(i)] + std::sin(t) * tv[std::size_t(i)];
    auto ys = MVd::vector(yv);
    auto slice = eks_at(xs, ys, n, k);
    dist.push_back((xs - ys).norm_squared());
    mag.push_back(poly_norm(slice));
  }
  for (std::size_t j = 0; j + 1 < dist.size(); ++j) {
    double slope = std::log(mag[j + 1] / mag[j]) / std::log(std::sqrt(dist[j + 1] / dist[j]));
    CHECK(std::abs(slope - (1 - n)) < 0.05 * std::abs(1 - n));
  }
}

TEST_CASE("projective kernels: parity and representative independence") {
  Rng rng(76);
  int n = 3, k = 1;
  for (int t = 0; t < 10; ++t) {
    auto x = random_sphere_point(rng, n);
    auto y = random_sphere_point(rng, n);
    if ((x - y).norm_squared() < 0.05 || (x + y).norm_squared() < 0.05) continue;
    auto e1 = projective_kernel_at(Bundle::E1, x, y, n, k);
    auto e1m = projective_kernel_at(Bundle::E1, -x, y, n, k);
    CHECK(poly_norm(e1 - e1m) < 1e-12 * std::max(1.0, poly_norm(e1)));
    auto e2 = projective_kernel_at(Bundle::E2, x, y, n, k);
    auto e2m = projective_kernel_at(Bundle::E2, -x, y, n, k);
    CHECK(poly_norm(e2 + e2m) < 1e-12 * std::max(1.0, poly_norm(e2)));

    // canonical representative: both lifts of x give the projective value;
    // pick y already canonical so the y-lift is fixed
    auto yc = canonical_rep(y);
    auto rp_a = rp_kernel_at(Bundle::E1, x, yc, n, k);
    auto rp_b = rp_kernel_at(Bundle::E1, -x, yc, n, k);
    auto direct = projective_kernel_at(Bundle::E1, x, yc, n, k);
    CHECK(poly_norm(rp_a - rp_b) < 1e-12 * std::max(1.0, poly_norm(rp_a)));
    CHECK(poly_norm(rp_a - direct) < 1e-12 * std::max(1.0, poly_norm(rp_a)));
  }
}

TEST_CASE("kernel constants") {
  CHECK(c_k_constant(3, 0) == Rational(1));
  CHECK(c_k_constant(3, 1) == Rational(1, 3));
  CHECK(c_k_constant(3, 2) == Rational(1, 5));
  CHECK(c_k_constant(4, 1) == Rational(1, 2));
  CHECK_THROWS_AS(c_k_constant(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(zk(2, 0), std::invalid_argument);
}

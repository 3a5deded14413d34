#include "rsphere/pushforward.hpp"

#include <cstdio>

using namespace rsph;
using MVd = Multivector<double>;
using Polyd = CliffordPolynomial<double>;

static double mv_norm(const MVd& a) { return std::sqrt(a.norm_squared()); }

int main() {
  int n = 3, gens = 4;
  BlockLayout layout{n, n};

  std::vector<double> xs = {0.2, -0.4, 0.5, 0.0};
  double s = 0;
  for (double v : xs) s += v * v;
  xs[3] = -std::sqrt(1.0 - (s - xs[3] * xs[3]));
  auto xs_mv = MVd::vector(xs);

  // f = 1: expect D_s[J * 1] = 0
  Polyd one(layout, gens);
  one.add_term(Expo(layout.total(), 0), MVd::scalar(gens, 1.0));
  CayleyPushforward G1(CayleyDir::inverse, one, n);
  auto ds1 = spherical_dirac_at(G1, xs);
  std::printf("f=1:  |D_s(J)| at sample = %.3e\n",
              mv_norm(ds1.evaluate(std::vector<double>(3, 0.0))));

  // finite-difference check of one ambient partial of G1
  int i = 1;
  double h = 1e-6;
  auto xp = xs, xm = xs;
  xp[i] += h;
  xm[i] -= h;
  auto fd = (G1.at(xp) - G1.at(xm)).scaled(1.0 / (2 * h));
  auto an = G1.partial(xs, i);
  auto fd_err = fd - an;
  double diff = 0;
  for (const auto& [e, c] : fd_err.terms()) diff = std::max(diff, mv_norm(c));
  std::printf("f=1:  |analytic - FD partial| = %.3e\n", diff);

  // f = x_1: LHS = e_1, RHS = Jm1^{-1} D_s [J (C^{-1}xs)_1]
  auto f = Polyd::variable(layout, gens, 0, 0);
  CayleyPushforward G2(CayleyDir::inverse, f, n);
  auto ds2 = spherical_dirac_at(G2, xs);
  auto rhs = vector_inverse(weight_Jminus1(CayleyDir::inverse, xs_mv, n)) *
             ds2.evaluate(std::vector<double>(3, 0.0));
  std::printf("f=x1: RHS = %s\n", rhs.str().c_str());
  std::printf("f=x1: expect e1; ratio comp1 = %.6f\n", rhs.vec_comp(1));

  // forward direction: J_{-1}(C,x)^{-1} D_x [J(C,x) g(C(x))] vs (D_s g)(x_s)
  {
    BlockLayout slayout{n + 1, n};
    auto g = Polyd::variable(slayout, gens, 0, 0);  // g = w_1
    auto dsg = spherical_dirac(g, 0);
    CayleyPushforward Gf(CayleyDir::forward, g, n);
    std::vector<double> x = {0.3, -0.2, 0.4};
    std::vector<double> xf = {0.3, -0.2, 0.4, 0.0};
    auto x_mv = MVd::vector(xf);
    auto xs2 = cayley(x_mv, n);
    std::vector<double> vals(std::size_t(n + 1) + std::size_t(n), 0.0);
    for (int i2 = 0; i2 < n + 1; ++i2) vals[std::size_t(i2)] = xs2.vec_comp(i2 + 1);
    std::vector<double> allv(std::size_t(2 * n + 1), 0.0);
    for (int i2 = 0; i2 < n + 1; ++i2) allv[std::size_t(i2)] = xs2.vec_comp(i2 + 1);
    auto lhsv = dsg.evaluate(allv);
    auto dx = euclidean_dirac_at(Gf, x);
    auto rhsv = vector_inverse(weight_Jminus1(CayleyDir::forward, x_mv, n)) *
                dx.evaluate(std::vector<double>(std::size_t(n), 0.0));
    std::printf("fwd:  D_s g = %s\n", lhsv.str().c_str());
    std::printf("fwd:  Jm1^-1 D_x[Jg oC] = %s\n", rhsv.str().c_str());
  }

  // FD for the gamma operator directly: rotation generators
  auto L_fd = [&](int a, int b) {
    auto r = xs;
    double t = 1e-6;
    auto rot = [&](double tt) {
      auto y = xs;
      y[a] = std::cos(tt) * xs[a] - std::sin(tt) * xs[b];
      y[b] = std::sin(tt) * xs[a] + std::cos(tt) * xs[b];
      return y;
    };
    return (G2.at(rot(t)) - G2.at(rot(-t))).scaled(1.0 / (2 * t));
  };
  Polyd gam(BlockLayout{3}, gens);
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      BladeMask eab = (BladeMask(1) << a) | (BladeMask(1) << b);
      // L_{ab} = x_a d_b - x_b d_a equals d/dt at t=0 of the rotation above
      gam += L_fd(a, b).mul_left(MVd::blade(gens, eab, 1.0));
    }
  auto gam_an = gamma_at(G2, xs);
  auto gam_err = gam - gam_an;
  double gdiff = 0;
  for (const auto& [e, c] : gam_err.terms()) gdiff = std::max(gdiff, mv_norm(c));
  std::printf("f=x1: |gamma(FD rotations) - gamma(analytic)| = %.3e\n", gdiff);
  return 0;
}

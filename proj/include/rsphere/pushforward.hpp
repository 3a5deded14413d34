#pragma once

#include "rsphere/conformal.hpp"
#include "rsphere/sphere_ops.hpp"

#include <memory>
#include <vector>

namespace rsph {

// A function of a base point (on S^n or in R^n) and a polynomial spinor slot,
// sampled pointwise together with analytic ambient partial derivatives.  The
// spinor slot is a plain R^n label that derivatives leave untouched;
// reflections into the moving hyperplane frame are applied afterwards with
// reflect_spinor_block.
class SampledFunction {
 public:
  virtual ~SampledFunction() = default;
  virtual int ambient_vars() const = 0;
  virtual int spinor_vars() const = 0;
  virtual int gens() const = 0;
  // spinor polynomial at the base point (single-block layout)
  virtual CliffordPolynomial<double> at(const std::vector<double>& x) const = 0;
  virtual CliffordPolynomial<double> partial(const std::vector<double>& x, int i) const = 0;
};

// wraps a two-block polynomial (base block 0, spinor block 1)
class SymbolicSampled final : public SampledFunction {
 public:
  explicit SymbolicSampled(CliffordPolynomial<double> f) : f_(std::move(f)) {
    for (int i = 0; i < f_.layout().sizes[0]; ++i) dx_.push_back(f_.derivative(0, i));
  }
  int ambient_vars() const override { return f_.layout().sizes[0]; }
  int spinor_vars() const override { return f_.layout().sizes[1]; }
  int gens() const override { return f_.gens(); }
  CliffordPolynomial<double> at(const std::vector<double>& x) const override {
    return strip(f_.evaluate_block(0, x), f_.layout(), f_.gens());
  }
  CliffordPolynomial<double> partial(const std::vector<double>& x, int i) const override {
    return strip(dx_[std::size_t(i)].evaluate_block(0, x), f_.layout(), f_.gens());
  }

  // drop the (constant) base block of a two-block polynomial
  static CliffordPolynomial<double> strip(const CliffordPolynomial<double>& p,
                                          const BlockLayout& layout, int gens) {
    BlockLayout spinor{layout.sizes[1]};
    CliffordPolynomial<double> r(spinor, gens);
    const int off = layout.offset(1);
    for (const auto& [e, c] : p.terms()) {
      Expo t(spinor.total(), 0);
      for (int i = 0; i < spinor.total(); ++i) t[i] = e[off + i];
      r.add_term(t, c);
    }
    return r;
  }

 private:
  CliffordPolynomial<double> f_;
  std::vector<CliffordPolynomial<double>> dx_;
};

// reversion of every sampled value (left/right duality)
class ReversedSampled final : public SampledFunction {
 public:
  explicit ReversedSampled(const SampledFunction& base) : base_(base) {}
  int ambient_vars() const override { return base_.ambient_vars(); }
  int spinor_vars() const override { return base_.spinor_vars(); }
  int gens() const override { return base_.gens(); }
  CliffordPolynomial<double> at(const std::vector<double>& x) const override {
    return base_.at(x).reversion();
  }
  CliffordPolynomial<double> partial(const std::vector<double>& x, int i) const override {
    return base_.partial(x, i).reversion();
  }

 private:
  const SampledFunction& base_;
};

// The Cayley pushforward with the spinor label carried along unchanged:
//   dir = inverse:  Phi(x_s, u) = J(C^{-1},x_s) f(C^{-1}(x_s), u)
//   dir = forward:  Phi(x,   u) = J(C,x)        g(C(x),        u)
// f is a Euclidean two-block polynomial (x-block of n, u-block of n), g a
// spherical one (ambient block of n+1, u-block of n).  weight_side = right
// places the conformal weight on the right instead.
class CayleyPushforward final : public SampledFunction {
 public:
  CayleyPushforward(CayleyDir dir, CliffordPolynomial<double> f, int n,
                    Side weight_side = Side::left)
      : dir_(dir), n_(n), wside_(weight_side), f_(std::move(f)) {
    base_vars_ = f_.layout().sizes[0];
    const int expect = dir_ == CayleyDir::inverse ? n_ : n_ + 1;
    if (base_vars_ != expect || f_.layout().sizes[1] != n_)
      throw std::invalid_argument("CayleyPushforward: layout does not match direction");
    for (int m = 0; m < base_vars_; ++m) fx_.push_back(f_.derivative(0, m));
  }

  int ambient_vars() const override { return dir_ == CayleyDir::inverse ? n_ + 1 : n_; }
  int spinor_vars() const override { return n_; }
  int gens() const override { return n_ + 1; }

  CliffordPolynomial<double> at(const std::vector<double>& x) const override {
    Frame fr = frame(x);
    return weighted(compose(f_, fr), fr.J);
  }

  CliffordPolynomial<double> partial(const std::vector<double>& x, int i) const override {
    Frame fr = frame(x);
    const int gens = n_ + 1;
    auto ei = Multivector<double>::basis_vector(gens, i + 1);
    double n2 = fr.q.norm_squared();
    double qi = fr.q.vec_comp(i + 1);

    // dJ = e_i |q|^{-n} - n q q_i |q|^{-n-2}
    auto dJ = ei.scaled(std::pow(n2, -n_ / 2.0)) -
              fr.q.scaled(n_ * qi * std::pow(n2, -(n_ + 2) / 2.0));
    // d(Moebius image) = -2 e_i / |q|^2 + 4 q q_i / |q|^4
    auto dM = ei.scaled(-2.0 / n2) + fr.q.scaled(4.0 * qi / (n2 * n2));

    CliffordPolynomial<double> chain(BlockLayout{n_}, gens);
    for (int m = 0; m < base_vars_; ++m) {
      double dm = dM.vec_comp(m + 1);
      if (dm != 0.0) chain += compose(fx_[std::size_t(m)], fr).scaled(dm);
    }
    return weighted(compose(f_, fr), dJ) + weighted(chain, fr.J);
  }

  Multivector<double> weight(const std::vector<double>& x) const { return frame(x).J; }

 private:
  struct Frame {
    Multivector<double> q;
    Multivector<double> J;
    std::vector<double> M;
  };

  Frame frame(const std::vector<double>& x) const {
    const int gens = n_ + 1;
    Frame fr;
    std::vector<double> qc(std::size_t(gens), 0.0);
    for (int i = 0; i < ambient_vars(); ++i) qc[std::size_t(i)] = x[std::size_t(i)];
    qc[std::size_t(n_)] += dir_ == CayleyDir::inverse ? -1.0 : 1.0;
    fr.q = Multivector<double>::vector(qc);
    double n2 = fr.q.norm_squared();
    if (n2 < 1e-18) throw std::domain_error("CayleyPushforward: at the singular point");
    fr.J = fr.q.scaled(std::pow(n2, -n_ / 2.0));
    auto M = fr.q.scaled(-2.0 / n2);  // 2 q^{-1}
    fr.M.resize(std::size_t(base_vars_));
    for (int m = 0; m < base_vars_; ++m) fr.M[std::size_t(m)] = M.vec_comp(m + 1);
    if (base_vars_ == n_ + 1) fr.M[std::size_t(n_)] += dir_ == CayleyDir::inverse ? -1.0 : 1.0;
    return fr;
  }

  CliffordPolynomial<double> compose(const CliffordPolynomial<double>& h,
                                     const Frame& fr) const {
    return SymbolicSampled::strip(h.evaluate_block(0, fr.M), h.layout(), h.gens());
  }

  CliffordPolynomial<double> weighted(const CliffordPolynomial<double>& p,
                                      const Multivector<double>& J) const {
    return wside_ == Side::left ? p.mul_left(J) : p.mul_right(J);
  }

  CayleyDir dir_;
  int n_;
  Side wside_;
  CliffordPolynomial<double> f_;
  std::vector<CliffordPolynomial<double>> fx_;
  int base_vars_ = 0;
};

// Re-express an n-variable spinor polynomial through the reflected label
// u = pi_n(a w a): returns the (n+1)-variable polynomial p(pi_n(a w a)).
inline CliffordPolynomial<double> reflect_spinor_block(const CliffordPolynomial<double>& p,
                                                       const Multivector<double>& a) {
  const int gens = a.gens();
  const int n = p.layout().sizes[0];
  BlockLayout wlayout{gens};
  double inv = 1.0 / a.norm_squared();
  std::vector<CliffordPolynomial<double>> rows;
  for (int m = 1; m <= n; ++m) {
    std::vector<double> coeffs(std::size_t(gens), 0.0);
    for (int j = 1; j <= gens; ++j)
      coeffs[std::size_t(j - 1)] =
          (a * Multivector<double>::basis_vector(gens, j) * a).vec_comp(m) * inv;
    rows.push_back(linear_form<double>(wlayout, gens, 0, coeffs));
  }
  return p.substitute_block(0, rows, wlayout, std::vector<int>(std::size_t(n), 0));
}

// exact integral over the unit sphere of the hyperplane a R^n a of a product
// of two (n+1)-variable spinor polynomials: pull back by the reflection and
// use the exact R^n moments
Multivector<double> hyperplane_pair(const CliffordPolynomial<double>& A,
                                    const CliffordPolynomial<double>& B,
                                    const Multivector<double>& a, int n);

// ----- pointwise operators on sampled functions -----

// Lambda F at x: sum_{i<j} e_i e_j (x_i dF/dx_j - x_j dF/dx_i)
inline CliffordPolynomial<double> gamma_at(const SampledFunction& F,
                                           const std::vector<double>& x) {
  const int N = F.ambient_vars();
  const int gens = F.gens();
  std::vector<CliffordPolynomial<double>> d;
  for (int i = 0; i < N; ++i) d.push_back(F.partial(x, i));
  CliffordPolynomial<double> r(BlockLayout{F.spinor_vars()}, gens);
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      auto ang = d[std::size_t(j)].scaled(x[std::size_t(i)]) -
                 d[std::size_t(i)].scaled(x[std::size_t(j)]);
      BladeMask eij = (BladeMask(1) << i) | (BladeMask(1) << j);
      r += ang.mul_left(Multivector<double>::blade(gens, eij, 1.0));
    }
  return r;
}

// D_s F = x (Lambda F + (n/2) F) at a sphere point x
inline CliffordPolynomial<double> spherical_dirac_at(const SampledFunction& F,
                                                     const std::vector<double>& x) {
  const int n = F.ambient_vars() - 1;
  auto xv = Multivector<double>::vector(x);
  return (gamma_at(F, x) + F.at(x).scaled(n / 2.0)).mul_left(xv);
}

// D_x F = sum_i e_i dF/dx_i at a Euclidean point
inline CliffordPolynomial<double> euclidean_dirac_at(const SampledFunction& F,
                                                     const std::vector<double>& x) {
  const int gens = F.gens();
  CliffordPolynomial<double> r(BlockLayout{F.spinor_vars()}, gens);
  for (int i = 0; i < F.ambient_vars(); ++i)
    r += F.partial(x, i).mul_left(Multivector<double>::basis_vector(gens, i + 1));
  return r;
}

// left spherical Rarita-Schwinger at a point (plain spinor label)
inline CliffordPolynomial<double> rs_spherical_at(const SampledFunction& F,
                                                  const std::vector<double>& x, int n,
                                                  int k) {
  return project_Pk(spherical_dirac_at(F, x), 0, n, k);
}
inline CliffordPolynomial<double> rs_spherical_right_at(const SampledFunction& F,
                                                        const std::vector<double>& x, int n,
                                                        int k) {
  ReversedSampled rev(F);
  return rs_spherical_at(rev, x, n, k).reversion();
}
inline CliffordPolynomial<double> rs_euclidean_at(const SampledFunction& F,
                                                  const std::vector<double>& x, int n,
                                                  int k) {
  return project_Pk(euclidean_dirac_at(F, x), 0, n, k);
}
inline CliffordPolynomial<double> rs_euclidean_right_at(const SampledFunction& F,
                                                        const std::vector<double>& x, int n,
                                                        int k) {
  ReversedSampled rev(F);
  return rs_euclidean_at(rev, x, n, k).reversion();
}

// ----- transported operators for Cayley pushforwards -----
//
// The spherical operator applied to the w-hyperplane representation of a
// pushforward: the base point is differentiated with the spinor label fixed,
// the result is re-expressed through u = a w a and projected along the
// hyperplane.  Evaluate the result at w in the hyperplane a R^n a.

inline CliffordPolynomial<double> rs_transported(const SampledFunction& Phi,
                                                 const std::vector<double>& x,
                                                 const Multivector<double>& a, int n, int k,
                                                 bool spherical, Side side = Side::left) {
  if (side == Side::right) {
    ReversedSampled rev(Phi);
    return rs_transported(rev, x, a, n, k, spherical, Side::left).reversion();
  }
  auto psi = spherical ? spherical_dirac_at(Phi, x) : euclidean_dirac_at(Phi, x);
  return project_Pk_hyperplane(reflect_spinor_block(psi, a), 0, a, n, k);
}

}  // namespace rsph

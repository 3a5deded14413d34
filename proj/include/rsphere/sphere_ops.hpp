#pragma once

#include "rsphere/monogenic.hpp"

namespace rsph {

// Angular operator over the block's ambient variables:
//   Lambda = sum_{i<j} e_i e_j (w_i d/dw_j - w_j d/dw_i),
// with the pair range covering the whole block.  Tangential to spheres
// |w| = const, so restriction to the unit sphere is well defined.
template <class S>
CliffordPolynomial<S> gamma_operator(const CliffordPolynomial<S>& f, int wblock) {
  const int N = f.layout().sizes[wblock];
  CliffordPolynomial<S> r(f.layout(), f.gens());
  for (int i = 0; i < N; ++i) {
    auto wi = CliffordPolynomial<S>::variable(f.layout(), f.gens(), wblock, i);
    auto di = f.derivative(wblock, i);
    for (int j = i + 1; j < N; ++j) {
      auto wj = CliffordPolynomial<S>::variable(f.layout(), f.gens(), wblock, j);
      auto dj = f.derivative(wblock, j);
      auto angular = wi * dj - wj * di;
      BladeMask eij = (BladeMask(1) << i) | (BladeMask(1) << j);
      r += angular.mul_left(Multivector<S>::blade(f.gens(), eij, S(1)));
    }
  }
  return r;
}

// D_s f = w (Lambda f + (n/2) f) where the block has n+1 ambient variables;
// the result gains one w-degree and is meaningful on |w| = 1.
template <class S>
CliffordPolynomial<S> spherical_dirac(const CliffordPolynomial<S>& f, int wblock) {
  const int n = f.layout().sizes[wblock] - 1;
  auto w = CliffordPolynomial<S>::position_vector(f.layout(), f.gens(), wblock);
  return w * (gamma_operator(f, wblock) + f.scaled(S(n) / S(2)));
}

// right-sided operator by the reversion duality  g D_s := (D_s g~)~
template <class S>
CliffordPolynomial<S> spherical_dirac_right(const CliffordPolynomial<S>& f, int wblock) {
  return spherical_dirac(f.reversion(), wblock).reversion();
}

namespace detail {
template <class S>
void require_u_monogenic(const CliffordPolynomial<S>& f, int ublock, Side side) {
  if constexpr (!std::is_same_v<S, double>) {
    bool ok = side == Side::left ? f.dirac_left(ublock).zero() : f.dirac_right(ublock).zero();
    if (!ok)
      throw std::invalid_argument("rarita_schwinger: spinor part is not monogenic");
  }
}
}  // namespace detail

// Euclidean Rarita-Schwinger operator R_k = P_k D_x (left) and its right
// companion f |-> (f D_x) P_{k,r}.
template <class S>
CliffordPolynomial<S> rarita_schwinger(const CliffordPolynomial<S>& f, int xblock, int ublock,
                                       int n, int k, Side side = Side::left) {
  detail::require_u_monogenic(f, ublock, side);
  if (side == Side::left)
    return project_Pk(f.dirac_left(xblock), ublock, n, k);
  return rarita_schwinger(f.reversion(), xblock, ublock, n, k, Side::left).reversion();
}

// Spherical Rarita-Schwinger operator R_k^S = P_k D_s (left) and the right
// companion g |-> (g D_s) P_{k,r}.
template <class S>
CliffordPolynomial<S> rarita_schwinger_spherical(const CliffordPolynomial<S>& f, int wblock,
                                                 int ublock, int n, int k,
                                                 Side side = Side::left) {
  detail::require_u_monogenic(f, ublock, side);
  if (side == Side::left)
    return project_Pk(spherical_dirac(f, wblock), ublock, n, k);
  return rarita_schwinger_spherical(f.reversion(), wblock, ublock, n, k, Side::left)
      .reversion();
}

// ----- hyperplane machinery for the conformal theorems -----
//
// For unit grade-1 a, the hyperplane a R^n a carries the orthonormal frame
// eta_t = a e_t a and the tangential Dirac operator D_H = sum eta_t d/d eta_t.
// The Almansi-Fischer projection along the hyperplane mirrors the flat one.

template <class S>
CliffordPolynomial<S> directional_derivative(const CliffordPolynomial<S>& f, int block,
                                             const std::vector<S>& dir) {
  CliffordPolynomial<S> r(f.layout(), f.gens());
  for (int m = 0; m < f.layout().sizes[block]; ++m) {
    if (is_zero(dir[m])) continue;
    r += f.derivative(block, m).scaled(dir[m]);
  }
  return r;
}

template <class S>
std::vector<Multivector<S>> hyperplane_frame(const Multivector<S>& a, int n) {
  S inv = S(1) / a.norm_squared();
  std::vector<Multivector<S>> frame;
  for (int t = 1; t <= n; ++t)
    frame.push_back((a * Multivector<S>::basis_vector(a.gens(), t) * a).scaled(inv));
  return frame;
}

template <class S>
CliffordPolynomial<S> dirac_hyperplane(const CliffordPolynomial<S>& phi, int block,
                                       const Multivector<S>& a, int n) {
  auto frame = hyperplane_frame(a, n);
  CliffordPolynomial<S> r(phi.layout(), phi.gens());
  for (const auto& eta : frame)
    r += directional_derivative(phi, block, eta.vec_comps()).mul_left(eta);
  return r;
}

template <class S>
CliffordPolynomial<S> project_Pk_hyperplane(const CliffordPolynomial<S>& phi, int block,
                                            const Multivector<S>& a, int n, int k) {
  if (n + 2 * k - 2 == 0)
    throw std::domain_error("project_Pk_hyperplane: degenerate parameters");
  auto p = dirac_hyperplane(phi, block, a, n).scaled(S(1) / S(-n - 2 * k + 2));
  auto w = CliffordPolynomial<S>::position_vector(phi.layout(), phi.gens(), block);
  return phi - w * p;
}

template <class S>
CliffordPolynomial<S> project_Pkr_hyperplane(const CliffordPolynomial<S>& phi, int block,
                                             const Multivector<S>& a, int n, int k) {
  return project_Pk_hyperplane(phi.reversion(), block, a, n, k).reversion();
}

}  // namespace rsph

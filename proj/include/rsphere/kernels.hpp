#pragma once

#include "rsphere/conformal.hpp"
#include "rsphere/rational_homogeneous.hpp"
#include "rsphere/sphere_integration.hpp"

#include <memory>

namespace rsph {

// Reproducing kernel Z_k of M_k: polynomial in (u, v), homogeneous of degree
// k in each slot, left monogenic in u and right monogenic in v.  The exact
// value is poly * prefactor.
struct ZkKernel {
  int n = 0;
  int k = 0;
  CliffordPolynomial<Rational> poly;  // blocks {u(n), v(n)}, gens n+1
  PiRational prefactor;               // (-1)^k / omega_n lives here
};

// Euclidean Rarita-Schwinger kernel E_k(x-y, u, v) as a rational-homogeneous
// expression in the difference variable d = x - y (radial block 0).
struct EkKernel {
  int n = 0;
  int k = 0;
  RationalHomogeneous<Rational> expr;  // blocks {d(n), u(n), v(n)}
  PiRational prefactor;                // (-1)^k / (omega_n^2 c_k)
};

std::shared_ptr<const ZkKernel> zk(int n, int k);
std::shared_ptr<const EkKernel> ek(int n, int k);

// blocks of the kernel layouts
inline constexpr int kZkBlockU = 0;
inline constexpr int kZkBlockV = 1;
inline constexpr int kEkBlockD = 0;
inline constexpr int kEkBlockU = 1;
inline constexpr int kEkBlockV = 2;

// Pointwise spherical kernel E_k^S(x_s, y_s, u, v): a polynomial slice in
// (u, v) at fixed sphere points, degree k in each slot.
// representation = left:  (x_s-y_s)/|x_s-y_s|^n J(C^{-1},y_s)^{-1} Z_k(a u a~, v)
// representation = right: Z_k(u, a~ v a) J(C^{-1},y_s)^{-1} (x_s-y_s)/|x_s-y_s|^n
// both divided by omega_n c_k.
CliffordPolynomial<double> eks_at(const Multivector<double>& xs,
                                  const Multivector<double>& ys, int n, int k,
                                  Side representation = Side::left);

// Kernels over real projective space: bundle E1 identifies (x, X) ~ (-x, X)
// and uses E^S(x,y) + E^S(-x,y); bundle E2 identifies (x, X) ~ (-x, -X) and
// uses E^S(x,y) - E^S(-x,y).
enum class Bundle { E1, E2 };

CliffordPolynomial<double> projective_kernel_at(Bundle bundle, const Multivector<double>& x,
                                                const Multivector<double>& y, int n, int k);

// canonical representative of a projective point: last coordinate of
// magnitude > tol is made positive
Multivector<double> canonical_rep(const Multivector<double>& x, double tol = 1e-9);

// kernel on RP^n through canonical representatives of both arguments
CliffordPolynomial<double> rp_kernel_at(Bundle bundle, const Multivector<double>& x_lift,
                                        const Multivector<double>& y_lift, int n, int k);

}  // namespace rsph

#pragma once

#include "rsphere/clifford.hpp"

#include <cmath>
#include <stdexcept>
#include <type_traits>

namespace rsph {

// Cayley transformation C : R^n -> S^n \ {e_{n+1}} and its inverse, with the
// conformal weight factors J and J_{-1}.  Points are grade-1 elements of
// Cl_{n+1} in ambient coordinates.

enum class CayleyDir { forward, inverse };

namespace detail {
template <class S>
S norm_power(const S& norm2, int p) {
  // |q|^p from |q|^2; exact scalars only reach even p
  if constexpr (std::is_same_v<S, double>) {
    return std::pow(norm2, p / 2.0);
  } else {
    if (p % 2 != 0)
      throw std::domain_error("norm_power: odd power needs floating point");
    return rational_pow(norm2, p / 2);
  }
}

template <class S>
void check_away_from(const Multivector<S>& p, const Multivector<S>& pole, const char* what) {
  if constexpr (std::is_same_v<S, double>) {
    if ((p - pole).norm_squared() < 1e-18) throw std::domain_error(what);
  } else {
    if (p == pole) throw std::domain_error(what);
  }
}
}  // namespace detail

// C(x) = (e_{n+1} x + 1)(x + e_{n+1})^{-1}
template <class S>
Multivector<S> cayley(const Multivector<S>& x, int n) {
  const int gens = n + 1;
  auto en1 = Multivector<S>::basis_vector(gens, n + 1);
  auto one = Multivector<S>::scalar(gens, S(1));
  return (en1 * x + one) * vector_inverse(x + en1);
}

// Iwasawa form e_{n+1} + 2 (x + e_{n+1})^{-1}
template <class S>
Multivector<S> cayley_iwasawa(const Multivector<S>& x, int n) {
  const int gens = n + 1;
  auto en1 = Multivector<S>::basis_vector(gens, n + 1);
  return en1 + vector_inverse(x + en1).scaled(S(2));
}

// C^{-1}(x_s) = (-e_{n+1} x_s + 1)(x_s - e_{n+1})^{-1}, x_s != e_{n+1}
template <class S>
Multivector<S> cayley_inverse(const Multivector<S>& xs, int n) {
  const int gens = n + 1;
  auto en1 = Multivector<S>::basis_vector(gens, n + 1);
  detail::check_away_from(xs, en1, "cayley_inverse: singular at e_{n+1}");
  auto one = Multivector<S>::scalar(gens, S(1));
  return (-(en1 * xs) + one) * vector_inverse(xs - en1);
}

// Iwasawa form -e_{n+1} + 2 (x_s - e_{n+1})^{-1}
template <class S>
Multivector<S> cayley_inverse_iwasawa(const Multivector<S>& xs, int n) {
  const int gens = n + 1;
  auto en1 = Multivector<S>::basis_vector(gens, n + 1);
  detail::check_away_from(xs, en1, "cayley_inverse: singular at e_{n+1}");
  return -en1 + vector_inverse(xs - en1).scaled(S(2));
}

// base vector q of the weight: x + e_{n+1} (forward) or x_s - e_{n+1} (inverse)
template <class S>
Multivector<S> weight_base(CayleyDir dir, const Multivector<S>& p, int n) {
  const int gens = n + 1;
  auto en1 = Multivector<S>::basis_vector(gens, n + 1);
  if (dir == CayleyDir::forward) return p + en1;
  detail::check_away_from(p, en1, "weight: singular at e_{n+1}");
  return p - en1;
}

// J = q / |q|^n
template <class S>
Multivector<S> weight_J(CayleyDir dir, const Multivector<S>& p, int n) {
  auto q = weight_base(dir, p, n);
  return q.scaled(S(1) / detail::norm_power(q.norm_squared(), n));
}

// J_{-1} = q / |q|^{n+2}
template <class S>
Multivector<S> weight_Jminus1(CayleyDir dir, const Multivector<S>& p, int n) {
  auto q = weight_base(dir, p, n);
  return q.scaled(S(1) / detail::norm_power(q.norm_squared(), n + 2));
}

// a w a / |a|^2 for nonzero grade-1 a (the recurring spinor reflection)
template <class S>
Multivector<S> spinor_transform(const Multivector<S>& a, const Multivector<S>& w) {
  S n2 = a.norm_squared();
  if (is_zero(n2)) throw std::domain_error("spinor_transform: zero vector");
  return (a * w * a).scaled(S(1) / n2);
}

// a(x_s, y_s) = J(C^{-1},x_s)^{-1} (x_s - y_s) J(C^{-1},y_s)^{-1}, normalized.
// A unit vector of R^n (it equals -(C^{-1}x_s - C^{-1}y_s)/|...|).
inline Multivector<double> kernel_reflector(const Multivector<double>& xs,
                                            const Multivector<double>& ys, int n) {
  if ((xs - ys).norm_squared() < 1e-18)
    throw std::domain_error("kernel_reflector: coincident points");
  auto jx = vector_inverse(weight_J(CayleyDir::inverse, xs, n));
  auto jy = vector_inverse(weight_J(CayleyDir::inverse, ys, n));
  auto prod = jx * (xs - ys) * jy;
  double norm = std::sqrt(jx.norm_squared() * (xs - ys).norm_squared() * jy.norm_squared());
  return prod.scaled(1.0 / norm);
}

}  // namespace rsph

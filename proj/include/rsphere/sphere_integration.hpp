#pragma once

#include "rsphere/polynomial.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace rsph {

// Exact moment of a monomial over the unit sphere S^{n-1} in R^n:
//   integral of u^alpha ds = 0 if any alpha_i is odd, else
//   2 * prod Gamma((alpha_i+1)/2) / Gamma((|alpha|+n)/2),
// evaluated through double-factorial identities so the result is an exact
// rational times an integer power of pi.
inline PiRational sphere_moment(int n, const std::vector<int>& alpha) {
  for (int a : alpha)
    if (a % 2 != 0) return PiRational();
  // Gamma(m + 1/2) = (2m)! / (4^m m!) * sqrt(pi)
  auto half_gamma = [](int m) {
    Integer four_m = 1;
    for (int i = 0; i < m; ++i) four_m *= 4;
    return Rational(factorial(2 * m), factorial(m) * four_m);
  };
  Rational num(2);
  int M = 0;
  for (int a : alpha) {
    num *= half_gamma(a / 2);
    M += a / 2;
  }
  if (n % 2 == 0) {
    return PiRational(num / Rational(factorial(M + n / 2 - 1)), n / 2);
  }
  int K = M + (n - 1) / 2;
  return PiRational(num / half_gamma(K), (n - 1) / 2);
}

inline double sphere_moment_d(int n, const std::vector<int>& alpha) {
  struct Cache {
    std::map<std::pair<int, std::vector<int>>, double> values;
    std::mutex mu;
  };
  static Cache cache;
  std::lock_guard<std::mutex> lock(cache.mu);
  auto key = std::make_pair(n, alpha);
  auto it = cache.values.find(key);
  if (it != cache.values.end()) return it->second;
  double v = to_double(sphere_moment(n, alpha));
  cache.values.emplace(std::move(key), v);
  return v;
}

// surface area of S^{n-1} in R^n
inline PiRational omega_exact(int n) { return sphere_moment(n, std::vector<int>(n, 0)); }
inline double omega(int n) { return to_double(omega_exact(n)); }

inline Rational c_k_constant(int n, int k) {
  if (n < 3) throw std::invalid_argument("c_k: requires n >= 3");
  return Rational(n - 2, n - 2 + 2 * k);
}

inline Multivector<PiRational> to_pi_mv(const Multivector<Rational>& a) {
  Multivector<PiRational> r(a.gens());
  for (const auto& [m, v] : a.terms()) r.set(m, PiRational(v));
  return r;
}

inline CliffordPolynomial<Rational> pi_poly_to_rational(
    const CliffordPolynomial<PiRational>& p) {
  CliffordPolynomial<Rational> r(p.layout(), p.gens());
  for (const auto& [e, c] : p.terms()) {
    Multivector<Rational> m(p.gens());
    for (const auto& [mask, v] : c.terms()) {
      if (v.pi_pow != 0)
        throw std::logic_error("pi_poly_to_rational: residual power of pi");
      m.set(mask, v.coef);
    }
    r.add_term(e, m);
  }
  return r;
}

namespace detail {

template <class SIn, class SOut, class MomentFn>
CliffordPolynomial<SOut> pair_over_block_impl(const CliffordPolynomial<SIn>& a,
                                              const CliffordPolynomial<SIn>& b, int block,
                                              MomentFn&& moment) {
  if (a.layout() != b.layout())
    throw std::invalid_argument("pair_over_block: layout mismatch");
  const auto& layout = a.layout();
  const int n = layout.sizes[block];
  const int off = layout.offset(block);
  const int total = layout.total();
  CliffordPolynomial<SOut> r(layout, a.gens());

  auto parity_key = [&](const Expo& e) {
    unsigned k = 0;
    for (int i = 0; i < n; ++i) k |= (unsigned(e[off + i]) & 1u) << i;
    return k;
  };
  std::map<unsigned, std::vector<const std::pair<const Expo, Multivector<SIn>>*>> b_by_parity;
  for (const auto& term : b.terms()) b_by_parity[parity_key(term.first)].push_back(&term);

  std::vector<int> alpha(n);
  Expo merged(total, 0);
  for (const auto& [ea, ca] : a.terms()) {
    auto it = b_by_parity.find(parity_key(ea));
    if (it == b_by_parity.end()) continue;
    for (const auto* tb : it->second) {
      const Expo& eb = tb->first;
      for (int i = 0; i < n; ++i) alpha[i] = int(ea[off + i]) + int(eb[off + i]);
      SOut mom = moment(alpha);
      if (is_zero(mom)) continue;
      for (int i = 0; i < total; ++i) merged[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
      for (int i = 0; i < n; ++i) merged[off + i] = 0;
      Multivector<SIn> prod = ca * tb->second;
      Multivector<SOut> scaled(a.gens());
      for (const auto& [mask, v] : prod.terms()) scaled.add_term(mask, SOut(v) * mom);
      r.add_term(merged, scaled);
    }
  }
  return r;
}

}  // namespace detail

// Clifford inner product with respect to one block:
//   (A, B)_u = integral over S^{n-1} of A(..,u) B(..,u) ds(u),
// returned as a polynomial in the remaining blocks (block exponents zeroed).
inline CliffordPolynomial<PiRational> pair_over_block(const CliffordPolynomial<Rational>& a,
                                                      const CliffordPolynomial<Rational>& b,
                                                      int block) {
  const int n = a.layout().sizes[block];
  return detail::pair_over_block_impl<Rational, PiRational>(
      a, b, block, [n](const std::vector<int>& alpha) { return sphere_moment(n, alpha); });
}

inline CliffordPolynomial<double> pair_over_block(const CliffordPolynomial<double>& a,
                                                  const CliffordPolynomial<double>& b,
                                                  int block) {
  const int n = a.layout().sizes[block];
  return detail::pair_over_block_impl<double, double>(
      a, b, block, [n](const std::vector<int>& alpha) { return sphere_moment_d(n, alpha); });
}

// integral of a polynomial over the unit sphere of one block
inline Multivector<PiRational> integrate_sphere(const CliffordPolynomial<Rational>& p,
                                                int block) {
  const auto& layout = p.layout();
  const int n = layout.sizes[block];
  const int off = layout.offset(block);
  Multivector<PiRational> r(p.gens());
  std::vector<int> alpha(n);
  for (const auto& [e, c] : p.terms()) {
    for (int i = 0; i < layout.total(); ++i)
      if ((i < off || i >= off + n) && e[i] != 0)
        throw std::invalid_argument("integrate_sphere: polynomial has other free blocks");
    for (int i = 0; i < n; ++i) alpha[i] = e[off + i];
    PiRational mom = sphere_moment(n, alpha);
    if (mom.zero()) continue;
    Multivector<PiRational> cm = to_pi_mv(c);
    r += cm.scaled(mom);
  }
  return r;
}

inline Multivector<double> integrate_sphere(const CliffordPolynomial<double>& p, int block) {
  const auto& layout = p.layout();
  const int n = layout.sizes[block];
  const int off = layout.offset(block);
  Multivector<double> r(p.gens());
  std::vector<int> alpha(n);
  for (const auto& [e, c] : p.terms()) {
    for (int i = 0; i < n; ++i) alpha[i] = e[off + i];
    double mom = sphere_moment_d(n, alpha);
    if (mom == 0.0) continue;
    r += c.scaled(mom);
  }
  return r;
}

// (P, Q)_u for polynomials of the block variable alone
inline Multivector<PiRational> inner_product_u(const CliffordPolynomial<Rational>& p,
                                               const CliffordPolynomial<Rational>& q,
                                               int block) {
  return integrate_sphere(p * q, block);
}
inline Multivector<double> inner_product_u(const CliffordPolynomial<double>& p,
                                           const CliffordPolynomial<double>& q, int block) {
  return integrate_sphere(p * q, block);
}

}  // namespace rsph

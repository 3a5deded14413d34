#pragma once

#include "rsphere/polynomial.hpp"
#include "rsphere/rational_homogeneous.hpp"

#include <memory>
#include <vector>

namespace rsph {

// Bases of the degree-k harmonic space H_k and monogenic space M_k of
// Cl_{n+1}-valued polynomials in n variables.  Elements live on a
// single-block layout {n} with gens = n+1.
struct SpaceBasis {
  enum class Kind { harmonic_scalar, left_monogenic, right_monogenic };
  Kind kind;
  int n = 0;
  int k = 0;
  int gens = 0;
  std::vector<CliffordPolynomial<Rational>> elements;
};

// dim of the scalar harmonic space: C(n+k-1,k) - C(n+k-3,k-2)
long long harmonic_scalar_dimension(int n, int k);

// Scalar harmonic basis (blade-valued bases are obtained by scaling these
// with blades on demand).
std::shared_ptr<const SpaceBasis> harmonic_basis(int n, int k);

// Basis of left/right monogenic Cl_{gens}-valued polynomials in n variables.
// gens defaults to n+1 (the paper's value space).  The spinor span defaults
// to all of Cl_{gens}; a reduced span may be supplied for performance (list
// of blade masks the coefficients may touch).
std::shared_ptr<const SpaceBasis> monogenic_basis(
    int n, int k, SpaceBasis::Kind side = SpaceBasis::Kind::left_monogenic,
    const std::vector<BladeMask>& spinor_span = {}, int gens = -1);

// Embed a single-block polynomial into a larger layout at `target_block`.
template <class S>
CliffordPolynomial<S> embed_block(const CliffordPolynomial<S>& p, const BlockLayout& target,
                                  int target_block) {
  if (p.layout().blocks() != 1)
    throw std::invalid_argument("embed_block: source must be single-block");
  const int off = target.offset(target_block);
  CliffordPolynomial<S> r(target, p.gens());
  for (const auto& [e, c] : p.terms()) {
    Expo t(target.total(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) t[off + i] = e[i];
    r.add_term(t, c);
  }
  return r;
}

template <class S>
struct AlmansiFischerParts {
  CliffordPolynomial<S> p_k;    // monogenic, degree k
  CliffordPolynomial<S> p_km1;  // monogenic, degree k-1 (h = p_k + u p_km1)
};

// h harmonic homogeneous of degree k in the block:  p_{k-1} = D_u h / (-n-2k+2),
// p_k = h - u p_{k-1}.  Exact scalars get their preconditions checked.
template <class S>
AlmansiFischerParts<S> almansi_fischer(const CliffordPolynomial<S>& h, int block, int n,
                                       int k) {
  if (n + 2 * k - 2 == 0)
    throw std::domain_error("almansi_fischer: degenerate parameters n+2k-2 = 0");
  if constexpr (!std::is_same_v<S, double>) {
    if (!h.zero()) {
      auto deg = h.homogeneous_degree(block);
      if (!deg || *deg != k)
        throw std::invalid_argument("almansi_fischer: not homogeneous of degree k");
      if (!h.laplacian(block).zero())
        throw std::invalid_argument("almansi_fischer: input not harmonic");
    }
  }
  AlmansiFischerParts<S> r;
  r.p_km1 = h.dirac_left(block).scaled(S(1) / S(-n - 2 * k + 2));
  auto u = CliffordPolynomial<S>::position_vector(h.layout(), h.gens(), block);
  r.p_k = h - u * r.p_km1;
  return r;
}

// left projection P_k : H_k -> M_k
template <class S>
CliffordPolynomial<S> project_Pk(const CliffordPolynomial<S>& h, int block, int n, int k) {
  return almansi_fischer(h, block, n, k).p_k;
}

// right projection P_{k,r} : H_k -> \bar M_k, via the reversion duality
// between left and right monogenics
template <class S>
CliffordPolynomial<S> project_Pkr(const CliffordPolynomial<S>& h, int block, int n, int k) {
  return project_Pk(h.reversion(), block, n, k).reversion();
}

// P_k on the rational-homogeneous class (the spinor block stays polynomial,
// the radial dependence rides along in the coefficients)
template <class S>
RationalHomogeneous<S> project_Pk(const RationalHomogeneous<S>& h, int block, int n, int k) {
  if (n + 2 * k - 2 == 0)
    throw std::domain_error("project_Pk: degenerate parameters n+2k-2 = 0");
  auto p_km1 = h.dirac_left(block).scaled(S(1) / S(-n - 2 * k + 2));
  auto u = CliffordPolynomial<S>::position_vector(h.layout(), h.gens(), block);
  return h - p_km1.mul_poly_left(u);
}

}  // namespace rsph

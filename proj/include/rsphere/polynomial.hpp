#pragma once

#include "rsphere/clifford.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace rsph {

// Named variable blocks, e.g. {x(n), u(n)} or {w(n+1), u(n)}.  Variables are
// addressed by (block, index) or by flat offset.  Variable j of a block maps
// to the Clifford generator e_{j+1}.
struct BlockLayout {
  std::vector<int> sizes;

  BlockLayout() = default;
  BlockLayout(std::initializer_list<int> s) : sizes(s) {}
  explicit BlockLayout(std::vector<int> s) : sizes(std::move(s)) {}

  int blocks() const { return static_cast<int>(sizes.size()); }
  int total() const { return std::accumulate(sizes.begin(), sizes.end(), 0); }
  int offset(int block) const {
    int off = 0;
    for (int b = 0; b < block; ++b) off += sizes[b];
    return off;
  }
  int flat(int block, int i) const { return offset(block) + i; }
  friend bool operator==(const BlockLayout& a, const BlockLayout& b) {
    return a.sizes == b.sizes;
  }
  friend bool operator!=(const BlockLayout& a, const BlockLayout& b) {
    return !(a == b);
  }
};

using Expo = std::vector<std::uint8_t>;

inline int expo_degree(const Expo& e, int off, int len) {
  int d = 0;
  for (int i = 0; i < len; ++i) d += e[off + i];
  return d;
}

// Polynomial with Multivector coefficients, canonical form (no zero
// coefficients), sparse exponents.
template <class S>
class CliffordPolynomial {
 public:
  CliffordPolynomial() : gens_(0) {}
  CliffordPolynomial(BlockLayout layout, int gens)
      : layout_(std::move(layout)), gens_(gens) {}

  static CliffordPolynomial constant(BlockLayout layout, Multivector<S> c) {
    CliffordPolynomial p(layout, c.gens());
    p.add_term(Expo(p.layout_.total(), 0), c);
    return p;
  }
  static CliffordPolynomial variable(BlockLayout layout, int gens, int block, int i,
                                     S coeff = S(1)) {
    CliffordPolynomial p(std::move(layout), gens);
    Expo e(p.layout_.total(), 0);
    e[p.layout_.flat(block, i)] = 1;
    p.add_term(e, Multivector<S>::scalar(gens, std::move(coeff)));
    return p;
  }
  // position vector of a block: sum_j block_j * e_{j+1}
  static CliffordPolynomial position_vector(BlockLayout layout, int gens, int block) {
    CliffordPolynomial p(layout, gens);
    for (int i = 0; i < layout.sizes[block]; ++i) {
      Expo e(p.layout_.total(), 0);
      e[p.layout_.flat(block, i)] = 1;
      p.add_term(e, Multivector<S>::basis_vector(gens, i + 1));
    }
    return p;
  }

  const BlockLayout& layout() const { return layout_; }
  int gens() const { return gens_; }
  bool zero() const { return terms_.empty(); }
  const std::map<Expo, Multivector<S>>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const Expo& e, const Multivector<S>& c) {
    if (c.zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.zero()) terms_.erase(it);
    }
  }

  CliffordPolynomial& operator+=(const CliffordPolynomial& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  CliffordPolynomial& operator-=(const CliffordPolynomial& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend CliffordPolynomial operator+(CliffordPolynomial a, const CliffordPolynomial& b) {
    return a += b;
  }
  friend CliffordPolynomial operator-(CliffordPolynomial a, const CliffordPolynomial& b) {
    return a -= b;
  }
  friend CliffordPolynomial operator-(const CliffordPolynomial& a) {
    CliffordPolynomial r(a.layout_, a.gens_);
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
  }

  CliffordPolynomial scaled(const S& s) const {
    CliffordPolynomial r(layout_, gens_);
    if (is_zero(s)) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.scaled(s));
    return r;
  }
  CliffordPolynomial mul_left(const Multivector<S>& m) const {
    CliffordPolynomial r(layout_, gens_);
    for (const auto& [e, c] : terms_) r.add_term(e, m * c);
    return r;
  }
  CliffordPolynomial mul_right(const Multivector<S>& m) const {
    CliffordPolynomial r(layout_, gens_);
    for (const auto& [e, c] : terms_) r.add_term(e, c * m);
    return r;
  }

  friend CliffordPolynomial operator*(const CliffordPolynomial& a,
                                      const CliffordPolynomial& b) {
    a.check_same(b);
    CliffordPolynomial r(a.layout_, a.gens_);
    const int total = a.layout_.total();
    Expo e(total, 0);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (int i = 0; i < total; ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
        r.add_term(e, ca * cb);
      }
    return r;
  }

  CliffordPolynomial derivative(int flat_var) const {
    CliffordPolynomial r(layout_, gens_);
    for (const auto& [e, c] : terms_) {
      if (e[flat_var] == 0) continue;
      Expo d = e;
      d[flat_var] -= 1;
      r.add_term(d, c.scaled(S(static_cast<int>(e[flat_var]))));
    }
    return r;
  }
  CliffordPolynomial derivative(int block, int i) const {
    return derivative(layout_.flat(block, i));
  }

  // sum_j e_{j+1} * d/d block_j, Clifford factor on the left
  CliffordPolynomial dirac_left(int block) const {
    CliffordPolynomial r(layout_, gens_);
    for (int i = 0; i < layout_.sizes[block]; ++i)
      r += derivative(block, i).mul_left(Multivector<S>::basis_vector(gens_, i + 1));
    return r;
  }
  CliffordPolynomial dirac_right(int block) const {
    CliffordPolynomial r(layout_, gens_);
    for (int i = 0; i < layout_.sizes[block]; ++i)
      r += derivative(block, i).mul_right(Multivector<S>::basis_vector(gens_, i + 1));
    return r;
  }
  CliffordPolynomial laplacian(int block) const {
    CliffordPolynomial r(layout_, gens_);
    for (int i = 0; i < layout_.sizes[block]; ++i)
      r += derivative(block, i).derivative(block, i);
    return r;
  }

  // coefficient sign flips of the reversion anti-automorphism
  CliffordPolynomial reversion() const {
    CliffordPolynomial r(layout_, gens_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.reversion());
    return r;
  }

  Multivector<S> evaluate(const std::vector<S>& values) const {
    if (static_cast<int>(values.size()) != layout_.total())
      throw std::invalid_argument("evaluate: wrong number of values");
    Multivector<S> r(gens_);
    for (const auto& [e, c] : terms_) {
      S m(1);
      for (int i = 0; i < layout_.total(); ++i)
        for (int p = 0; p < e[i]; ++p) m *= values[i];
      r += c.scaled(m);
    }
    return r;
  }

  // substitute numeric values for one block, leaving a polynomial in the rest
  CliffordPolynomial evaluate_block(int block, const std::vector<S>& values) const {
    if (static_cast<int>(values.size()) != layout_.sizes[block])
      throw std::invalid_argument("evaluate_block: wrong number of values");
    const int off = layout_.offset(block);
    const int len = layout_.sizes[block];
    CliffordPolynomial r(layout_, gens_);
    for (const auto& [e, c] : terms_) {
      S m(1);
      for (int i = 0; i < len; ++i)
        for (int p = 0; p < e[off + i]; ++p) m *= values[i];
      Expo d = e;
      for (int i = 0; i < len; ++i) d[off + i] = 0;
      r.add_term(d, c.scaled(m));
    }
    return r;
  }

  // Replace each variable of `block` by a scalar-valued polynomial over
  // `target` layout; variables of the other blocks are relocated through
  // `other_var_target` (flat source index -> flat target index).
  CliffordPolynomial substitute_block(int block,
                                      const std::vector<CliffordPolynomial>& exprs,
                                      const BlockLayout& target,
                                      const std::vector<int>& other_var_target) const {
    const int off = layout_.offset(block);
    const int len = layout_.sizes[block];
    if (static_cast<int>(exprs.size()) != len)
      throw std::invalid_argument("substitute_block: wrong expression count");
    for (const auto& q : exprs)
      for (const auto& [e, c] : q.terms())
        if (!c.is_grade(0))
          throw std::invalid_argument("substitute_block: expressions must be scalar-valued");
    CliffordPolynomial r(target, gens_);
    for (const auto& [e, c] : terms_) {
      CliffordPolynomial prod = constant(target, Multivector<S>::scalar(gens_, S(1)));
      for (int i = 0; i < len; ++i)
        for (int p = 0; p < e[off + i]; ++p) prod = prod * exprs[i];
      Expo shift(target.total(), 0);
      for (int i = 0; i < layout_.total(); ++i) {
        if (i >= off && i < off + len) continue;
        if (e[i] == 0) continue;
        shift[other_var_target[i]] = static_cast<std::uint8_t>(shift[other_var_target[i]] + e[i]);
      }
      for (const auto& [pe, pc] : prod.terms()) {
        Expo t = pe;
        for (int i = 0; i < target.total(); ++i)
          t[i] = static_cast<std::uint8_t>(t[i] + shift[i]);
        r.add_term(t, c * pc);
      }
    }
    return r;
  }

  int degree(int block) const {
    int d = -1;
    const int off = layout_.offset(block);
    const int len = layout_.sizes[block];
    for (const auto& [e, c] : terms_) d = std::max(d, expo_degree(e, off, len));
    return d;
  }
  // degree if homogeneous in the block, nullopt otherwise
  std::optional<int> homogeneous_degree(int block) const {
    const int off = layout_.offset(block);
    const int len = layout_.sizes[block];
    std::optional<int> d;
    for (const auto& [e, c] : terms_) {
      int t = expo_degree(e, off, len);
      if (!d)
        d = t;
      else if (*d != t)
        return std::nullopt;
    }
    return d ? d : std::optional<int>(0);
  }
  CliffordPolynomial extract_degree(int block, int deg) const {
    const int off = layout_.offset(block);
    const int len = layout_.sizes[block];
    CliffordPolynomial r(layout_, gens_);
    for (const auto& [e, c] : terms_)
      if (expo_degree(e, off, len) == deg) r.terms_.emplace(e, c);
    return r;
  }

  std::string str(const std::vector<std::string>& block_names = {}) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c.str() << ")";
      for (int b = 0; b < layout_.blocks(); ++b) {
        std::string nm = b < static_cast<int>(block_names.size())
                             ? block_names[b]
                             : "b" + std::to_string(b);
        for (int i = 0; i < layout_.sizes[b]; ++i) {
          int p = e[layout_.flat(b, i)];
          if (p == 0) continue;
          os << "*" << nm << std::to_string(i + 1);
          if (p > 1) os << "^" << p;
        }
      }
    }
    return os.str();
  }

  friend bool operator==(const CliffordPolynomial& a, const CliffordPolynomial& b) {
    return a.layout_ == b.layout_ && a.terms_ == b.terms_;
  }

 private:
  void check_same(const CliffordPolynomial& o) const {
    if (!(layout_ == o.layout_) || gens_ != o.gens_)
      throw std::invalid_argument("CliffordPolynomial: layout mismatch");
  }

  BlockLayout layout_;
  int gens_;
  std::map<Expo, Multivector<S>> terms_;
};

template <class S>
CliffordPolynomial<double> to_double_poly(const CliffordPolynomial<S>& p) {
  CliffordPolynomial<double> r(p.layout(), p.gens());
  for (const auto& [e, c] : p.terms()) r.add_term(e, to_double_mv(c));
  return r;
}

// scalar-valued linear form sum_j coeffs[j] * block_j
template <class S>
CliffordPolynomial<S> linear_form(const BlockLayout& layout, int gens, int block,
                                  const std::vector<S>& coeffs) {
  CliffordPolynomial<S> r(layout, gens);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (is_zero(coeffs[j])) continue;
    Expo e(layout.total(), 0);
    e[layout.flat(block, static_cast<int>(j))] = 1;
    r.add_term(e, Multivector<S>::scalar(gens, coeffs[j]));
  }
  return r;
}

// Exact division of a single-block polynomial by |v|^2 = sum of squared
// variables.  The lexicographically largest monomial of q*|v|^2 is
// (largest monomial of q) * v_1^2, so repeatedly stripping v_1^2 from the
// leading term terminates; throws if the input is not divisible.
template <class S>
CliffordPolynomial<S> divide_by_norm_squared(CliffordPolynomial<S> p, int block) {
  const auto& layout = p.layout();
  if (layout.blocks() != 1 || block != 0)
    throw std::logic_error("divide_by_norm_squared: single-block polynomials only");
  CliffordPolynomial<S> quotient(layout, p.gens());
  CliffordPolynomial<S> norm2(layout, p.gens());
  for (int i = 0; i < layout.sizes[block]; ++i) {
    Expo e(layout.total(), 0);
    e[i] = 2;
    norm2.add_term(e, Multivector<S>::scalar(p.gens(), S(1)));
  }
  while (!p.zero()) {
    auto it = p.terms().rbegin();
    Expo lead = it->first;
    Multivector<S> c = it->second;
    if (lead[0] < 2) throw std::domain_error("divide_by_norm_squared: not divisible");
    Expo q = lead;
    q[0] -= 2;
    CliffordPolynomial<S> mono(layout, p.gens());
    mono.add_term(q, c);
    quotient += mono;
    p -= mono * norm2;
  }
  return quotient;
}

}  // namespace rsph

#pragma once

#include "rsphere/polynomial.hpp"

#include <cmath>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace rsph {

// Finite sum of terms  numer(v,...) * |v - c|^(-power)  where v is one
// designated "radial" block.  Closed under partial differentiation; all
// powers attached to one center share parity (they move in steps of 2).
template <class S>
class RationalHomogeneous {
 public:
  struct Term {
    CliffordPolynomial<S> numer;
    int power = 0;
    std::vector<S> center;  // size = radial block size
  };

  RationalHomogeneous() : gens_(0), radial_block_(0) {}
  RationalHomogeneous(BlockLayout layout, int gens, int radial_block)
      : layout_(std::move(layout)), gens_(gens), radial_block_(radial_block) {}

  static RationalHomogeneous from_polynomial(CliffordPolynomial<S> p, int radial_block,
                                             int power = 0, std::vector<S> center = {}) {
    RationalHomogeneous r(p.layout(), p.gens(), radial_block);
    if (center.empty()) center.assign(p.layout().sizes[radial_block], S(0));
    r.add_term(std::move(p), power, std::move(center));
    return r;
  }

  const BlockLayout& layout() const { return layout_; }
  int gens() const { return gens_; }
  int radial_block() const { return radial_block_; }
  const std::vector<Term>& terms() const { return terms_; }

  void add_term(CliffordPolynomial<S> numer, int power, std::vector<S> center) {
    if (numer.zero()) return;
    for (auto& t : terms_)
      if (t.power == power && t.center == center) {
        t.numer += numer;
        if (t.numer.zero()) {
          t = terms_.back();
          terms_.pop_back();
        }
        return;
      }
    terms_.push_back(Term{std::move(numer), power, std::move(center)});
  }

  RationalHomogeneous& operator+=(const RationalHomogeneous& o) {
    for (const auto& t : o.terms_) add_term(t.numer, t.power, t.center);
    return *this;
  }
  RationalHomogeneous& operator-=(const RationalHomogeneous& o) {
    for (const auto& t : o.terms_) add_term(-t.numer, t.power, t.center);
    return *this;
  }
  friend RationalHomogeneous operator+(RationalHomogeneous a, const RationalHomogeneous& b) {
    return a += b;
  }
  friend RationalHomogeneous operator-(RationalHomogeneous a, const RationalHomogeneous& b) {
    return a -= b;
  }

  RationalHomogeneous scaled(const S& s) const {
    RationalHomogeneous r(layout_, gens_, radial_block_);
    for (const auto& t : terms_) r.add_term(t.numer.scaled(s), t.power, t.center);
    return r;
  }
  RationalHomogeneous mul_left(const Multivector<S>& m) const {
    RationalHomogeneous r(layout_, gens_, radial_block_);
    for (const auto& t : terms_) r.add_term(t.numer.mul_left(m), t.power, t.center);
    return r;
  }
  RationalHomogeneous mul_poly_left(const CliffordPolynomial<S>& p) const {
    RationalHomogeneous r(layout_, gens_, radial_block_);
    for (const auto& t : terms_) r.add_term(p * t.numer, t.power, t.center);
    return r;
  }
  RationalHomogeneous mul_poly_right(const CliffordPolynomial<S>& p) const {
    RationalHomogeneous r(layout_, gens_, radial_block_);
    for (const auto& t : terms_) r.add_term(t.numer * p, t.power, t.center);
    return r;
  }

  // d |v-c|^(-m) / dv_i = -m (v_i - c_i) |v-c|^(-m-2)
  RationalHomogeneous derivative(int flat_var) const {
    const int off = layout_.offset(radial_block_);
    const int len = layout_.sizes[radial_block_];
    RationalHomogeneous r(layout_, gens_, radial_block_);
    for (const auto& t : terms_) {
      r.add_term(t.numer.derivative(flat_var), t.power, t.center);
      if (t.power != 0 && flat_var >= off && flat_var < off + len) {
        int i = flat_var - off;
        CliffordPolynomial<S> vi =
            CliffordPolynomial<S>::variable(layout_, gens_, radial_block_, i);
        if (!is_zero(t.center[i]))
          vi += CliffordPolynomial<S>::constant(
              layout_, Multivector<S>::scalar(gens_, S(0) - t.center[i]));
        r.add_term((vi * t.numer).scaled(S(-t.power)), t.power + 2, t.center);
      }
    }
    return r;
  }
  RationalHomogeneous derivative(int block, int i) const {
    return derivative(layout_.flat(block, i));
  }

  RationalHomogeneous dirac_left(int block) const {
    RationalHomogeneous r(layout_, gens_, radial_block_);
    for (int i = 0; i < layout_.sizes[block]; ++i) {
      auto d = derivative(block, i);
      r += d.mul_left(Multivector<S>::basis_vector(gens_, i + 1));
    }
    return r;
  }
  RationalHomogeneous dirac_right(int block) const {
    RationalHomogeneous r(layout_, gens_, radial_block_);
    for (int i = 0; i < layout_.sizes[block]; ++i) {
      auto d = derivative(block, i);
      RationalHomogeneous m(layout_, gens_, radial_block_);
      for (const auto& t : d.terms_)
        m.add_term(t.numer.mul_right(Multivector<S>::basis_vector(gens_, i + 1)), t.power,
                   t.center);
      r += m;
    }
    return r;
  }
  RationalHomogeneous laplacian(int block) const {
    RationalHomogeneous r(layout_, gens_, radial_block_);
    for (int i = 0; i < layout_.sizes[block]; ++i)
      r += derivative(block, i).derivative(block, i);
    return r;
  }

  Multivector<S> evaluate(const std::vector<S>& values) const {
    const int off = layout_.offset(radial_block_);
    const int len = layout_.sizes[radial_block_];
    Multivector<S> r(gens_);
    for (const auto& t : terms_) {
      S r2(0);
      for (int i = 0; i < len; ++i) {
        S d = values[off + i] - t.center[i];
        r2 += d * d;
      }
      if (is_zero(r2) && t.power > 0)
        throw std::domain_error("RationalHomogeneous: evaluation at singular center");
      S factor(1);
      if (t.power != 0) {
        if constexpr (std::is_same_v<S, double>) {
          factor = std::pow(r2, -t.power / 2.0);
        } else {
          if (t.power % 2 == 0) {
            factor = rational_pow(S(1) / r2, t.power / 2);
          } else if (r2 == S(1)) {
            factor = S(1);
          } else {
            throw std::domain_error(
                "RationalHomogeneous: odd norm power at non-unit point needs float");
          }
        }
      }
      r += t.numer.evaluate(values).scaled(factor);
    }
    return r;
  }

  // Bring all terms sharing a center to the maximal power by multiplying
  // numerators with |v-c|^2; makes the zero function literally empty.
  RationalHomogeneous canonicalized() const {
    RationalHomogeneous r(layout_, gens_, radial_block_);
    std::vector<std::vector<S>> centers;
    for (const auto& t : terms_) {
      bool seen = false;
      for (const auto& c : centers) seen = seen || c == t.center;
      if (!seen) centers.push_back(t.center);
    }
    for (const auto& c : centers) {
      int maxp = 0;
      for (const auto& t : terms_)
        if (t.center == c) maxp = std::max(maxp, t.power);
      CliffordPolynomial<S> total(layout_, gens_);
      for (const auto& t : terms_) {
        if (!(t.center == c)) continue;
        if ((maxp - t.power) % 2 != 0)
          throw std::logic_error("RationalHomogeneous: mixed power parity at one center");
        CliffordPolynomial<S> num = t.numer;
        for (int s = 0; s < (maxp - t.power) / 2; ++s) num = num * norm2_poly(c);
        total += num;
      }
      r.add_term(std::move(total), maxp, c);
    }
    return r;
  }

  bool is_zero_function() const { return canonicalized().terms_.empty(); }

 private:
  CliffordPolynomial<S> norm2_poly(const std::vector<S>& center) const {
    CliffordPolynomial<S> n2(layout_, gens_);
    for (int i = 0; i < layout_.sizes[radial_block_]; ++i) {
      auto vi = CliffordPolynomial<S>::variable(layout_, gens_, radial_block_, i);
      if (!is_zero(center[i]))
        vi += CliffordPolynomial<S>::constant(
            layout_, Multivector<S>::scalar(gens_, S(0) - center[i]));
      n2 += vi * vi;
    }
    return n2;
  }

  BlockLayout layout_;
  int gens_;
  int radial_block_;
  std::vector<Term> terms_;
};

}  // namespace rsph

#pragma once

#include "rsphere/scalar.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace rsph {

// Basis blades of Cl_{n+1} are index sets encoded as bit patterns over the
// generators e_1..e_{n+1}; bit i-1 stands for e_i.  Generators anticommute
// and square to -1.
using BladeMask = std::uint32_t;

enum class Side { left, right };

constexpr int kMaxGenerators = 12;

inline int blade_grade(BladeMask a) { return std::popcount(a); }

// Sign of the product e_A e_B: (-1)^{transpositions} * (-1)^{|A ∩ B|}.
inline int blade_product_sign(BladeMask a, BladeMask b) {
  int swaps = 0;
  BladeMask t = a >> 1;
  while (t != 0) {
    swaps += std::popcount(t & b);
    t >>= 1;
  }
  swaps += std::popcount(a & b);  // contractions, e_i e_i = -1
  return (swaps & 1) ? -1 : 1;
}

inline int reversion_sign(int grade) { return (grade * (grade - 1) / 2) % 2 ? -1 : 1; }
inline int conjugation_sign(int grade) { return (grade * (grade + 1) / 2) % 2 ? -1 : 1; }

inline std::string blade_name(BladeMask a) {
  if (a == 0) return "1";
  std::string s;
  for (int i = 0; i < kMaxGenerators; ++i)
    if (a & (BladeMask(1) << i)) s += "e" + std::to_string(i + 1);
  return s;
}

// Element of Cl_{n+1}: sparse map from blade to scalar, no zero entries.
// Immutable in spirit; all operations return fresh values.
template <class S>
class Multivector {
 public:
  Multivector() : gens_(0) {}
  explicit Multivector(int gens) : gens_(gens) { check_gens(gens); }

  static Multivector scalar(int gens, S v) {
    Multivector m(gens);
    m.set(0, std::move(v));
    return m;
  }
  static Multivector blade(int gens, BladeMask mask, S v) {
    Multivector m(gens);
    m.set(mask, std::move(v));
    return m;
  }
  // Grade-1 vector from components (c_1, ..., c_gens).
  static Multivector vector(const std::vector<S>& comps) {
    Multivector m(static_cast<int>(comps.size()));
    for (std::size_t i = 0; i < comps.size(); ++i)
      m.set(BladeMask(1) << i, comps[i]);
    return m;
  }
  static Multivector basis_vector(int gens, int i) {
    if (i < 1 || i > gens) throw std::invalid_argument("basis_vector: index out of range");
    return blade(gens, BladeMask(1) << (i - 1), S(1));
  }

  int gens() const { return gens_; }
  bool zero() const { return terms_.empty(); }
  const std::map<BladeMask, S>& terms() const { return terms_; }

  void set(BladeMask mask, S v) {
    if (mask >> gens_)
      throw std::invalid_argument("Multivector: blade outside algebra");
    if (is_zero(v))
      terms_.erase(mask);
    else
      terms_[mask] = std::move(v);
  }
  void add_term(BladeMask mask, const S& v) {
    if (is_zero(v)) return;
    auto [it, inserted] = terms_.try_emplace(mask, v);
    if (!inserted) {
      it->second += v;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }
  S coeff(BladeMask mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? S(0) : it->second;
  }
  S scalar_part() const { return coeff(0); }

  Multivector& operator+=(const Multivector& o) {
    check_same(o);
    for (const auto& [m, v] : o.terms_) add_term(m, v);
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    check_same(o);
    for (const auto& [m, v] : o.terms_) add_term(m, S(0) - v);
    return *this;
  }
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator-(const Multivector& a) {
    Multivector r(a.gens_);
    for (const auto& [m, v] : a.terms_) r.set(m, S(0) - v);
    return r;
  }

  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    if (a.gens_ != b.gens_)
      throw std::invalid_argument("Multivector: dimension mismatch");
    Multivector r(a.gens_);
    for (const auto& [ma, va] : a.terms_)
      for (const auto& [mb, vb] : b.terms_) {
        S prod = va * vb;
        if (blade_product_sign(ma, mb) < 0) prod = S(0) - prod;
        r.add_term(ma ^ mb, prod);
      }
    return r;
  }

  Multivector scaled(const S& s) const {
    Multivector r(gens_);
    if (is_zero(s)) return r;
    for (const auto& [m, v] : terms_) r.set(m, v * s);
    return r;
  }

  Multivector reversion() const {
    Multivector r(gens_);
    for (const auto& [m, v] : terms_)
      r.set(m, reversion_sign(blade_grade(m)) < 0 ? S(0) - v : v);
    return r;
  }
  Multivector conjugation() const {
    Multivector r(gens_);
    for (const auto& [m, v] : terms_)
      r.set(m, conjugation_sign(blade_grade(m)) < 0 ? S(0) - v : v);
    return r;
  }

  Multivector grade_part(int g) const {
    Multivector r(gens_);
    for (const auto& [m, v] : terms_)
      if (blade_grade(m) == g) r.set(m, v);
    return r;
  }
  bool is_grade(int g) const {
    for (const auto& [m, v] : terms_)
      if (blade_grade(m) != g) return false;
    return true;
  }

  // sum of squared coefficients; equals the scalar part of conj(a)*a
  S norm_squared() const {
    S r(0);
    for (const auto& [m, v] : terms_) r += v * v;
    return r;
  }

  // component of a grade-1 element along e_i (1-based)
  S vec_comp(int i) const { return coeff(BladeMask(1) << (i - 1)); }
  std::vector<S> vec_comps() const {
    std::vector<S> r(gens_);
    for (int i = 1; i <= gens_; ++i) r[i - 1] = vec_comp(i);
    return r;
  }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.gens_ == b.gens_ && a.terms_ == b.terms_;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, v] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << to_string(v);
      if (m != 0) os << "*" << blade_name(m);
    }
    return os.str();
  }

 private:
  static void check_gens(int gens) {
    if (gens < 0 || gens > kMaxGenerators)
      throw std::invalid_argument("Multivector: generator count out of range");
  }
  void check_same(const Multivector& o) const {
    if (gens_ != o.gens_)
      throw std::invalid_argument("Multivector: dimension mismatch");
  }

  int gens_;
  std::map<BladeMask, S> terms_;
};

// -x / |x|^2 for nonzero grade-1 x; satisfies x * inverse(x) = 1.
// The float instantiation tolerates (and strips) roundoff-sized blades of
// other grades left over from products of exactly grade-1 quantities.
template <class S>
Multivector<S> vector_inverse(const Multivector<S>& x) {
  if constexpr (std::is_same_v<S, double>) {
    auto v = x.grade_part(1);
    double junk = (x - v).norm_squared();
    if (junk > 1e-18 * std::max(1.0, x.norm_squared()))
      throw std::invalid_argument("vector_inverse: not grade-1");
    double n2 = v.norm_squared();
    if (n2 == 0.0) throw std::domain_error("vector_inverse: zero vector");
    return v.scaled(-1.0 / n2);
  } else {
    if (!x.is_grade(1)) throw std::invalid_argument("vector_inverse: not grade-1");
    S n2 = x.norm_squared();
    if (is_zero(n2)) throw std::domain_error("vector_inverse: zero vector");
    return x.scaled(S(0) - S(1) / n2);
  }
}

// a x reversion(a) / |a|^2 -- reflection-type action of a on grade-1 x.
template <class S>
Multivector<S> reflect(const Multivector<S>& a, const Multivector<S>& x) {
  S n2 = a.norm_squared();
  if (is_zero(n2)) throw std::domain_error("reflect: zero norm");
  return (a * x * a.reversion()).scaled(S(1) / n2);
}

template <class S>
Multivector<double> to_double_mv(const Multivector<S>& a) {
  Multivector<double> r(a.gens());
  for (const auto& [m, v] : a.terms()) r.set(m, to_double(v));
  return r;
}

}  // namespace rsph

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace rsph {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(double x) { return x; }

inline bool is_zero(const Rational& q) { return q.is_zero(); }
inline bool is_zero(double x) { return x == 0.0; }

inline Rational rational_pow(const Rational& q, int e) {
  if (e == 0) return Rational(1);
  Rational base = e > 0 ? q : Rational(1) / q;
  int m = e > 0 ? e : -e;
  Rational r(1);
  for (int i = 0; i < m; ++i) r *= base;
  return r;
}

inline Integer factorial(int m) {
  Integer r(1);
  for (int i = 2; i <= m; ++i) r *= i;
  return r;
}

// Exact scalar of the form coef * pi^pi_pow.  Sums require matching powers
// of pi; every quantity in the exact integration pipeline has a uniform
// power for fixed ambient dimension, so mismatches indicate a logic error.
struct PiRational {
  Rational coef{0};
  int pi_pow{0};

  PiRational() = default;
  PiRational(int v) : coef(v) {}
  PiRational(Rational c, int p = 0) : coef(std::move(c)), pi_pow(p) {
    if (coef == 0) pi_pow = 0;
  }

  bool zero() const { return coef == 0; }

  PiRational& operator+=(const PiRational& o) {
    if (o.coef == 0) return *this;
    if (coef == 0) {
      *this = o;
      return *this;
    }
    if (pi_pow != o.pi_pow)
      throw std::logic_error("PiRational: adding mismatched powers of pi");
    coef += o.coef;
    if (coef == 0) pi_pow = 0;
    return *this;
  }
  PiRational& operator-=(const PiRational& o) {
    PiRational neg = o;
    neg.coef = -neg.coef;
    return *this += neg;
  }
  PiRational& operator*=(const PiRational& o) {
    coef *= o.coef;
    pi_pow = coef == 0 ? 0 : pi_pow + o.pi_pow;
    return *this;
  }
  PiRational& operator/=(const PiRational& o) {
    if (o.coef == 0) throw std::domain_error("PiRational: division by zero");
    coef /= o.coef;
    pi_pow = coef == 0 ? 0 : pi_pow - o.pi_pow;
    return *this;
  }

  friend PiRational operator+(PiRational a, const PiRational& b) { return a += b; }
  friend PiRational operator-(PiRational a, const PiRational& b) { return a -= b; }
  friend PiRational operator*(PiRational a, const PiRational& b) { return a *= b; }
  friend PiRational operator/(PiRational a, const PiRational& b) { return a /= b; }
  friend PiRational operator-(PiRational a) {
    a.coef = -a.coef;
    return a;
  }
  friend bool operator==(const PiRational& a, const PiRational& b) {
    return a.coef == b.coef && (a.coef == 0 || a.pi_pow == b.pi_pow);
  }
  friend bool operator!=(const PiRational& a, const PiRational& b) { return !(a == b); }
};

inline bool is_zero(const PiRational& s) { return s.zero(); }

inline double to_double(const PiRational& s) {
  long double pi = 3.14159265358979323846264338327950288L;
  long double p = 1.0L;
  int e = s.pi_pow >= 0 ? s.pi_pow : -s.pi_pow;
  for (int i = 0; i < e; ++i) p *= pi;
  long double c = s.coef.convert_to<long double>();
  return static_cast<double>(s.pi_pow >= 0 ? c * p : c / p);
}

inline std::string to_string(const Rational& q) { return q.str(); }
inline std::string to_string(double x) { return std::to_string(x); }
inline std::string to_string(const PiRational& s) {
  std::string r = s.coef.str();
  if (s.pi_pow == 1)
    r += "*pi";
  else if (s.pi_pow != 0)
    r += "*pi^" + std::to_string(s.pi_pow);
  return r;
}

}  // namespace rsph

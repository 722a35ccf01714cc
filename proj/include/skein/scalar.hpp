#pragma once

#include <string>
#include <string_view>

#include "skein/laurent.hpp"

namespace skein {

// Element of the fraction field of Q[x^±1, v^±1, s^±1].
//
// Fractions are reduced lazily: monomial and rational content are always
// divided out of the denominator, and when the denominator involves only s
// (the case for every quotient the skein pipeline produces) the fraction is
// fully reduced with a univariate gcd. Equality is decided by
// cross-multiplication, so it does not depend on how far a fraction has been
// reduced.
class Scalar {
 public:
  Scalar() : den_(1L) {}
  Scalar(long c) : num_(c), den_(1L) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& c) : num_(c), den_(1L) {}  // NOLINT(google-explicit-constructor)
  Scalar(LaurentPoly num) : num_(std::move(num)), den_(1L) {}  // NOLINT(google-explicit-constructor)
  // Throws std::domain_error if `den` is zero.
  Scalar(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& numerator() const noexcept { return num_; }
  const LaurentPoly& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator*=(const LaurentPoly& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator*(Scalar a, const LaurentPoly& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  // Throws std::domain_error on zero.
  Scalar inverse() const;
  Scalar pow(int k) const;

  // Text form: "num" or "(num)/(den)"; parses back with parse().
  std::string to_string() const;
  // Throws ParseError.
  static Scalar parse(std::string_view text);

 private:
  struct Reduced {};
  Scalar(LaurentPoly num, LaurentPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

// delta = (v^-1 - v)/(s - s^-1), the value of the 0-framed unknot.
Scalar delta();

// The involution x, v, s -> x^-1, v^-1, s^-1.
LaurentPoly bar(const LaurentPoly& p);
Scalar bar(const Scalar& p);

}  // namespace skein

#pragma once

#include <string>
#include <vector>

#include "skein/laurent.hpp"

namespace skein {

// Univariate Laurent polynomial t^low * (c_0 + c_1 t + ... + c_d t^d) with
// c_0 != 0 (unless the polynomial is zero).
class UniLaurent {
 public:
  UniLaurent() = default;
  UniLaurent(long constant);  // NOLINT(google-explicit-constructor)
  explicit UniLaurent(const Rational& constant);
  static UniLaurent monomial(int exponent, const Rational& coeff = 1);
  // Coefficients of t^low, t^{low+1}, ...; zero padding is stripped.
  static UniLaurent from_dense(int low, std::vector<Rational> coeffs);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int low() const noexcept { return low_; }
  int high() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  // Coefficients from t^low upwards.
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  Rational coefficient(int exponent) const;
  const Rational& leading() const { return coeffs_.back(); }

  UniLaurent operator-() const;
  UniLaurent& operator+=(const UniLaurent& rhs);
  UniLaurent& operator-=(const UniLaurent& rhs);
  friend UniLaurent operator+(UniLaurent a, const UniLaurent& b) { return a += b; }
  friend UniLaurent operator-(UniLaurent a, const UniLaurent& b) { return a -= b; }
  friend UniLaurent operator*(const UniLaurent& a, const UniLaurent& b);
  friend UniLaurent operator*(UniLaurent a, const Rational& c);
  friend bool operator==(const UniLaurent& a, const UniLaurent& b) = default;

  UniLaurent shifted(int k) const;

  // Exact division; throws std::domain_error if `d` does not divide.
  UniLaurent divided_by(const UniLaurent& d) const;

  std::string to_string(const char* var = "t") const;

 private:
  void normalize();

  int low_ = 0;
  std::vector<Rational> coeffs_;
};

// Monic gcd of the polynomial parts (powers of t are units and ignored).
// gcd(0, 0) is 0.
UniLaurent gcd(const UniLaurent& a, const UniLaurent& b);

// A reduced fraction of univariate Laurent polynomials in t: numerator and
// denominator coprime, denominator with lowest exponent 0 and leading
// coefficient 1.
class TFraction {
 public:
  TFraction() : den_(1L) {}
  TFraction(UniLaurent num);  // NOLINT(google-explicit-constructor)
  TFraction(UniLaurent num, UniLaurent den);

  const UniLaurent& numerator() const noexcept { return num_; }
  const UniLaurent& denominator() const noexcept { return den_; }
  bool is_polynomial() const { return den_ == UniLaurent(1L); }

  friend TFraction operator+(const TFraction& a, const TFraction& b);
  friend TFraction operator-(const TFraction& a, const TFraction& b);
  friend TFraction operator*(const TFraction& a, const TFraction& b);
  friend bool operator==(const TFraction& a, const TFraction& b) = default;

  std::string to_string() const;

 private:
  UniLaurent num_;
  UniLaurent den_;
};

class Scalar;

// Substitute s -> t^N, x -> t^-1, v -> t^{-N^2}, i.e. x = s^{-1/N} and
// v = s^{-N} with integer exponents in t. Throws SpecializationError if the
// denominator vanishes under the substitution.
TFraction specialize_slN(const Scalar& p, int N);
UniLaurent specialize_slN(const LaurentPoly& p, int N);

// Taylor coefficients of f(e^{h/(2N)}) for h^0 .. h^order.
// Throws SpecializationError when f has a pole at h = 0.
std::vector<Rational> h_expand(const TFraction& f, int N, int order);

}  // namespace skein

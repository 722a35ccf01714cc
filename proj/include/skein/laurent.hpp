#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace skein {

using Rational = mpq_class;

// Exponents of x, v and s in a monomial.
struct Exponent {
  int x = 0;
  int v = 0;
  int s = 0;

  friend auto operator<=>(const Exponent&, const Exponent&) = default;
  friend bool operator==(const Exponent&, const Exponent&) = default;
};

// Sparse Laurent polynomial in x, v, s with rational coefficients.
//
// Terms are kept sorted by exponent, lexicographic on (x, v, s), with no zero
// coefficients and no repeated exponents. Exponents are packed into a single
// 64-bit key so that monomial multiplication is one integer addition.
class LaurentPoly {
 public:
  static constexpr int kExponentBits = 21;
  static constexpr int kExponentBias = 1 << (kExponentBits - 1);
  static constexpr int kMaxExponent = kExponentBias - 1;

  struct Term {
    std::uint64_t key;
    Rational coeff;
  };

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const Rational& constant);

  static LaurentPoly monomial(Exponent e, const Rational& coeff = 1);
  static LaurentPoly monomial(int x, int v, int s, const Rational& coeff = 1) {
    return monomial(Exponent{x, v, s}, coeff);
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  std::size_t size() const noexcept { return terms_.size(); }

  // Terms in ascending exponent order.
  const std::vector<Term>& terms() const noexcept { return terms_; }
  static Exponent unpack(std::uint64_t key);
  static std::uint64_t pack(Exponent e);

  Exponent exponent(std::size_t i) const { return unpack(terms_[i].key); }
  const Rational& coeff(std::size_t i) const { return terms_[i].coeff; }

  // Coefficient of the given monomial (zero when absent).
  Rational coefficient(Exponent e) const;
  // Highest term in the lexicographic order.
  const Term& leading() const { return terms_.back(); }

  // Componentwise minimum / maximum over all terms. Zero polynomial: all 0.
  Exponent min_exponent() const;
  Exponent max_exponent() const;

  // True when only the variable s occurs.
  bool only_s() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  // Multiply by the monomial x^e.x v^e.v s^e.s.
  LaurentPoly shifted(Exponent e) const;
  LaurentPoly pow(int k) const;  // k >= 0, or k < 0 for monomials

  // Text form: terms in descending order, e.g. "2*x^-1*s + s^-1".
  std::string to_string() const;

  // Build from arbitrary (possibly repeated / zero) terms.
  static LaurentPoly from_terms(std::vector<Term> terms);

 private:
  void merge_add(const LaurentPoly& rhs, bool subtract);

  std::vector<Term> terms_;
};

// Common constructors.
inline LaurentPoly var_x(int k = 1) { return LaurentPoly::monomial(k, 0, 0); }
inline LaurentPoly var_v(int k = 1) { return LaurentPoly::monomial(0, k, 0); }
inline LaurentPoly var_s(int k = 1) { return LaurentPoly::monomial(0, 0, k); }

// z = s - s^-1.
LaurentPoly z_poly();

// [i] = (s^i - s^-i)/(s - s^-1) = s^{i-1} + s^{i-3} + ... + s^{1-i}.
LaurentPoly quantum_int(int i);
// [i]! = [1][2]...[i], [0]! = 1.
LaurentPoly quantum_factorial(int i);

std::string rational_to_string(const Rational& q);

}  // namespace skein

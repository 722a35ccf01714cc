#include "skein/univariate.hpp"

#include <algorithm>
#include <stdexcept>

#include "skein/errors.hpp"
#include "skein/scalar.hpp"

namespace skein {

namespace {

using Dense = std::vector<Rational>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Long division of dense polynomials (ascending coefficients). `b` nonzero.
void divmod(const Dense& a, const Dense& b, Dense& quotient, Dense& remainder) {
  remainder = a;
  trim(remainder);
  quotient.clear();
  if (remainder.size() < b.size()) return;
  quotient.assign(remainder.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  for (std::size_t k = quotient.size(); k-- > 0;) {
    const Rational c = remainder[k + b.size() - 1] / lead;
    quotient[k] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i < b.size(); ++i) remainder[k + i] -= c * b[i];
  }
  trim(remainder);
  trim(quotient);
}

Dense make_monic(Dense p) {
  trim(p);
  if (p.empty()) return p;
  const Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

}  // namespace

UniLaurent::UniLaurent(long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

UniLaurent::UniLaurent(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

UniLaurent UniLaurent::monomial(int exponent, const Rational& coeff) {
  UniLaurent p;
  if (coeff != 0) {
    p.low_ = exponent;
    p.coeffs_.push_back(coeff);
  }
  return p;
}

UniLaurent UniLaurent::from_dense(int low, std::vector<Rational> coeffs) {
  UniLaurent p;
  p.low_ = low;
  p.coeffs_ = std::move(coeffs);
  p.normalize();
  return p;
}

void UniLaurent::normalize() {
  trim(coeffs_);
  std::size_t lead_zeros = 0;
  while (lead_zeros < coeffs_.size() && coeffs_[lead_zeros] == 0) ++lead_zeros;
  if (lead_zeros > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead_zeros));
    low_ += static_cast<int>(lead_zeros);
  }
  if (coeffs_.empty()) low_ = 0;
}

Rational UniLaurent::coefficient(int exponent) const {
  if (exponent < low_ || exponent > high()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

UniLaurent UniLaurent::operator-() const {
  UniLaurent r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniLaurent& UniLaurent::operator+=(const UniLaurent& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const int lo = std::min(low_, rhs.low_);
  const int hi = std::max(high(), rhs.high());
  Dense out(static_cast<std::size_t>(hi - lo + 1), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + static_cast<std::size_t>(low_ - lo)] += coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    out[i + static_cast<std::size_t>(rhs.low_ - lo)] += rhs.coeffs_[i];
  }
  low_ = lo;
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

UniLaurent& UniLaurent::operator-=(const UniLaurent& rhs) { return *this += -rhs; }

UniLaurent operator*(const UniLaurent& a, const UniLaurent& b) {
  if (a.is_zero() || b.is_zero()) return UniLaurent{};
  Dense out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniLaurent::from_dense(a.low_ + b.low_, std::move(out));
}

UniLaurent operator*(UniLaurent a, const Rational& c) {
  if (c == 0) return UniLaurent{};
  for (auto& x : a.coeffs_) x *= c;
  return a;
}

UniLaurent UniLaurent::shifted(int k) const {
  UniLaurent r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

UniLaurent UniLaurent::divided_by(const UniLaurent& d) const {
  if (d.is_zero()) throw std::domain_error("UniLaurent: division by zero");
  if (is_zero()) return UniLaurent{};
  Dense q, r;
  divmod(coeffs_, d.coeffs_, q, r);
  if (!r.empty()) throw std::domain_error("UniLaurent: inexact division");
  return from_dense(low_ - d.low_, std::move(q));
}

std::string UniLaurent::to_string(const char* var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int e = high(); e >= low_; --e) {
    const Rational c = coefficient(e);
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    if (e != 0) {
      mono = var;
      if (e != 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += rational_to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += rational_to_string(mag) + "*" + mono;
    }
  }
  return out;
}

UniLaurent gcd(const UniLaurent& a, const UniLaurent& b) {
  Dense x = a.coeffs();
  Dense y = b.coeffs();
  trim(x);
  trim(y);
  while (!y.empty()) {
    Dense q, r;
    divmod(x, y, q, r);
    x = std::move(y);
    y = std::move(r);
  }
  return UniLaurent::from_dense(0, make_monic(std::move(x)));
}

TFraction::TFraction(UniLaurent num) : num_(std::move(num)), den_(1L) {}

TFraction::TFraction(UniLaurent num, UniLaurent den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("TFraction: zero denominator");
  if (num_.is_zero()) {
    den_ = UniLaurent(1L);
    return;
  }
  const UniLaurent g = gcd(num_, den_);
  if (g.high() > 0) {
    num_ = num_.divided_by(g);
    den_ = den_.divided_by(g);
  }
  const int shift = -den_.low();
  num_ = num_.shifted(shift);
  den_ = den_.shifted(shift);
  const Rational lead = den_.leading();
  if (lead != 1) {
    const Rational inv = 1 / lead;
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

TFraction operator+(const TFraction& a, const TFraction& b) {
  if (a.den_ == b.den_) return TFraction(a.num_ + b.num_, a.den_);
  return TFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

TFraction operator-(const TFraction& a, const TFraction& b) {
  if (a.den_ == b.den_) return TFraction(a.num_ - b.num_, a.den_);
  return TFraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

TFraction operator*(const TFraction& a, const TFraction& b) {
  return TFraction(a.num_ * b.num_, a.den_ * b.den_);
}

std::string TFraction::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

UniLaurent specialize_slN(const LaurentPoly& p, int N) {
  if (N < 2) throw std::invalid_argument("specialize_slN: N must be at least 2");
  UniLaurent out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Exponent e = p.exponent(i);
    const long t = -static_cast<long>(e.x) - static_cast<long>(N) * N * e.v + static_cast<long>(N) * e.s;
    out += UniLaurent::monomial(static_cast<int>(t), p.coeff(i));
  }
  return out;
}

TFraction specialize_slN(const Scalar& p, int N) {
  UniLaurent num = specialize_slN(p.numerator(), N);
  UniLaurent den = specialize_slN(p.denominator(), N);
  if (den.is_zero()) {
    throw SpecializationError("specialize_slN: denominator " + p.denominator().to_string() +
                              " vanishes at N = " + std::to_string(N));
  }
  return TFraction(std::move(num), std::move(den));
}

namespace {

// Coefficients of h^0..h^order in u(e^{h/(2N)}).
std::vector<Rational> exp_series(const UniLaurent& u, int N, int order) {
  std::vector<Rational> out(static_cast<std::size_t>(order) + 1, Rational(0));
  for (int e = u.low(); e <= u.high(); ++e) {
    const Rational c = u.coefficient(e);
    if (c == 0) continue;
    Rational rate(e, 2 * N);
    rate.canonicalize();
    Rational term = c;  // c * rate^j / j!
    for (int j = 0; j <= order; ++j) {
      out[static_cast<std::size_t>(j)] += term;
      term = term * rate / (j + 1);
    }
  }
  return out;
}

}  // namespace

std::vector<Rational> h_expand(const TFraction& f, int N, int order) {
  if (order < 0) throw std::invalid_argument("h_expand: negative order");
  const UniLaurent& den = f.denominator();
  const int probe = std::max(order, static_cast<int>(den.coeffs().size()));
  const std::vector<Rational> d = exp_series(den, N, probe);
  if (d[0] == 0) {
    int vanishing = 0;
    while (vanishing <= probe && d[static_cast<std::size_t>(vanishing)] == 0) ++vanishing;
    throw SpecializationError("h_expand: pole at h = 0, denominator vanishes to order " +
                              std::to_string(vanishing));
  }
  const std::vector<Rational> n = exp_series(f.numerator(), N, order);
  std::vector<Rational> q(static_cast<std::size_t>(order) + 1, Rational(0));
  for (int j = 0; j <= order; ++j) {
    Rational acc = n[static_cast<std::size_t>(j)];
    for (int i = 1; i <= j; ++i) acc -= d[static_cast<std::size_t>(i)] * q[static_cast<std::size_t>(j - i)];
    q[static_cast<std::size_t>(j)] = acc / d[0];
  }
  return q;
}

}  // namespace skein

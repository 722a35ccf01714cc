#include "skein/scalar.hpp"

#include <stdexcept>

#include "skein/expression.hpp"
#include "skein/univariate.hpp"

namespace skein {

namespace {

UniLaurent s_part(const LaurentPoly& p, std::size_t begin, std::size_t end) {
  UniLaurent u;
  for (std::size_t i = begin; i < end; ++i) u += UniLaurent::monomial(p.exponent(i).s, p.coeff(i));
  return u;
}

void append_s_part(std::vector<LaurentPoly::Term>& out, const UniLaurent& u, int x, int v) {
  for (int e = u.low(); e <= u.high(); ++e) {
    const Rational c = u.coefficient(e);
    if (c != 0) out.push_back(LaurentPoly::Term{LaurentPoly::pack(Exponent{x, v, e}), c});
  }
}

// Ranges of terms sharing the same (x, v) exponents. Terms are sorted
// lexicographically, so each such slice is contiguous.
template <class F>
void for_each_xv_slice(const LaurentPoly& p, F&& f) {
  std::size_t begin = 0;
  while (begin < p.size()) {
    const Exponent head = p.exponent(begin);
    std::size_t end = begin + 1;
    while (end < p.size()) {
      const Exponent e = p.exponent(end);
      if (e.x != head.x || e.v != head.v) break;
      ++end;
    }
    f(begin, end, head.x, head.v);
    begin = end;
  }
}

}  // namespace

Scalar::Scalar(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void Scalar::normalize() {
  if (den_.is_zero()) throw std::domain_error("Scalar: zero denominator");
  if (num_.is_zero()) {
    den_ = LaurentPoly(1L);
    return;
  }
  if (den_.is_one()) return;

  const Exponent m = den_.min_exponent();
  if (m != Exponent{}) {
    const Exponent inv{-m.x, -m.v, -m.s};
    den_ = den_.shifted(inv);
    num_ = num_.shifted(inv);
  }
  if (const Rational lead = den_.leading().coeff; lead != 1) {
    const Rational inv = 1 / lead;
    den_ *= inv;
    num_ *= inv;
  }
  if (den_.is_constant() || !den_.only_s()) return;

  const UniLaurent d = s_part(den_, 0, den_.size());
  UniLaurent g = d;
  for_each_xv_slice(num_, [&](std::size_t b, std::size_t e, int, int) {
    if (g.high() > 0) g = gcd(g, s_part(num_, b, e));
  });
  if (g.high() <= 0) return;

  std::vector<LaurentPoly::Term> num_terms;
  for_each_xv_slice(num_, [&](std::size_t b, std::size_t e, int x, int v) {
    append_s_part(num_terms, s_part(num_, b, e).divided_by(g), x, v);
  });
  std::vector<LaurentPoly::Term> den_terms;
  append_s_part(den_terms, d.divided_by(g), 0, 0);
  num_ = LaurentPoly::from_terms(std::move(num_terms));
  den_ = LaurentPoly::from_terms(std::move(den_terms));
  // g is monic with nonzero constant term, so den_ keeps lowest exponent 0
  // and leading coefficient 1.
}

Scalar Scalar::operator-() const { return Scalar(-num_, den_, Reduced{}); }

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
    if (!den_.is_one()) normalize();
    else if (num_.is_zero()) den_ = LaurentPoly(1L);
    return *this;
  }
  if (den_.is_one()) {
    num_ = num_ * rhs.den_ + rhs.num_;
    den_ = rhs.den_;
  } else if (rhs.den_.is_one()) {
    num_ += rhs.num_ * den_;
  } else if (den_.only_s() && rhs.den_.only_s()) {
    const UniLaurent a = s_part(den_, 0, den_.size());
    const UniLaurent b = s_part(rhs.den_, 0, rhs.den_.size());
    const UniLaurent g = gcd(a, b);
    auto to_poly = [](const UniLaurent& u) {
      std::vector<LaurentPoly::Term> t;
      append_s_part(t, u, 0, 0);
      return LaurentPoly::from_terms(std::move(t));
    };
    const LaurentPoly a_over_g = to_poly(a.divided_by(g));
    const LaurentPoly b_over_g = to_poly(b.divided_by(g));
    num_ = num_ * b_over_g + rhs.num_ * a_over_g;
    den_ = den_ * b_over_g;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ = den_ * rhs.den_;
  }
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = Scalar();
  num_ = num_ * rhs.num_;
  if (den_.is_one() && rhs.den_.is_one()) return *this;
  den_ = den_ * rhs.den_;
  normalize();
  return *this;
}

Scalar& Scalar::operator*=(const LaurentPoly& rhs) {
  num_ = num_ * rhs;
  if (num_.is_zero()) {
    den_ = LaurentPoly(1L);
  } else if (!den_.is_one()) {
    normalize();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Scalar: division by zero");
  num_ = num_ * rhs.den_;
  den_ = den_ * rhs.num_;
  normalize();
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.den_.is_one() && b.den_.is_one()) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
  return Scalar(den_, num_);
}

Scalar Scalar::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar result(1L);
  Scalar base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

std::string Scalar::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::string n = num_.to_string();
  if (num_.size() > 1) n = "(" + n + ")";
  return n + "/(" + den_.to_string() + ")";
}

namespace {

struct ScalarTraits {
  static constexpr bool kPartitionLiterals = false;
  static Scalar from_rational(const Rational& q) { return Scalar(q); }
  static std::optional<Scalar> atom(std::string_view id) {
    if (id == "x") return Scalar(var_x());
    if (id == "v") return Scalar(var_v());
    if (id == "s") return Scalar(var_s());
    if (id == "z") return Scalar(z_poly());
    if (id == "delta") return delta();
    return std::nullopt;
  }
  static std::optional<Scalar> divide(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) return std::nullopt;
    return a / b;
  }
  static std::optional<Scalar> power(const Scalar& a, int k) {
    if (k < 0 && a.is_zero()) return std::nullopt;
    return a.pow(k);
  }
  static Scalar partition(const std::vector<int>&) { return Scalar(); }
};

}  // namespace

Scalar Scalar::parse(std::string_view text) { return ExpressionParser<ScalarTraits>(text).parse(); }

Scalar delta() { return Scalar(var_v(-1) - var_v(1), z_poly()); }

}  // namespace skein

namespace skein {

LaurentPoly bar(const LaurentPoly& p) {
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Exponent e = p.exponent(i);
    terms.push_back({LaurentPoly::pack({-e.x, -e.v, -e.s}), p.coeff(i)});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

Scalar bar(const Scalar& p) { return Scalar(bar(p.numerator()), bar(p.denominator())); }

}  // namespace skein

#include "skein/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace skein {

namespace {

constexpr std::uint64_t kFieldMask = (std::uint64_t{1} << LaurentPoly::kExponentBits) - 1;
constexpr int kVShift = LaurentPoly::kExponentBits;
constexpr int kXShift = 2 * LaurentPoly::kExponentBits;

const std::uint64_t kZeroKey = LaurentPoly::pack(Exponent{});

void check_range(int e) {
  if (e > LaurentPoly::kMaxExponent || e < -LaurentPoly::kMaxExponent) {
    throw std::overflow_error("Laurent exponent out of range: " + std::to_string(e));
  }
}

// Sum keys componentwise (both operands carry the bias).
std::uint64_t add_keys(std::uint64_t a, std::uint64_t b) { return a + b - kZeroKey; }

}  // namespace

std::uint64_t LaurentPoly::pack(Exponent e) {
  check_range(e.x);
  check_range(e.v);
  check_range(e.s);
  return (static_cast<std::uint64_t>(e.x + kExponentBias) << kXShift) |
         (static_cast<std::uint64_t>(e.v + kExponentBias) << kVShift) |
         static_cast<std::uint64_t>(e.s + kExponentBias);
}

Exponent LaurentPoly::unpack(std::uint64_t key) {
  return Exponent{static_cast<int>((key >> kXShift) & kFieldMask) - kExponentBias,
                  static_cast<int>((key >> kVShift) & kFieldMask) - kExponentBias,
                  static_cast<int>(key & kFieldMask) - kExponentBias};
}

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.push_back(Term{kZeroKey, Rational(constant)});
}

LaurentPoly::LaurentPoly(const Rational& constant) {
  if (constant != 0) terms_.push_back(Term{kZeroKey, constant});
}

LaurentPoly LaurentPoly::monomial(Exponent e, const Rational& coeff) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.push_back(Term{pack(e), coeff});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.key < b.key; });
  LaurentPoly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().key == t.key) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].key == kZeroKey && terms_[0].coeff == 1;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].key == kZeroKey);
}

Rational LaurentPoly::coefficient(Exponent e) const {
  const auto key = pack(e);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, std::uint64_t k) { return t.key < k; });
  if (it != terms_.end() && it->key == key) return it->coeff;
  return Rational(0);
}

Exponent LaurentPoly::min_exponent() const {
  if (terms_.empty()) return Exponent{};
  Exponent m = unpack(terms_.front().key);
  for (const auto& t : terms_) {
    const Exponent e = unpack(t.key);
    m.x = std::min(m.x, e.x);
    m.v = std::min(m.v, e.v);
    m.s = std::min(m.s, e.s);
  }
  return m;
}

Exponent LaurentPoly::max_exponent() const {
  if (terms_.empty()) return Exponent{};
  Exponent m = unpack(terms_.front().key);
  for (const auto& t : terms_) {
    const Exponent e = unpack(t.key);
    m.x = std::max(m.x, e.x);
    m.v = std::max(m.v, e.v);
    m.s = std::max(m.s, e.s);
  }
  return m;
}

bool LaurentPoly::only_s() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) {
    const Exponent e = unpack(t.key);
    return e.x == 0 && e.v == 0;
  });
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

void LaurentPoly::merge_add(const LaurentPoly& rhs, bool subtract) {
  if (rhs.terms_.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->key < b->key)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->key < a->key) {
      out.push_back(Term{b->key, subtract ? Rational(-b->coeff) : b->coeff});
      ++b;
    } else {
      Rational c = subtract ? Rational(a->coeff - b->coeff) : Rational(a->coeff + b->coeff);
      if (c != 0) out.push_back(Term{a->key, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  merge_add(rhs, false);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  merge_add(rhs, true);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else if (c != 1) {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly{};
  if (b.is_monomial()) {
    LaurentPoly r = a.shifted(LaurentPoly::unpack(b.terms_[0].key));
    return r *= b.terms_[0].coeff;
  }
  if (a.is_monomial()) {
    LaurentPoly r = b.shifted(LaurentPoly::unpack(a.terms_[0].key));
    return r *= a.terms_[0].coeff;
  }
  std::vector<LaurentPoly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      prod.push_back(LaurentPoly::Term{add_keys(ta.key, tb.key), ta.coeff * tb.coeff});
    }
  }
  return LaurentPoly::from_terms(std::move(prod));
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].key != b.terms_[i].key || a.terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

LaurentPoly LaurentPoly::shifted(Exponent e) const {
  if (e == Exponent{}) return *this;
  // Validate the extreme exponents once; the packed sum is then exact.
  const Exponent lo = min_exponent();
  const Exponent hi = max_exponent();
  check_range(lo.x + e.x);
  check_range(hi.x + e.x);
  check_range(lo.v + e.v);
  check_range(hi.v + e.v);
  check_range(lo.s + e.s);
  check_range(hi.s + e.s);
  const std::uint64_t delta = pack(e);
  LaurentPoly r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{add_keys(t.key, delta), t.coeff});
  return r;
}

LaurentPoly LaurentPoly::pow(int k) const {
  if (k < 0) {
    if (!is_monomial()) throw std::domain_error("negative power of a non-monomial Laurent polynomial");
    const Exponent e = unpack(terms_[0].key);
    Rational c = 1;
    for (int i = 0; i < -k; ++i) c /= terms_[0].coeff;
    return monomial(Exponent{e.x * k, e.v * k, e.s * k}, c);
  }
  LaurentPoly result(1L);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

namespace {

std::string monomial_text(const Exponent& e) {
  std::string out;
  auto factor = [&out](const char* name, int k) {
    if (k == 0) return;
    if (!out.empty()) out += '*';
    out += name;
    if (k != 1) out += '^' + std::to_string(k);
  };
  factor("x", e.x);
  factor("v", e.v);
  factor("s", e.s);
  return out;
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const bool negative = it->coeff < 0;
    const Rational mag = abs(it->coeff);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = monomial_text(unpack(it->key));
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

LaurentPoly z_poly() { return var_s(1) - var_s(-1); }

LaurentPoly quantum_int(int i) {
  if (i < 0) throw std::invalid_argument("quantum_int: negative argument");
  std::vector<LaurentPoly::Term> terms;
  for (int j = 0; j < i; ++j) {
    terms.push_back(LaurentPoly::Term{LaurentPoly::pack(Exponent{0, 0, i - 1 - 2 * j}), Rational(1)});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly quantum_factorial(int i) {
  if (i < 0) throw std::invalid_argument("quantum_factorial: negative argument");
  LaurentPoly r(1L);
  for (int j = 2; j <= i; ++j) r = r * quantum_int(j);
  return r;
}

}  // namespace skein

#pragma once

#include <map>

#include "skein/scalar.hpp"

namespace skein {

// Finite formal sum of keys with Scalar coefficients; zero coefficients are
// never stored. `Derived` adds the ring structure of its basis.
template <class Derived, class Key>
class LinearCombination {
 public:
  using Map = std::map<Key, Scalar>;

  LinearCombination() = default;

  static Derived basis(const Key& key, const Scalar& coeff = Scalar(1L)) {
    Derived d;
    d.add_term(key, coeff);
    return d;
  }

  const Map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Scalar coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar() : it->second;
  }

  void add_term(const Key& key, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Derived& operator+=(const Derived& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_term(k, c);
    return self();
  }
  Derived& operator-=(const Derived& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
    return self();
  }
  Derived& operator*=(const Scalar& c) {
    if (c.is_zero()) {
      terms_.clear();
    } else if (!c.is_one()) {
      for (auto& [k, v] : terms_) v *= c;
    }
    return self();
  }

  Derived operator-() const {
    Derived d = self();
    for (auto& [k, v] : d.terms_) v = -v;
    return d;
  }

  friend Derived operator+(Derived a, const Derived& b) { return a += b; }
  friend Derived operator-(Derived a, const Derived& b) { return a -= b; }
  friend Derived operator*(const Scalar& c, Derived a) { return a *= c; }
  friend Derived operator*(Derived a, const Scalar& c) { return a *= c; }

  friend bool operator==(const Derived& a, const Derived& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib) {
      if (!(ia->first == ib->first) || !(ia->second == ib->second)) return false;
    }
    return true;
  }

 protected:
  Derived& self() { return static_cast<Derived&>(*this); }
  const Derived& self() const { return static_cast<const Derived&>(*this); }

  Map terms_;
};

}  // namespace skein

#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "skein/scalar.hpp"

namespace skein {

// Truncated formal power series sum_d coeff[d] X^d over CPoly or
// AnnulusElement coefficients. Products truncate at the smaller order.
template <class Ring>
class GradedSeries {
 public:
  GradedSeries() = default;
  explicit GradedSeries(std::vector<Ring> coeffs) : coeffs_(std::move(coeffs)) {}

  // Highest stored power of X.
  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Ring& operator[](int d) const { return coeffs_.at(static_cast<std::size_t>(d)); }
  const std::vector<Ring>& coefficients() const noexcept { return coeffs_; }

  // f(cX): the coefficient of X^d is scaled by c^d.
  GradedSeries scaled(const Scalar& c) const {
    GradedSeries out = *this;
    Scalar power(1L);
    for (auto& r : out.coeffs_) {
      r *= power;
      power *= c;
    }
    return out;
  }

  GradedSeries operator-() const {
    GradedSeries out = *this;
    for (auto& r : out.coeffs_) r = -r;
    return out;
  }

  friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
    const int order = std::min(a.order(), b.order());
    std::vector<Ring> out(static_cast<std::size_t>(order + 1));
    for (int i = 0; i <= order; ++i) {
      for (int j = 0; i + j <= order; ++j) {
        out[static_cast<std::size_t>(i + j)] += a[i] * b[j];
      }
    }
    return GradedSeries(std::move(out));
  }

  template <class F>
  auto map(F f) const {
    using Out = decltype(f(coeffs_.front()));
    std::vector<Out> out;
    out.reserve(coeffs_.size());
    for (const auto& r : coeffs_) out.push_back(f(r));
    return GradedSeries<Out>(std::move(out));
  }

  // First index where the series differ, or -1 when equal through the
  // common order.
  friend int first_difference(const GradedSeries& a, const GradedSeries& b) {
    const int order = std::min(a.order(), b.order());
    for (int d = 0; d <= order; ++d) {
      if (!(a[d] == b[d])) return d;
    }
    return -1;
  }

 private:
  std::vector<Ring> coeffs_;
};

}  // namespace skein

#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "skein/annulus.hpp"
#include "skein/partition.hpp"
#include "skein/scalar.hpp"

namespace oracle {

using skein::LaurentPoly;
using skein::Partition;
using skein::Scalar;

inline Scalar S(const std::string& text) { return Scalar::parse(text); }

inline Scalar X(int k = 1) { return Scalar(skein::var_x(k)); }
inline Scalar V(int k = 1) { return Scalar(skein::var_v(k)); }
inline Scalar Sv(int k = 1) { return Scalar(skein::var_s(k)); }
inline Scalar Z() { return Sv(1) - Sv(-1); }

// [i] as the quotient (s^i - s^-i)/(s - s^-1), never expanded.
inline Scalar qint_fraction(int i) { return (Sv(i) - Sv(-i)) / Z(); }

inline skein::AnnulusElement A(int m) { return skein::AnnulusElement::A(m); }

inline LaurentPoly random_laurent(std::mt19937& rng, int terms = 4, int span = 3) {
  std::uniform_int_distribution<int> e(-span, span);
  std::uniform_int_distribution<int> c(-5, 5);
  LaurentPoly p;
  for (int i = 0; i < terms; ++i) p += LaurentPoly::monomial(e(rng), e(rng), e(rng), c(rng));
  return p;
}

inline Scalar random_scalar(std::mt19937& rng) {
  LaurentPoly den = random_laurent(rng, 2, 2);
  while (den.is_zero()) den = random_laurent(rng, 2, 2);
  return Scalar(random_laurent(rng), den);
}

// All partitions fitting inside nothing in particular: every partition of n.
inline std::vector<std::vector<int>> partitions_list(int n, int max_part = -1) {
  if (max_part < 0) max_part = n;
  if (n == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int first = std::min(n, max_part); first >= 1; --first) {
    for (auto rest : partitions_list(n - first, first)) {
      rest.insert(rest.begin(), first);
      out.push_back(rest);
    }
  }
  return out;
}

// Littlewood-Richardson coefficients by counting LR tableaux: semistandard
// fillings of nu/lambda with content mu whose reverse reading word is a
// lattice word.
inline std::map<Partition, long> lr_classical(const Partition& lambda, const Partition& mu) {
  std::map<Partition, long> out;
  const int n = lambda.size() + mu.size();
  const auto& lp = lambda.parts();
  const auto& mp = mu.parts();
  for (const auto& nu : partitions_list(n)) {
    if (nu.size() < lp.size()) continue;
    bool contains = true;
    for (std::size_t i = 0; i < lp.size(); ++i) contains = contains && nu[i] >= lp[i];
    if (!contains) continue;
    // Cells of the skew shape in reverse reading order: rows top to bottom,
    // each row right to left.
    std::vector<std::pair<int, int>> cells;
    for (std::size_t i = 0; i < nu.size(); ++i) {
      const int start = i < lp.size() ? lp[i] : 0;
      for (int j = nu[i] - 1; j >= start; --j) cells.emplace_back(static_cast<int>(i), j);
    }
    std::map<std::pair<int, int>, int> fill;
    std::vector<int> used(mp.size() + 1, 0);
    long count = 0;
    std::function<void(std::size_t)> go = [&](std::size_t k) {
      if (k == cells.size()) {
        ++count;
        return;
      }
      const auto [i, j] = cells[k];
      for (int val = 1; val <= static_cast<int>(mp.size()); ++val) {
        if (used[static_cast<std::size_t>(val)] >= mp[static_cast<std::size_t>(val - 1)]) continue;
        if (val > 1 && used[static_cast<std::size_t>(val)] + 1 > used[static_cast<std::size_t>(val - 1)]) continue;
        // Row weakly increasing: the cell to the right was filled before.
        auto right = fill.find({i, j + 1});
        if (right != fill.end() && right->second < val) continue;
        auto above = fill.find({i - 1, j});
        if (above != fill.end() && above->second >= val) continue;
        fill[{i, j}] = val;
        ++used[static_cast<std::size_t>(val)];
        go(k + 1);
        --used[static_cast<std::size_t>(val)];
        fill.erase({i, j});
      }
    };
    go(0);
    if (count) out[Partition(nu)] = count;
  }
  return out;
}

}  // namespace oracle

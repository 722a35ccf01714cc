#include "skein/permutation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace skein {

Permutation::Permutation(int n) : images_(static_cast<std::size_t>(n)) {
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("Permutation: images are not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::from_one_based(const std::vector<int>& images) {
  std::vector<int> zero_based(images.size());
  std::transform(images.begin(), images.end(), zero_based.begin(), [](int v) { return v - 1; });
  return Permutation(std::move(zero_based));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i) {
    if (images_[static_cast<std::size_t>(i)] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Permutation: size mismatch");
  Permutation p;
  p.images_.resize(a.images_.size());
  for (int i = 0; i < a.size(); ++i) p.images_[static_cast<std::size_t>(i)] = a(b(i));
  return p;
}

Permutation Permutation::direct_sum(const Permutation& b) const {
  Permutation p;
  p.images_ = images_;
  for (int v : b.images_) p.images_.push_back(v + size());
  return p;
}

int Permutation::inversions() const {
  int count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    for (std::size_t j = i + 1; j < images_.size(); ++j) {
      if (images_[i] > images_[j]) ++count;
    }
  }
  return count;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (int i = 0; i < size(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = (*this)(j)) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (int i = 0; i < size(); ++i) {
    if (seen[static_cast<std::size_t>(i)] || (*this)(i) == i) continue;
    out += '(';
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = (*this)(j)) {
      seen[static_cast<std::size_t>(j)] = true;
      if (j != i) out += ' ';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace skein

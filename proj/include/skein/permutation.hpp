#pragma once

#include <compare>
#include <string>
#include <vector>

namespace skein {

// Permutation of {0, ..., n-1} in one-line notation: images()[i] = pi(i).
// Text and cycle forms use 1-based labels, matching the tableau numbering.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n);  // identity
  // Throws std::invalid_argument unless `images` is a bijection of 0..n-1.
  explicit Permutation(std::vector<int> images);
  // From 1-based images.
  static Permutation from_one_based(const std::vector<int>& images);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  // (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  // Juxtaposition: b acts on the strands after a's.
  Permutation direct_sum(const Permutation& b) const;

  int inversions() const;
  // Cycle lengths in decreasing order (fixed points included).
  std::vector<int> cycle_type() const;
  // Cycle notation with 1-based labels, fixed points omitted: "(2 4 7 3 6 5)".
  std::string cycle_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

}  // namespace skein

#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skein/laurent.hpp"
#include "skein/permutation.hpp"

namespace skein {

// Young diagram with weakly decreasing positive rows. The empty partition is
// the diagram (0). Cells are (row, column), both 1-based.
class Partition {
 public:
  Partition() = default;
  // Trailing zeros are dropped; throws std::invalid_argument on increasing
  // or negative parts.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  // mu_{k,l}: first column of k cells, first row of l cells, k + l - 1 cells.
  static Partition hook(int k, int l);
  static Partition column(int k);
  static Partition row(int l);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int rows() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const noexcept { return size_; }
  bool empty() const noexcept { return parts_.empty(); }
  // Row length, 1-based; 0 past the last row.
  int row_length(int i) const { return i >= 1 && i <= rows() ? parts_[static_cast<std::size_t>(i - 1)] : 0; }

  Partition transpose() const;
  int hook_length(int i, int j) const;
  static int content(int i, int j) { return j - i; }
  // Cells in row-major order; position k in the vector is tableau number k+1.
  std::vector<std::pair<int, int>> cells() const;
  // Number of cell (i, j) in the row-major tableau T(lambda), 1-based.
  int tableau_number(int i, int j) const;

  // Multiset union of the parts (the monomial product A_lambda A_mu).
  Partition merged(const Partition& other) const;

  // If this is a hook mu_{k,l}, return (k, l).
  std::optional<std::pair<int, int>> as_hook() const;

  // Comma-joined parts ("4,2,1"); empty string for (0).
  std::string to_string() const;
  // Accepts "4,2,1", "" or "0" for the empty partition. Throws ParseError.
  static Partition parse(std::string_view text);

  // Ordered by size, then lexicographically on the parts.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// All partitions of n in decreasing lexicographic order.
std::vector<Partition> partitions_of(int n);

// pi_lambda: cell i of T(lambda) is carried by transposition to cell
// pi_lambda(i) of T(lambda^vee). Both tableaux are numbered row by row.
Permutation pi_permutation(const Partition& lambda);

using PartitionCounts = std::map<Partition, long>;

// Littlewood-Richardson product by strict mu-expansions of lambda.
PartitionCounts lr_mult(const Partition& lambda, const Partition& mu);

// alpha_lambda = prod over cells of s^{content} [hook length].
LaurentPoly alpha(const Partition& lambda);
// Closed form for the hook mu_{k,l}:
// s^{(l(l-1) - k(k-1))/2} [k+l-1] [k-1]! [l-1]!.
LaurentPoly hook_alpha(int k, int l);

// n_lambda = sum lambda_i^2 - sum (lambda^vee_j)^2.
int framing_exponent(const Partition& lambda);
// f_lambda = x^{|lambda|^2} v^{-|lambda|} s^{n_lambda}.
LaurentPoly framing_factor(const Partition& lambda);
// f_{mu_{k,l}}^{1/m} = x^m v^-1 s^{m-2k+1} with m = k + l - 1.
LaurentPoly framing_root_hook(int k, int l);

}  // namespace skein

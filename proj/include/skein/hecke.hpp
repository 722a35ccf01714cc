#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "skein/partition.hpp"
#include "skein/permutation.hpp"
#include "skein/scalar.hpp"

namespace skein {

// Braid generators with 1-based index and sign; strand_count >= index + 1.
struct BraidLetter {
  int index;
  int sign;  // +1 or -1
  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

class BraidWord {
 public:
  BraidWord() = default;
  // Throws std::invalid_argument on out-of-range letters.
  BraidWord(int strands, std::vector<BraidLetter> letters);

  // "1 2 -1". With strands <= 0 the count is max |index| + 1 (1 if empty).
  // Throws ParseError.
  static BraidWord parse(std::string_view text, int strands = 0);

  int strands() const noexcept { return strands_; }
  const std::vector<BraidLetter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }
  int writhe() const;

  // Reversed with every sign flipped: the inverse braid.
  BraidWord inverse() const;
  BraidWord operator*(const BraidWord& rhs) const;  // concatenation, rhs below
  BraidWord shifted(int offset, int strands) const;
  BraidWord power(int p) const;  // p < 0 uses the inverse

  std::string to_string() const;
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_ = 1;
  std::vector<BraidLetter> letters_;
};

// Dense tables for S_n shared by every element on n strands.
//
// Generator i (1-based) acts on a basis label pi by swapping the values i-1
// and i of its one-line notation; this is the label of omega_pi * sigma_i.
// The canonical positive word of pi is built along a prefix tree: the
// parent of pi is s_i pi for the smallest i whose value i precedes i-1.
class SymmetricGroup {
 public:
  static constexpr int kMaxStrands = 8;

  // Thread-safe, cached. Throws std::length_error above kMaxStrands.
  static const SymmetricGroup& get(int n);

  int n() const noexcept { return n_; }
  std::size_t order() const noexcept { return perms_.size(); }
  const Permutation& perm(std::size_t idx) const { return perms_[idx]; }
  std::size_t index(const Permutation& p) const;
  int length(std::size_t idx) const { return length_[idx]; }
  // Label of s_i pi, i in 1..n-1.
  std::size_t swap(std::size_t idx, int i) const { return swap_[idx * stride() + static_cast<std::size_t>(i - 1)]; }
  // Whether swapping increases the length.
  bool ascends(std::size_t idx, int i) const { return ascends_[idx * stride() + static_cast<std::size_t>(i - 1)]; }
  // Labels lo with lo ascending under generator i.
  const std::vector<std::size_t>& ascending_pairs(int i) const { return pairs_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& word(std::size_t idx) const { return words_[idx]; }
  const std::vector<std::size_t>& children(std::size_t idx) const { return children_[idx]; }
  std::size_t parent(std::size_t idx) const { return parent_[idx]; }
  std::size_t identity() const noexcept { return identity_; }

 private:
  explicit SymmetricGroup(int n);
  std::size_t stride() const noexcept { return n_ > 1 ? static_cast<std::size_t>(n_ - 1) : 1; }

  int n_;
  std::vector<Permutation> perms_;
  std::vector<int> length_;
  std::vector<std::size_t> swap_;
  std::vector<char> ascends_;
  std::vector<std::vector<std::size_t>> pairs_;
  std::vector<std::vector<int>> words_;
  std::vector<std::vector<std::size_t>> children_;
  std::vector<std::size_t> parent_;
  std::size_t identity_ = 0;
};

// Element of H_n in the positive permutation braid basis, stored densely
// over the labels of SymmetricGroup::get(n).
class HeckeElement {
 public:
  HeckeElement() : HeckeElement(1) {}
  explicit HeckeElement(int strands);  // zero

  static HeckeElement identity(int strands);
  static HeckeElement basis(const Permutation& pi, const Scalar& c = Scalar(1L));
  static HeckeElement from_word(const BraidWord& w);

  int strands() const noexcept { return n_; }
  const SymmetricGroup& group() const { return *group_; }
  const std::vector<Scalar>& dense() const noexcept { return coeffs_; }
  Scalar coefficient(const Permutation& pi) const;
  bool is_zero() const;
  std::size_t support_size() const;
  // Nonzero terms in label order.
  std::vector<std::pair<Permutation, Scalar>> terms() const;

  // Right multiplication by a braid word.
  HeckeElement times_word(const BraidWord& w) const;
  HeckeElement times_word_serial(const BraidWord& w) const;

  HeckeElement& operator+=(const HeckeElement& rhs);
  HeckeElement& operator-=(const HeckeElement& rhs);
  HeckeElement& operator*=(const Scalar& c);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(HeckeElement a, const Scalar& c) { return a *= c; }
  friend HeckeElement operator*(const Scalar& c, HeckeElement a) { return a *= c; }
  friend bool operator==(const HeckeElement& a, const HeckeElement& b);

  std::string to_string() const;

 private:
  friend HeckeElement tensor(const HeckeElement& a, const HeckeElement& b);
  friend HeckeElement length_weighted_sum(int n, const Scalar& q);
  friend HeckeElement mul_tree(const HeckeElement& a, const HeckeElement& b, bool parallel);
  void apply_letter(BraidLetter letter, bool parallel);

  int n_;
  const SymmetricGroup* group_;
  std::vector<Scalar> coeffs_;
};

// Product in H_n. Throws std::invalid_argument on a strand-count mismatch.
HeckeElement mul(const HeckeElement& a, const HeckeElement& b);
// The same prefix-tree product with every kernel run on one thread.
HeckeElement mul_serial(const HeckeElement& a, const HeckeElement& b);
// Serial basis-by-basis product, kept as the reference for mul.
HeckeElement mul_reference(const HeckeElement& a, const HeckeElement& b);
HeckeElement tensor(const HeckeElement& a, const HeckeElement& b);

// Positive word of omega_pi.
BraidWord ppb_word(const Permutation& pi);

// a_n = sum (x^-1 s)^{l(pi)} omega_pi,  b_n = sum (-x^-1 s^-1)^{l(pi)} omega_pi.
HeckeElement a_element(int n);
HeckeElement b_element(int n);
// E_lambda(a) = a_{lambda_1} (x) a_{lambda_2} (x) ...; likewise for b.
HeckeElement row_tensor_a(const Partition& lambda);
HeckeElement row_tensor_b(const Partition& lambda);
// e_lambda = E_lambda(a) omega_{pi_lambda} E_{lambda^vee}(b) omega_{pi_lambda}^{-1}.
HeckeElement e_lambda(const Partition& lambda);

// Each strand replaced by k parallel strands.
BraidWord cable_word(const BraidWord& w, int k);
// Cable by |lambda| and place e_lambda / alpha_lambda on every cable.
HeckeElement decorate(const BraidWord& w, const Partition& lambda);

}  // namespace skein

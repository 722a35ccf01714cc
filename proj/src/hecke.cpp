#include "skein/hecke.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "print_util.hpp"
#include "skein/errors.hpp"

namespace skein {

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters) : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw std::invalid_argument("BraidWord: strand count must be positive");
  for (const auto& l : letters_) {
    if (l.index < 1 || l.index >= strands_) {
      throw std::invalid_argument("BraidWord: generator " + std::to_string(l.index) + " out of range for " +
                                  std::to_string(strands_) + " strands");
    }
    if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("BraidWord: sign must be +1 or -1");
  }
}

BraidWord BraidWord::parse(std::string_view text, int strands) {
  std::vector<BraidLetter> letters;
  std::vector<std::size_t> starts;
  std::size_t i = 0;
  int max_index = 0;
  while (i < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c) || c == ',') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    int sign = 1;
    if (text[i] == '-' || text[i] == '+') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    }
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError(i, "expected a generator index");
    }
    long value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + (text[i] - '0');
      if (value > 1000) throw ParseError(start, "generator index too large");
      ++i;
    }
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != ',') {
      throw ParseError(i, std::string("unexpected character '") + text[i] + "'");
    }
    if (value == 0) throw ParseError(start, "generator index must be nonzero");
    letters.push_back({static_cast<int>(value), sign});
    starts.push_back(start);
    max_index = std::max(max_index, static_cast<int>(value));
  }
  if (strands <= 0) strands = max_index + 1;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (letters[k].index >= strands) {
      throw ParseError(starts[k], "generator " + std::to_string(letters[k].index) + " out of range for " +
                                      std::to_string(strands) + " strands");
    }
  }
  return BraidWord(strands, std::move(letters));
}

int BraidWord::writhe() const {
  int w = 0;
  for (const auto& l : letters_) w += l.sign;
  return w;
}

BraidWord BraidWord::inverse() const {
  std::vector<BraidLetter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l.sign = -l.sign;
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
  if (rhs.strands_ != strands_) throw std::invalid_argument("BraidWord: strand-count mismatch");
  std::vector<BraidLetter> out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::shifted(int offset, int strands) const {
  std::vector<BraidLetter> out = letters_;
  for (auto& l : out) l.index += offset;
  return BraidWord(strands, std::move(out));
}

BraidWord BraidWord::power(int p) const {
  const BraidWord base = p < 0 ? inverse() : *this;
  BraidWord out(strands_, {});
  for (int i = 0; i < std::abs(p); ++i) out = out * base;
  return out;
}

std::string BraidWord::to_string() const {
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ' ';
    if (l.sign < 0) out += '-';
    out += std::to_string(l.index);
  }
  return out;
}

namespace {

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

}  // namespace

SymmetricGroup::SymmetricGroup(int n) : n_(n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  perms_.reserve(factorial(n));
  do {
    perms_.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));

  const std::size_t order = perms_.size();
  const std::size_t gens = n > 1 ? static_cast<std::size_t>(n - 1) : 0;
  length_.resize(order);
  swap_.assign(order * stride(), 0);
  ascends_.assign(order * stride(), 0);
  pairs_.assign(gens, {});
  for (std::size_t idx = 0; idx < order; ++idx) {
    const Permutation& p = perms_[idx];
    length_[idx] = p.inversions();
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) pos[static_cast<std::size_t>(p(k))] = k;
    for (int i = 1; i < n; ++i) {
      std::vector<int> q = p.images();
      std::swap(q[static_cast<std::size_t>(pos[static_cast<std::size_t>(i - 1)])],
                q[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])]);
      const std::size_t slot = idx * stride() + static_cast<std::size_t>(i - 1);
      swap_[slot] = index(Permutation(std::move(q)));
      const bool up = pos[static_cast<std::size_t>(i - 1)] < pos[static_cast<std::size_t>(i)];
      ascends_[slot] = up ? 1 : 0;
      if (up) pairs_[static_cast<std::size_t>(i - 1)].push_back(idx);
    }
  }

  identity_ = 0;
  std::vector<std::size_t> by_length(order);
  std::iota(by_length.begin(), by_length.end(), 0);
  std::stable_sort(by_length.begin(), by_length.end(),
                   [&](std::size_t a, std::size_t b) { return length_[a] < length_[b]; });
  words_.assign(order, {});
  children_.assign(order, {});
  parent_.assign(order, identity_);
  for (std::size_t idx : by_length) {
    if (idx == identity_) continue;
    for (int i = 1; i < n; ++i) {
      if (!ascends(idx, i)) {
        const std::size_t par = swap(idx, i);
        parent_[idx] = par;
        words_[idx] = words_[par];
        words_[idx].push_back(i);
        children_[par].push_back(idx);
        break;
      }
    }
  }
}

std::size_t SymmetricGroup::index(const Permutation& p) const {
  if (p.size() != n_) throw std::invalid_argument("SymmetricGroup::index: wrong size");
  // Lexicographic rank via the Lehmer code.
  std::size_t rank = 0;
  for (int i = 0; i < n_; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n_; ++j) {
      if (p(j) < p(i)) ++smaller;
    }
    rank += static_cast<std::size_t>(smaller) * factorial(n_ - 1 - i);
  }
  return rank;
}

const SymmetricGroup& SymmetricGroup::get(int n) {
  if (n < 1) throw std::invalid_argument("SymmetricGroup: need at least one strand");
  if (n > kMaxStrands) {
    throw std::length_error("SymmetricGroup: " + std::to_string(n) + " strands exceeds the enumeration cap of " +
                            std::to_string(kMaxStrands));
  }
  static std::array<std::unique_ptr<SymmetricGroup>, kMaxStrands + 1> cache;
  static std::array<std::once_flag, kMaxStrands + 1> flags;
  const auto slot = static_cast<std::size_t>(n);
  std::call_once(flags[slot], [&] { cache[slot].reset(new SymmetricGroup(n)); });
  return *cache[slot];
}

HeckeElement::HeckeElement(int strands)
    : n_(strands), group_(&SymmetricGroup::get(strands)), coeffs_(group_->order()) {}

HeckeElement HeckeElement::identity(int strands) {
  HeckeElement h(strands);
  h.coeffs_[h.group_->identity()] = Scalar(1L);
  return h;
}

HeckeElement HeckeElement::basis(const Permutation& pi, const Scalar& c) {
  HeckeElement h(pi.size());
  h.coeffs_[h.group_->index(pi)] = c;
  return h;
}

HeckeElement HeckeElement::from_word(const BraidWord& w) { return identity(w.strands()).times_word(w); }

Scalar HeckeElement::coefficient(const Permutation& pi) const {
  if (pi.size() != n_) return Scalar();
  return coeffs_[group_->index(pi)];
}

bool HeckeElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c.is_zero(); });
}

std::size_t HeckeElement::support_size() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return !c.is_zero(); }));
}

std::vector<std::pair<Permutation, Scalar>> HeckeElement::terms() const {
  std::vector<std::pair<Permutation, Scalar>> out;
  for (std::size_t idx = 0; idx < coeffs_.size(); ++idx) {
    if (!coeffs_[idx].is_zero()) out.emplace_back(group_->perm(idx), coeffs_[idx]);
  }
  return out;
}

void HeckeElement::apply_letter(BraidLetter letter, bool parallel) {
  if (letter.index < 1 || letter.index >= n_) throw std::invalid_argument("HeckeElement: generator out of range");
  static const LaurentPoly x2 = var_x(2);
  static const LaurentPoly xz = var_x() * z_poly();
  static const LaurentPoly xm2 = var_x(-2);
  static const LaurentPoly xmz = var_x(-1) * z_poly();
  const auto& pairs = group_->ascending_pairs(letter.index);
  const auto count = static_cast<long>(pairs.size());
  const bool positive = letter.sign > 0;
  (void)parallel;
#pragma omp parallel for schedule(static) if (parallel && count >= 32)
  for (long k = 0; k < count; ++k) {
    const std::size_t lo = pairs[static_cast<std::size_t>(k)];
    const std::size_t hi = group_->swap(lo, letter.index);
    Scalar& c_lo = coeffs_[lo];
    Scalar& c_hi = coeffs_[hi];
    if (c_lo.is_zero() && c_hi.is_zero()) continue;
    if (positive) {
      Scalar new_lo = c_hi * x2;
      c_hi = c_lo + c_hi * xz;
      c_lo = std::move(new_lo);
    } else {
      Scalar new_hi = c_lo * xm2;
      c_lo = c_hi - c_lo * xmz;
      c_hi = std::move(new_hi);
    }
  }
}

HeckeElement HeckeElement::times_word(const BraidWord& w) const {
  if (w.strands() != n_) throw std::invalid_argument("times_word: strand-count mismatch");
  HeckeElement out = *this;
  for (const auto& l : w.letters()) out.apply_letter(l, true);
  return out;
}

HeckeElement HeckeElement::times_word_serial(const BraidWord& w) const {
  if (w.strands() != n_) throw std::invalid_argument("times_word: strand-count mismatch");
  HeckeElement out = *this;
  for (const auto& l : w.letters()) out.apply_letter(l, false);
  return out;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& rhs) {
  if (rhs.n_ != n_) throw std::invalid_argument("HeckeElement: strand-count mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!rhs.coeffs_[i].is_zero()) coeffs_[i] += rhs.coeffs_[i];
  }
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& rhs) {
  if (rhs.n_ != n_) throw std::invalid_argument("HeckeElement: strand-count mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!rhs.coeffs_[i].is_zero()) coeffs_[i] -= rhs.coeffs_[i];
  }
  return *this;
}

HeckeElement& HeckeElement::operator*=(const Scalar& c) {
  for (auto& v : coeffs_) {
    if (!v.is_zero()) v *= c;
  }
  return *this;
}

bool operator==(const HeckeElement& a, const HeckeElement& b) {
  if (a.n_ != b.n_) return false;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
  }
  return true;
}

std::string HeckeElement::to_string() const {
  std::vector<std::string> names;
  std::vector<std::size_t> live;
  for (std::size_t idx = 0; idx < coeffs_.size(); ++idx) {
    if (coeffs_[idx].is_zero()) continue;
    live.push_back(idx);
  }
  std::stable_sort(live.begin(), live.end(),
                   [&](std::size_t a, std::size_t b) { return group_->length(a) < group_->length(b); });
  std::vector<detail::PrintTerm> out;
  for (std::size_t idx : live) {
    std::string name = "w[";
    const auto& im = group_->perm(idx).images();
    for (std::size_t k = 0; k < im.size(); ++k) {
      if (k) name += ',';
      name += std::to_string(im[k] + 1);
    }
    out.push_back({&coeffs_[idx], name + "]"});
  }
  return detail::format_combination(out);
}

HeckeElement mul_tree(const HeckeElement& a, const HeckeElement& b, bool parallel) {
  if (a.n_ != b.n_) throw std::invalid_argument("mul: strand-count mismatch");
  const SymmetricGroup& g = *a.group_;
  const std::size_t order = g.order();

  // Mark the support of b and its ancestors in the prefix tree.
  std::vector<char> needed(order, 0);
  for (std::size_t idx = 0; idx < order; ++idx) {
    if (b.coeffs_[idx].is_zero()) continue;
    std::size_t cur = idx;
    while (!needed[cur]) {
      needed[cur] = 1;
      if (cur == g.identity()) break;
      cur = g.parent(cur);
    }
  }

  HeckeElement out(a.n_);
  if (!needed[g.identity()]) return out;
  const auto total = static_cast<long>(order);
  (void)parallel;

  // current = a * omega_rho along the path from the root to rho.
  std::function<void(std::size_t, const HeckeElement&)> visit = [&](std::size_t rho, const HeckeElement& current) {
    const Scalar& c = b.coeffs_[rho];
    if (!c.is_zero()) {
#pragma omp parallel for schedule(static) if (parallel && total >= 32)
      for (long k = 0; k < total; ++k) {
        const auto i = static_cast<std::size_t>(k);
        if (!current.coeffs_[i].is_zero()) out.coeffs_[i] += current.coeffs_[i] * c;
      }
    }
    for (std::size_t child : g.children(rho)) {
      if (!needed[child]) continue;
      HeckeElement next = current;
      next.apply_letter({g.word(child).back(), 1}, parallel);
      visit(child, next);
    }
  };
  visit(g.identity(), a);
  return out;
}

HeckeElement mul(const HeckeElement& a, const HeckeElement& b) { return mul_tree(a, b, true); }
HeckeElement mul_serial(const HeckeElement& a, const HeckeElement& b) { return mul_tree(a, b, false); }

HeckeElement mul_reference(const HeckeElement& a, const HeckeElement& b) {
  if (a.strands() != b.strands()) throw std::invalid_argument("mul: strand-count mismatch");
  HeckeElement out(a.strands());
  for (const auto& [pi, ca] : a.terms()) {
    const HeckeElement left = HeckeElement::basis(pi, ca);
    for (const auto& [rho, cb] : b.terms()) {
      out += left.times_word_serial(ppb_word(rho)) * cb;
    }
  }
  return out;
}

HeckeElement tensor(const HeckeElement& a, const HeckeElement& b) {
  HeckeElement out(a.strands() + b.strands());
  const auto& g = *out.group_;
  for (const auto& [pa, ca] : a.terms()) {
    for (const auto& [pb, cb] : b.terms()) out.coeffs_[g.index(pa.direct_sum(pb))] += ca * cb;
  }
  return out;
}

BraidWord ppb_word(const Permutation& pi) {
  const SymmetricGroup& g = SymmetricGroup::get(pi.size());
  std::vector<BraidLetter> letters;
  for (int i : g.word(g.index(pi))) letters.push_back({i, 1});
  return BraidWord(pi.size(), std::move(letters));
}

HeckeElement length_weighted_sum(int n, const Scalar& q) {
  if (n < 1) throw std::invalid_argument("a_n, b_n: n must be positive");
  const SymmetricGroup& g = SymmetricGroup::get(n);
  HeckeElement out(n);
  int max_len = n * (n - 1) / 2;
  std::vector<Scalar> powers{Scalar(1L)};
  for (int l = 1; l <= max_len; ++l) powers.push_back(powers.back() * q);
  for (std::size_t idx = 0; idx < g.order(); ++idx) {
    out.coeffs_[idx] = powers[static_cast<std::size_t>(g.length(idx))];
  }
  return out;
}

HeckeElement a_element(int n) { return length_weighted_sum(n, Scalar(LaurentPoly::monomial(-1, 0, 1))); }
HeckeElement b_element(int n) { return length_weighted_sum(n, Scalar(LaurentPoly::monomial(-1, 0, -1)) * Scalar(-1L)); }

HeckeElement row_tensor_a(const Partition& lambda) {
  if (lambda.empty()) throw std::invalid_argument("E_lambda: empty partition");
  HeckeElement out = a_element(lambda.parts().front());
  for (std::size_t i = 1; i < lambda.parts().size(); ++i) out = tensor(out, a_element(lambda.parts()[i]));
  return out;
}

HeckeElement row_tensor_b(const Partition& lambda) {
  if (lambda.empty()) throw std::invalid_argument("E_lambda: empty partition");
  HeckeElement out = b_element(lambda.parts().front());
  for (std::size_t i = 1; i < lambda.parts().size(); ++i) out = tensor(out, b_element(lambda.parts()[i]));
  return out;
}

HeckeElement e_lambda(const Partition& lambda) {
  if (lambda.empty()) throw std::invalid_argument("e_lambda: |lambda| must be at least 1");
  const BraidWord w = ppb_word(pi_permutation(lambda));
  const HeckeElement left = row_tensor_a(lambda).times_word(w);
  return mul(left, row_tensor_b(lambda.transpose())).times_word(w.inverse());
}

BraidWord cable_word(const BraidWord& w, int k) {
  if (k < 1) throw std::invalid_argument("cable_word: k must be positive");
  std::vector<BraidLetter> out;
  for (const auto& l : w.letters()) {
    const int offset = (l.index - 1) * k;
    // Crossings of the two blocks, swept by anti-diagonals of the k x k grid.
    for (int t = 0; t <= 2 * k - 2; ++t) {
      for (int a = std::min(t, k - 1); a >= std::max(0, t - k + 1); --a) {
        const int b = t - a;
        out.push_back({offset + k + b - a, l.sign});
      }
    }
  }
  return BraidWord(w.strands() * k, std::move(out));
}

HeckeElement decorate(const BraidWord& w, const Partition& lambda) {
  if (lambda.empty()) throw std::invalid_argument("decorate: empty partition");
  const HeckeElement cabled = HeckeElement::from_word(cable_word(w, lambda.size()));
  const HeckeElement idem = e_lambda(lambda) * Scalar(LaurentPoly(1L), alpha(lambda));
  HeckeElement pattern = idem;
  for (int i = 1; i < w.strands(); ++i) pattern = tensor(pattern, idem);
  return mul(cabled, pattern);
}

}  // namespace skein

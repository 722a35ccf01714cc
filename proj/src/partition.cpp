#include "skein/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "skein/errors.hpp"

namespace skein {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::hook(int k, int l) {
  if (k < 1 || l < 1) throw std::invalid_argument("Partition::hook: k and l must be positive");
  std::vector<int> parts(static_cast<std::size_t>(k), 1);
  parts[0] = l;
  return Partition(std::move(parts));
}

Partition Partition::column(int k) { return Partition(std::vector<int>(static_cast<std::size_t>(k), 1)); }

Partition Partition::row(int l) { return l == 0 ? Partition() : Partition({l}); }

Partition Partition::transpose() const {
  std::vector<int> t(parts_.empty() ? 0 : static_cast<std::size_t>(parts_[0]), 0);
  for (int len : parts_) {
    for (int j = 0; j < len; ++j) ++t[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(t));
}

int Partition::hook_length(int i, int j) const {
  const Partition t = transpose();
  return row_length(i) + t.row_length(j) - i - j + 1;
}

std::vector<std::pair<int, int>> Partition::cells() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (int i = 1; i <= rows(); ++i) {
    for (int j = 1; j <= row_length(i); ++j) out.emplace_back(i, j);
  }
  return out;
}

int Partition::tableau_number(int i, int j) const {
  int before = 0;
  for (int r = 1; r < i; ++r) before += row_length(r);
  return before + j;
}

Partition Partition::merged(const Partition& other) const {
  std::vector<int> parts = parts_;
  parts.insert(parts.end(), other.parts_.begin(), other.parts_.end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

std::optional<std::pair<int, int>> Partition::as_hook() const {
  if (parts_.empty()) return std::nullopt;
  for (std::size_t i = 1; i < parts_.size(); ++i) {
    if (parts_[i] != 1) return std::nullopt;
  }
  return std::make_pair(rows(), parts_[0]);
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (pos == text.size()) return Partition();
  for (;;) {
    skip();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw ParseError(pos, "expected a part (nonnegative integer) in partition literal");
    }
    long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > 1000000) throw ParseError(pos, "part too large");
      ++pos;
    }
    if (value == 0 && !(parts.empty() && text.find(',') == std::string_view::npos)) {
      throw ParseError(pos - 1, "parts must be positive");
    }
    if (!parts.empty() && value > parts.back()) {
      throw ParseError(pos - 1, "parts must be weakly decreasing");
    }
    parts.push_back(static_cast<int>(value));
    skip();
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError(pos, "expected ',' in partition literal");
    ++pos;
  }
  return Partition(std::move(parts));
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  return a.parts_ <=> b.parts_;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Permutation pi_permutation(const Partition& lambda) {
  const Partition t = lambda.transpose();
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(lambda.size()));
  for (const auto& [i, j] : lambda.cells()) images.push_back(t.tableau_number(j, i) - 1);
  return Permutation(std::move(images));
}

namespace {

// Filling of nu: labels[r][c] is 0 for a cell of lambda, i >= 1 for a cell
// added as the i-th row of mu.
using Filling = std::vector<std::vector<int>>;

bool is_strict(const Filling& f, int labels) {
  if (labels <= 1) return true;
  std::vector<int> count(static_cast<std::size_t>(labels) + 1);
  for (std::size_t r = 0; r < f.size(); ++r) {
    for (std::size_t c = 0; c < f[r].size(); ++c) {
      std::fill(count.begin(), count.end(), 0);
      // Cells above and to the right, the cell itself included.
      for (std::size_t r2 = 0; r2 <= r; ++r2) {
        for (std::size_t c2 = c; c2 < f[r2].size(); ++c2) ++count[static_cast<std::size_t>(f[r2][c2])];
      }
      for (int i = 1; i < labels; ++i) {
        if (count[static_cast<std::size_t>(i)] < count[static_cast<std::size_t>(i + 1)]) return false;
      }
    }
  }
  return true;
}

void add_strips(Filling& f, const std::vector<int>& mu, std::size_t label_index, PartitionCounts& out) {
  if (label_index == mu.size()) {
    if (!is_strict(f, static_cast<int>(mu.size()))) return;
    std::vector<int> shape;
    for (const auto& row : f) {
      if (!row.empty()) shape.push_back(static_cast<int>(row.size()));
    }
    ++out[Partition(std::move(shape))];
    return;
  }
  const int label = static_cast<int>(label_index) + 1;
  const std::vector<int> old_lengths = [&] {
    std::vector<int> l;
    for (const auto& row : f) l.push_back(static_cast<int>(row.size()));
    return l;
  }();
  const std::size_t rows = old_lengths.size();
  f.emplace_back();  // room for a new row

  // Distribute `remaining` boxes over rows r, r+1, ..., keeping a horizontal
  // strip: row r may grow up to the previous row's old length.
  std::function<void(std::size_t, int)> place = [&](std::size_t r, int remaining) {
    if (remaining == 0) {
      add_strips(f, mu, label_index + 1, out);
      return;
    }
    if (r > rows) return;
    const int old = r < rows ? old_lengths[r] : 0;
    const int cap = r == 0 ? old + remaining : old_lengths[r - 1];
    const int max_add = std::min(remaining, cap - old);
    for (int add = max_add; add >= 0; --add) {
      for (int k = 0; k < add; ++k) f[r].push_back(label);
      place(r + 1, remaining - add);
      f[r].resize(static_cast<std::size_t>(old));
    }
  };
  place(0, mu[label_index]);
  f.pop_back();
  while (!f.empty() && f.back().empty() && f.size() > rows) f.pop_back();
}

}  // namespace

PartitionCounts lr_mult(const Partition& lambda, const Partition& mu) {
  PartitionCounts out;
  Filling f;
  for (int len : lambda.parts()) f.emplace_back(static_cast<std::size_t>(len), 0);
  add_strips(f, mu.parts(), 0, out);
  return out;
}

LaurentPoly alpha(const Partition& lambda) {
  const Partition t = lambda.transpose();
  LaurentPoly result(1L);
  int content_sum = 0;
  for (const auto& [i, j] : lambda.cells()) {
    content_sum += j - i;
    result = result * quantum_int(lambda.row_length(i) + t.row_length(j) - i - j + 1);
  }
  return result.shifted(Exponent{0, 0, content_sum});
}

LaurentPoly hook_alpha(int k, int l) {
  if (k < 1 || l < 1) throw std::invalid_argument("hook_alpha: k and l must be positive");
  const int s_exp = (l * (l - 1) - k * (k - 1)) / 2;
  return (quantum_int(k + l - 1) * quantum_factorial(k - 1) * quantum_factorial(l - 1))
      .shifted(Exponent{0, 0, s_exp});
}

int framing_exponent(const Partition& lambda) {
  int n = 0;
  for (int p : lambda.parts()) n += p * p;
  const Partition t = lambda.transpose();
  for (int p : t.parts()) n -= p * p;
  return n;
}

LaurentPoly framing_factor(const Partition& lambda) {
  const int size = lambda.size();
  return LaurentPoly::monomial(size * size, -size, framing_exponent(lambda));
}

LaurentPoly framing_root_hook(int k, int l) {
  if (k < 1 || l < 1) throw std::invalid_argument("framing_root_hook: k and l must be positive");
  const int m = k + l - 1;
  return LaurentPoly::monomial(m, -1, m - 2 * k + 1);
}

}  // namespace skein

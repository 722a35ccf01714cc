#include "skein/chords.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

#include "skein/errors.hpp"

namespace skein {

std::vector<int> canonical_partner(const std::vector<int>& partner) {
  const int n = static_cast<int>(partner.size());
  std::vector<int> best = partner;
  std::vector<int> cand(partner.size());
  for (int r = 1; r < n; ++r) {
    for (int i = 0; i < n; ++i) cand[static_cast<std::size_t>(i)] = ((partner[static_cast<std::size_t>((i + r) % n)] - r) % n + n) % n;
    if (cand < best) best = cand;
  }
  return best;
}

ChordDiagram::ChordDiagram(std::vector<int> partner) {
  const int n = static_cast<int>(partner.size());
  if (n % 2 != 0) throw std::invalid_argument("ChordDiagram: odd number of points");
  for (int p = 0; p < n; ++p) {
    const int q = partner[static_cast<std::size_t>(p)];
    if (q < 0 || q >= n || q == p || partner[static_cast<std::size_t>(q)] != p) {
      throw std::invalid_argument("ChordDiagram: not a perfect matching");
    }
  }
  partner_ = canonical_partner(partner);
}

ChordDiagram ChordDiagram::parse(std::string_view text) {
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::size_t> starts;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto number = [&]() -> int {
    skip();
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) throw ParseError(i, "expected a point number");
    long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 10000) throw ParseError(i, "point number too large");
      ++i;
    }
    return static_cast<int>(v);
  };
  skip();
  if (i >= text.size()) throw ParseError(0, "empty matching");
  for (;;) {
    skip();
    starts.push_back(i);
    const int a = number();
    skip();
    if (i >= text.size() || text[i] != '-') throw ParseError(i, "expected '-'");
    ++i;
    const int b = number();
    pairs.emplace_back(a, b);
    skip();
    if (i >= text.size()) break;
    if (text[i] != ',') throw ParseError(i, std::string("unexpected character '") + text[i] + "'");
    ++i;
  }
  const int n = 2 * static_cast<int>(pairs.size());
  std::vector<int> partner(static_cast<std::size_t>(n), -1);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [a, b] = pairs[k];
    if (a < 1 || a > n || b < 1 || b > n || a == b) {
      throw ParseError(starts[k], "points must be distinct and between 1 and " + std::to_string(n));
    }
    if (partner[static_cast<std::size_t>(a - 1)] != -1 || partner[static_cast<std::size_t>(b - 1)] != -1) {
      throw ParseError(starts[k], "point used twice");
    }
    partner[static_cast<std::size_t>(a - 1)] = b - 1;
    partner[static_cast<std::size_t>(b - 1)] = a - 1;
  }
  return ChordDiagram(std::move(partner));
}

ChordDiagram ChordDiagram::rotated(int k) const {
  const int n = static_cast<int>(partner_.size());
  if (n == 0) return *this;
  std::vector<int> out(partner_.size());
  for (int p = 0; p < n; ++p) {
    const int from = ((p - k) % n + n) % n;
    out[static_cast<std::size_t>(p)] = (partner_[static_cast<std::size_t>(from)] + k % n + n) % n;
  }
  return ChordDiagram(std::move(out));
}

std::string ChordDiagram::to_string() const {
  std::string out;
  for (std::size_t p = 0; p < partner_.size(); ++p) {
    const auto q = static_cast<std::size_t>(partner_[p]);
    if (q < p) continue;
    if (!out.empty()) out += ',';
    out += std::to_string(p + 1) + "-" + std::to_string(q + 1);
  }
  return out;
}

namespace {

// Lift for one sheet assignment: rank points by (sheet, position).
std::vector<int> lift(const std::vector<int>& partner, const std::vector<int>& sheet, int m) {
  const int n = static_cast<int>(partner.size());
  std::vector<int> first(static_cast<std::size_t>(m) + 1, 0);
  for (int p = 0; p < n; ++p) ++first[static_cast<std::size_t>(sheet[static_cast<std::size_t>(p)]) + 1];
  for (int s = 0; s < m; ++s) first[static_cast<std::size_t>(s) + 1] += first[static_cast<std::size_t>(s)];
  std::vector<int> rank(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) rank[static_cast<std::size_t>(p)] = first[static_cast<std::size_t>(sheet[static_cast<std::size_t>(p)])]++;
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) {
    out[static_cast<std::size_t>(rank[static_cast<std::size_t>(p)])] = rank[static_cast<std::size_t>(partner[static_cast<std::size_t>(p)])];
  }
  return out;
}

long checked_power(int m, int e) {
  long total = 1;
  for (int i = 0; i < e; ++i) {
    if (total > (1L << 40) / m) throw std::length_error("psi_chords: too many sheet assignments");
    total *= m;
  }
  return total;
}

}  // namespace

ChordCounts psi_chords(const ChordDiagram& d, int m) {
  if (m < 1) throw std::invalid_argument("psi_chords: m must be positive");
  const std::vector<int>& partner = d.partner();
  const int n = static_cast<int>(partner.size());
  const long total = checked_power(m, n);
  ChordCounts out;
#pragma omp parallel
  {
    std::map<std::vector<int>, long> local;
    std::vector<int> sheet(static_cast<std::size_t>(n));
#pragma omp for schedule(static)
    for (long code = 0; code < total; ++code) {
      long c = code;
      for (int p = 0; p < n; ++p) {
        sheet[static_cast<std::size_t>(p)] = static_cast<int>(c % m);
        c /= m;
      }
      ++local[canonical_partner(lift(partner, sheet, m))];
    }
#pragma omp critical
    for (const auto& [key, count] : local) out[ChordDiagram(key)] += count;
  }
  return out;
}

ChordCounts psi_chords_reference(const ChordDiagram& d, int m) {
  if (m < 1) throw std::invalid_argument("psi_chords: m must be positive");
  const std::vector<int>& partner = d.partner();
  const int n = static_cast<int>(partner.size());
  checked_power(m, n);
  ChordCounts out;
  std::vector<int> sheet(static_cast<std::size_t>(n));
  // Assign sheets point by point; at the leaves build the lifted order by
  // sorting (sheet, position) pairs directly.
  std::function<void(int)> assign = [&](int p) {
    if (p == n) {
      std::vector<std::pair<int, int>> order;
      for (int q = 0; q < n; ++q) order.emplace_back(sheet[static_cast<std::size_t>(q)], q);
      std::sort(order.begin(), order.end());
      std::vector<int> where(static_cast<std::size_t>(n));
      for (int r = 0; r < n; ++r) where[static_cast<std::size_t>(order[static_cast<std::size_t>(r)].second)] = r;
      std::vector<int> lifted(static_cast<std::size_t>(n));
      for (int q = 0; q < n; ++q) {
        lifted[static_cast<std::size_t>(where[static_cast<std::size_t>(q)])] = where[static_cast<std::size_t>(partner[static_cast<std::size_t>(q)])];
      }
      ++out[ChordDiagram(std::move(lifted))];
      return;
    }
    for (int s = 0; s < m; ++s) {
      sheet[static_cast<std::size_t>(p)] = s;
      assign(p + 1);
    }
  };
  assign(0);
  return out;
}

}  // namespace skein

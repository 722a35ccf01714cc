#include "skein/diagram_ring.hpp"

#include <algorithm>
#include <stdexcept>

#include "print_util.hpp"
#include "skein/expression.hpp"

namespace skein {

DiagramVector operator*(const DiagramVector& a, const DiagramVector& b) {
  DiagramVector out;
  for (const auto& [la, ca] : a.terms()) {
    for (const auto& [lb, cb] : b.terms()) {
      const Scalar c = ca * cb;
      for (const auto& [nu, mult] : lr_mult(la, lb)) out.add_term(nu, c * Scalar(mult));
    }
  }
  return out;
}

std::string DiagramVector::to_string() const {
  std::vector<std::pair<Partition, const Scalar*>> order;
  for (const auto& [p, c] : terms_) order.emplace_back(p, &c);
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first.parts() > b.first.parts();
  });
  std::vector<detail::PrintTerm> out;
  for (const auto& [p, c] : order) {
    out.push_back({c, "(" + (p.empty() ? std::string("0") : p.to_string()) + ")"});
  }
  return detail::format_combination(out);
}

namespace {

struct DiagramTraits {
  static constexpr bool kPartitionLiterals = true;
  static DiagramVector from_rational(const Rational& q) { return DiagramVector::diagram(Partition(), Scalar(q)); }
  static std::optional<DiagramVector> atom(std::string_view id) {
    if (auto s = detail::scalar_atom(id)) return DiagramVector::diagram(Partition(), *s);
    return std::nullopt;
  }
  static std::optional<DiagramVector> divide(const DiagramVector& a, const DiagramVector& b) {
    auto c = detail::constant_of(b);
    if (!c || c->is_zero()) return std::nullopt;
    return a * c->inverse();
  }
  static std::optional<DiagramVector> power(const DiagramVector& a, int k) {
    if (auto c = detail::constant_of(a)) {
      if (k < 0 && c->is_zero()) return std::nullopt;
      return DiagramVector::diagram(Partition(), c->pow(k));
    }
    if (k < 0) return std::nullopt;
    DiagramVector r = DiagramVector::one();
    for (int i = 0; i < k; ++i) r = r * a;
    return r;
  }
  static DiagramVector partition(const std::vector<int>& parts) { return DiagramVector::diagram(Partition(parts)); }
};

struct CPolyTraits {
  static constexpr bool kPartitionLiterals = false;
  static CPoly from_rational(const Rational& q) { return CPoly::constant(Scalar(q)); }
  static std::optional<CPoly> atom(std::string_view id) {
    if (auto s = detail::scalar_atom(id)) return CPoly::constant(*s);
    if (id.size() >= 2 && id[0] == 'c' && std::all_of(id.begin() + 1, id.end(), [](char ch) {
          return ch >= '0' && ch <= '9';
        })) {
      return CPoly::c(std::stoi(std::string(id.substr(1))));
    }
    return std::nullopt;
  }
  static std::optional<CPoly> divide(const CPoly& a, const CPoly& b) {
    auto c = detail::constant_of(b);
    if (!c || c->is_zero()) return std::nullopt;
    return a * c->inverse();
  }
  static std::optional<CPoly> power(const CPoly& a, int k) {
    if (auto c = detail::constant_of(a)) {
      if (k < 0 && c->is_zero()) return std::nullopt;
      return CPoly::constant(c->pow(k));
    }
    if (k < 0) return std::nullopt;
    return a.pow(k);
  }
  static CPoly partition(const std::vector<int>&) { return CPoly(); }
};

}  // namespace

DiagramVector DiagramVector::parse(std::string_view text) { return ExpressionParser<DiagramTraits>(text).parse(); }

CPoly CPoly::c(int k) {
  if (k < 0) throw std::invalid_argument("CPoly::c: negative index");
  if (k == 0) return one();
  return basis(Partition({k}));
}

int CPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.size());
  return d;
}

CPoly CPoly::homogeneous_part(int degree) const {
  CPoly out;
  for (const auto& [m, c] : terms_) {
    if (m.size() == degree) out.add_term(m, c);
  }
  return out;
}

CPoly CPoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("CPoly::pow: negative exponent");
  CPoly r = one();
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

CPoly operator*(const CPoly& a, const CPoly& b) {
  CPoly out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) out.add_term(ma.merged(mb), ca * cb);
  }
  return out;
}

std::string CPoly::to_string() const {
  std::vector<std::pair<std::vector<int>, const Scalar*>> order;
  for (const auto& [m, c] : terms_) {
    std::vector<int> ascending(m.parts().rbegin(), m.parts().rend());
    order.emplace_back(std::move(ascending), &c);
  }
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    int da = 0, db = 0;
    for (int k : a.first) da += k;
    for (int k : b.first) db += k;
    if (da != db) return da < db;
    return a.first < b.first;
  });
  std::vector<detail::PrintTerm> out;
  for (const auto& [ks, c] : order) {
    std::string basis;
    for (std::size_t i = 0; i < ks.size();) {
      std::size_t j = i;
      while (j < ks.size() && ks[j] == ks[i]) ++j;
      if (!basis.empty()) basis += '*';
      basis += "c" + std::to_string(ks[i]);
      if (j - i > 1) basis += "^" + std::to_string(j - i);
      i = j;
    }
    out.push_back({c, basis});
  }
  return detail::format_combination(out);
}

CPoly CPoly::parse(std::string_view text) { return ExpressionParser<CPolyTraits>(text).parse(); }

DiagramVector phi(const CPoly& p) {
  DiagramVector out;
  for (const auto& [m, c] : p.terms()) {
    DiagramVector prod = DiagramVector::one();
    for (int k : m.parts()) prod = prod * DiagramVector::diagram(Partition::column(k));
    out += prod * c;
  }
  return out;
}

CPoly phi_inverse(const DiagramVector& v) {
  DiagramVector rest = v;
  CPoly out;
  while (!rest.is_zero()) {
    // Largest remaining diagram: phi of its column monomial is that diagram
    // plus lexicographically smaller diagrams of the same size.
    const auto it = std::prev(rest.terms().end());
    const Partition lambda = it->first;
    const Scalar c = it->second;
    const Partition columns = lambda.transpose();
    const DiagramVector image = phi(CPoly::basis(columns));
    if (!(image.coefficient(lambda) == Scalar(1L))) {
      throw std::logic_error("phi_inverse: column monomial is not unitriangular");
    }
    out.add_term(columns, c);
    rest -= image * c;
  }
  return out;
}

CPoly d(int l) {
  if (l < 0) throw std::invalid_argument("d: negative index");
  std::vector<CPoly> ds{CPoly::one()};
  for (int m = 1; m <= l; ++m) {
    CPoly next;
    for (int k = 1; k <= m; ++k) {
      const CPoly term = CPoly::c(k) * ds[static_cast<std::size_t>(m - k)];
      if (k % 2 == 1) {
        next += term;
      } else {
        next -= term;
      }
    }
    ds.push_back(std::move(next));
  }
  return ds.back();
}

std::pair<CPoly, DiagramVector> psi(int m) {
  if (m < 1) throw std::invalid_argument("psi: m must be positive");
  CPoly poly;
  DiagramVector diagrams;
  for (int k = 1; k <= m; ++k) {
    const Scalar sign(k % 2 == 1 ? 1L : -1L);
    poly += CPoly::c(k) * d(m - k) * (sign * Scalar(static_cast<long>(k)));
    diagrams.add_term(Partition::hook(k, m - k + 1), sign);
  }
  return {poly, diagrams};
}

}  // namespace skein

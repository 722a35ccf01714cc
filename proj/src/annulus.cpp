#include "skein/annulus.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <stdexcept>

#include "print_util.hpp"
#include "skein/expression.hpp"

namespace skein {

AnnulusElement AnnulusElement::A(int m) {
  if (m < 0) throw std::invalid_argument("A_m: negative index");
  if (m == 0) return one();
  return basis(Partition({m}));
}

int AnnulusElement::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.size());
  return d;
}

bool AnnulusElement::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.size();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.size() == d; });
}

AnnulusElement AnnulusElement::homogeneous_part(int degree) const {
  AnnulusElement out;
  for (const auto& [m, c] : terms_) {
    if (m.size() == degree) out.add_term(m, c);
  }
  return out;
}

AnnulusElement AnnulusElement::pow(int k) const {
  if (k < 0) throw std::invalid_argument("AnnulusElement::pow: negative exponent");
  AnnulusElement r = one();
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

AnnulusElement operator*(const AnnulusElement& a, const AnnulusElement& b) {
  AnnulusElement out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) out.add_term(ma.merged(mb), ca * cb);
  }
  return out;
}

std::string AnnulusElement::to_string() const {
  std::vector<std::pair<Partition, const Scalar*>> order;
  for (const auto& [m, c] : terms_) order.emplace_back(m, &c);
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first.parts() > b.first.parts();
  });
  std::vector<detail::PrintTerm> out;
  for (const auto& [m, c] : order) {
    const auto& ks = m.parts();
    std::string basis;
    for (std::size_t i = 0; i < ks.size();) {
      std::size_t j = i;
      while (j < ks.size() && ks[j] == ks[i]) ++j;
      if (!basis.empty()) basis += '*';
      basis += "A" + std::to_string(ks[i]);
      if (j - i > 1) basis += "^" + std::to_string(j - i);
      i = j;
    }
    out.push_back({c, basis});
  }
  return detail::format_combination(out);
}

namespace {

struct AnnulusTraits {
  static constexpr bool kPartitionLiterals = false;
  static AnnulusElement from_rational(const Rational& q) { return AnnulusElement::constant(Scalar(q)); }
  static std::optional<AnnulusElement> atom(std::string_view id) {
    if (auto s = detail::scalar_atom(id)) return AnnulusElement::constant(*s);
    if (id.size() >= 2 && id[0] == 'A' &&
        std::all_of(id.begin() + 1, id.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
      return AnnulusElement::A(std::stoi(std::string(id.substr(1))));
    }
    return std::nullopt;
  }
  static std::optional<AnnulusElement> divide(const AnnulusElement& a, const AnnulusElement& b) {
    auto c = detail::constant_of(b);
    if (!c || c->is_zero()) return std::nullopt;
    return a * c->inverse();
  }
  static std::optional<AnnulusElement> power(const AnnulusElement& a, int k) {
    if (auto c = detail::constant_of(a)) {
      if (k < 0 && c->is_zero()) return std::nullopt;
      return AnnulusElement::constant(c->pow(k));
    }
    if (k < 0) return std::nullopt;
    return a.pow(k);
  }
  static AnnulusElement partition(const std::vector<int>&) { return AnnulusElement(); }
};

}  // namespace

AnnulusElement AnnulusElement::parse(std::string_view text) { return ExpressionParser<AnnulusTraits>(text).parse(); }

namespace {

AnnulusElement cycle_monomial(const Permutation& p) { return AnnulusElement::basis(Partition(p.cycle_type())); }

// Closures of every basis braid on n strands. A label of minimal length in
// its conjugacy class closes to the product of A over its cycles. Any other
// label is joined, through conjugations by simple reflections that keep the
// length, to one with l(s pi s) = l(pi) - 2; there omega_pi = sigma_i
// omega_pi' sigma_i and the quadratic relation gives
// cl(omega_pi) = xz cl(omega_{s pi'}) + x^2 cl(omega_pi').
std::vector<AnnulusElement> build_closure_table(int n) {
  const SymmetricGroup& g = SymmetricGroup::get(n);
  const std::size_t order = g.order();
  std::vector<std::size_t> conj(order * static_cast<std::size_t>(std::max(n - 1, 1)));
  auto conj_at = [&](std::size_t idx, int i) -> std::size_t& {
    return conj[idx * static_cast<std::size_t>(n - 1) + static_cast<std::size_t>(i - 1)];
  };
  for (std::size_t idx = 0; idx < order; ++idx) {
    for (int i = 1; i < n; ++i) {
      std::vector<int> im = g.perm(g.swap(idx, i)).images();
      std::swap(im[static_cast<std::size_t>(i - 1)], im[static_cast<std::size_t>(i)]);
      conj_at(idx, i) = g.index(Permutation(std::move(im)));
    }
  }

  std::vector<AnnulusElement> table(order);
  std::vector<char> done(order, 0);
  std::vector<std::size_t> by_length(order);
  for (std::size_t i = 0; i < order; ++i) by_length[i] = i;
  std::stable_sort(by_length.begin(), by_length.end(),
                   [&](std::size_t a, std::size_t b) { return g.length(a) < g.length(b); });
  const AnnulusElement xz = AnnulusElement::constant(Scalar(var_x() * z_poly()));
  const AnnulusElement x2 = AnnulusElement::constant(Scalar(var_x(2)));

  for (std::size_t start : by_length) {
    if (done[start]) continue;
    const int len = g.length(start);
    // Component of start under length-preserving simple conjugation.
    std::vector<std::size_t> component{start};
    std::vector<char> seen(order, 0);
    seen[start] = 1;
    for (std::size_t k = 0; k < component.size(); ++k) {
      for (int i = 1; i < n; ++i) {
        const std::size_t c = conj_at(component[k], i);
        if (!seen[c] && g.length(c) == len) {
          seen[c] = 1;
          component.push_back(c);
        }
      }
    }
    AnnulusElement value;
    const Permutation& p = g.perm(start);
    const int cycles = static_cast<int>(p.cycle_type().size());
    if (len == n - cycles) {
      value = cycle_monomial(p);
    } else {
      bool found = false;
      for (std::size_t member : component) {
        for (int i = 1; i < n && !found; ++i) {
          const std::size_t shorter = conj_at(member, i);
          if (g.length(shorter) != len - 2) continue;
          value = xz * table[g.swap(shorter, i)] + x2 * table[shorter];
          found = true;
        }
        if (found) break;
      }
      if (!found) throw std::logic_error("closure: no length-reducing conjugation found");
    }
    for (std::size_t member : component) {
      table[member] = value;
      done[member] = 1;
    }
  }
  return table;
}

const std::vector<AnnulusElement>& closure_table(int n) {
  static std::array<std::vector<AnnulusElement>, SymmetricGroup::kMaxStrands + 1> tables;
  static std::array<std::once_flag, SymmetricGroup::kMaxStrands + 1> flags;
  const auto slot = static_cast<std::size_t>(n);
  std::call_once(flags[slot], [&] { tables[slot] = build_closure_table(n); });
  return tables[slot];
}

}  // namespace

AnnulusElement closure(const HeckeElement& h) {
  const auto& table = closure_table(h.strands());
  AnnulusElement out;
  for (std::size_t idx = 0; idx < table.size(); ++idx) {
    const Scalar& c = h.dense()[idx];
    if (c.is_zero()) continue;
    out += table[idx] * c;
  }
  return out;
}

AnnulusElement Q(const Partition& lambda) {
  if (lambda.empty()) return AnnulusElement::one();
  static std::mutex mutex;
  static std::map<Partition, AnnulusElement> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(lambda);
    if (it != cache.end()) return it->second;
  }
  const AnnulusElement value = closure(e_lambda(lambda)) * Scalar(LaurentPoly(1L), alpha(lambda));
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(lambda, value).first->second;
}

AnnulusElement Q_hook(int k, int l) { return Q(Partition::hook(k, l)); }

AnnulusElement theta(const CPoly& p) {
  AnnulusElement out;
  for (const auto& [m, c] : p.terms()) {
    AnnulusElement prod = AnnulusElement::one();
    for (int k : m.parts()) prod = prod * Q(Partition::column(k));
    out += prod * c;
  }
  return out;
}

AnnulusElement theta(const DiagramVector& v) { return theta(phi_inverse(v)); }

namespace {

// Rewrites an annulus element as a polynomial in the Q_{k,1}.
CPoly to_q_basis(const AnnulusElement& e);

CPoly single_in_q_basis(int k) {
  static std::mutex mutex;
  static std::map<int, CPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
  }
  // Q_{k,1} = lead * A_k + (products of lower A_j).
  const AnnulusElement q = Q(Partition::column(k));
  const Partition top({k});
  const Scalar lead = q.coefficient(top);
  if (lead.is_zero()) throw std::logic_error("a_in_Q_basis: A_k does not occur in Q_{k,1}");
  AnnulusElement rest = q;
  rest.add_term(top, -lead);
  const CPoly value = (CPoly::c(k) - to_q_basis(rest)) * lead.inverse();
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(k, value).first->second;
}

CPoly to_q_basis(const AnnulusElement& e) {
  CPoly out;
  for (const auto& [m, c] : e.terms()) {
    CPoly prod = CPoly::one();
    for (int k : m.parts()) prod = prod * single_in_q_basis(k);
    out += prod * c;
  }
  return out;
}

}  // namespace

CPoly a_in_Q_basis(int n) {
  if (n < 1) throw std::invalid_argument("a_in_Q_basis: n must be positive");
  return single_in_q_basis(n);
}

Scalar epsilon_plane(const AnnulusElement& e) {
  const Scalar d = delta();
  const Scalar curl(LaurentPoly::monomial(1, -1, 0));
  Scalar out;
  for (const auto& [m, c] : e.terms()) {
    Scalar value = c;
    for (int k : m.parts()) value *= curl.pow(k - 1) * d;
    out += value;
  }
  return out;
}

}  // namespace skein

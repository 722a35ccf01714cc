#include "skein/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>
#include <variant>

#include "skein/adams.hpp"
#include "skein/chords.hpp"

namespace skein {

namespace {

std::string param(const char* name, int v) { return std::string(name) + "=" + std::to_string(v); }

std::string lambda_param(const Partition& p) { return "lambda=(" + (p.empty() ? "0" : p.to_string()) + ")"; }

Scalar qint(int k) { return Scalar(quantum_int(k)); }
Scalar mono(int x, int v, int s) { return Scalar(LaurentPoly::monomial(x, v, s)); }

// Words on n strands drawn from a fixed seed.
BraidWord random_word(std::mt19937& rng, int n, int length) {
  std::vector<BraidLetter> letters;
  if (n < 2) return BraidWord(n, {});
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int i = 0; i < length; ++i) letters.push_back({gen(rng), coin(rng) ? 1 : -1});
  return BraidWord(n, std::move(letters));
}

}  // namespace

Report verify_xbiff(int max_m) {
  Report r;
  for (int m = 1; m <= max_m; ++m) {
    const AnnulusElement lhs = P(m);
    const AnnulusElement rhs = theta(psi(m).first) * qint(m);
    r.add(lhs == rhs, "xbiff", param("m", m), lhs == rhs ? "" : "P_m = " + lhs.to_string());
  }
  return r;
}

Report verify_idempotents(int max_cells) {
  Report r;
  for (int n = 1; n <= max_cells; ++n) {
    for (const Partition& lam : partitions_of(n)) {
      const HeckeElement e = e_lambda(lam);
      const bool ok = mul(e, e) == e * Scalar(alpha(lam));
      r.add(ok, "idempotent", lambda_param(lam));
    }
  }
  for (int n = 2; n <= max_cells - 1; ++n) {
    const auto parts = partitions_of(n);
    std::vector<HeckeElement> es;
    for (const auto& p : parts) es.push_back(e_lambda(p));
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (std::size_t j = 0; j < parts.size(); ++j) {
        if (i == j) continue;
        r.add(mul(es[i], es[j]).is_zero(), "orthogonal",
              lambda_param(parts[i]) + " mu=(" + parts[j].to_string() + ")");
      }
    }
  }
  return r;
}

Report verify_cd(int max_degree) {
  Report r;
  for (int m = 1; m <= max_degree; ++m) {
    CPoly sum;
    for (int k = 0; k <= m; ++k) {
      const CPoly term = CPoly::c(k) * d(m - k);
      if (k % 2 == 0) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    r.add(sum.is_zero(), "equal1", param("m", m), sum.is_zero() ? "" : sum.to_string());
    const bool row = phi(d(m)) == DiagramVector::diagram(Partition::row(m));
    r.add(row, "d-row", param("l", m));
  }
  // The annulus version is checked two degrees lower: it needs Q_{k,1} and
  // Q_{1,l} on up to max_degree - 2 strands.
  for (int m = 1; m <= max_degree - 2; ++m) {
    AnnulusElement sum;
    for (int k = 0; k <= m; ++k) {
      const AnnulusElement term = (k == 0 ? AnnulusElement::one() : Q_hook(k, 1)) *
                                  (m - k == 0 ? AnnulusElement::one() : Q_hook(1, m - k));
      if (k % 2 == 0) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    r.add(sum.is_zero(), "shep", param("degree", m), sum.is_zero() ? "" : sum.to_string());
  }
  return r;
}

Report verify_hook(int max_size) {
  Report r;
  // The diagram-level Pieri rule runs two cells further than the annulus checks.
  for (int k = 1; k <= max_size + 2; ++k) {
    for (int l = 1; k + l <= max_size + 2; ++l) {
      const DiagramVector lhs = phi(CPoly::c(k) * d(l));
      const DiagramVector rhs = DiagramVector::diagram(Partition::hook(k + 1, l)) +
                                DiagramVector::diagram(Partition::hook(k, l + 1));
      r.add(lhs == rhs, "pieri", param("k", k) + " " + param("l", l), lhs == rhs ? "" : lhs.to_string());
    }
  }
  for (int k = 1; k <= max_size; ++k) {
    for (int l = 1; k + l <= max_size; ++l) {
      const AnnulusElement lhs = Q_hook(k + 1, l) + Q_hook(k, l + 1);
      const AnnulusElement rhs = Q_hook(k, 1) * Q_hook(1, l);
      r.add(lhs == rhs, "bruce", param("k", k) + " " + param("l", l));

      auto e_hat = [](int a, int b) { return Q_hook(a, b) * Scalar(alpha(Partition::hook(a, b))); };
      const AnnulusElement plum_lhs =
          e_hat(k + 1, l) * (Scalar(var_s(l)) * qint(l)) + e_hat(k, l + 1) * (Scalar(var_s(-k)) * qint(k));
      const AnnulusElement plum_rhs = e_hat(1, l) * e_hat(k, 1) * (Scalar(var_s(l - k)) * qint(l + k));
      r.add(plum_lhs == plum_rhs, "plum", param("k", k) + " " + param("l", l));
    }
  }
  for (int k = 1; k <= max_size; ++k) {
    const Scalar coeff = Q_hook(k, 1).coefficient(Partition({k}));
    const Scalar expected = mono(-(k - 1), 0, 0) * Scalar(k % 2 == 1 ? 1L : -1L) / qint(k);
    r.add(coeff == expected, "coeffak", param("k", k), coeff == expected ? "" : "coefficient " + coeff.to_string());
  }
  for (int l = 1; l <= max_size; ++l) {
    r.add(theta(d(l)) == Q(Partition::row(l)), "pixie", param("l", l));
  }
  for (int k = 1; k <= max_size; ++k) {
    for (int l = 1; k + l <= max_size; ++l) {
      const Partition hook = Partition::hook(k, l);
      r.add(theta(DiagramVector::diagram(hook)) == Q(hook), "nows", param("k", k) + " " + param("l", l));
    }
  }
  for (int n = 1; n <= max_size - 1; ++n) {
    for (const Partition& lam : partitions_of(n)) {
      r.add(theta(DiagramVector::diagram(lam)) == Q(lam), "theta-lambda", lambda_param(lam));
    }
  }
  return r;
}

Report verify_rosso_jones(int max_strands) {
  Report r;
  const std::vector<std::pair<int, int>> pairs = {{2, 1}, {3, 1}, {4, 1}, {2, 3}, {2, 5}, {3, 2}, {3, 4}, {4, 3}};
  for (const auto& [m, p] : pairs) {
    if (m > max_strands) continue;
    const AnnulusElement lhs = closure(HeckeElement::from_word(torus_braid(m, p)));
    const AnnulusElement rhs = rosso_jones(m, p) * mono(1, -1, 0).pow(-p);
    r.add(lhs == rhs, "rosso-jones", param("m", m) + " " + param("p", p));
  }
  const Scalar v(var_v()), z(z_poly());
  const Scalar trefoil = torus_invariant(2, 3, true);
  const Scalar expected = delta() * (Scalar(2L) * v.pow(2) - v.pow(4) + v.pow(2) * z.pow(2));
  r.add(trefoil == expected, "trefoil", "normalized", trefoil == expected ? "" : trefoil.to_string());
  const auto h = h_expand(torus_invariant_slN(2, 3, 2, true), 2, 0);
  r.add(h.size() == 1 && h[0] == 2, "trefoil", "sl2 h^0=2", h.empty() ? "" : "constant term " + h[0].get_str());
  return r;
}

Report verify_series(int max_m) {
  Report r = series_identities(max_m, std::max(1, max_m - 1));
  const Scalar z(z_poly());
  for (int m = 1; m <= max_m; ++m) {
    AnnulusElement rhs = A_bar(m) * (Scalar(static_cast<long>(m)) * Scalar(var_x(m - 1)));
    for (int k = 1; k < m; ++k) rhs += P(k) * A_bar(m - k) * (z * Scalar(var_x(m - 1 - k)));
    r.add(P(m) == rhs, "mark", param("m", m));
  }
  // The mirror map: coefficients x, v, s -> inverses and A_j -> Abar_j.
  std::vector<AnnulusElement> bars;
  for (int j = 1; j <= max_m; ++j) bars.push_back(A_bar(j));
  auto mirror = [&](const AnnulusElement& e) {
    AnnulusElement out;
    for (const auto& [m, c] : e.terms()) {
      AnnulusElement prod = AnnulusElement::one();
      for (int j : m.parts()) prod = prod * bars[static_cast<std::size_t>(j - 1)];
      out += prod * bar(c);
    }
    return out;
  };
  for (int m = 1; m <= max_m; ++m) {
    AnnulusElement rhs2, rhs3;
    for (int k = 1; k <= m; ++k) {
      const Scalar c = Scalar(var_x(m - 1)) * Scalar(k % 2 == 1 ? 1L : -1L) * Scalar(var_s(m - k)) * qint(k);
      rhs2 += theta(CPoly::c(k) * d(m - k)) * c;
    }
    for (int k = 0; k <= m - 1; ++k) {
      const Scalar c = Scalar(var_x(1 - m)) * Scalar(k % 2 == 0 ? 1L : -1L) * Scalar(var_s(k)) * qint(m - k);
      rhs3 += theta(CPoly::c(k) * d(m - k)) * c;
    }
    r.add(mirror(rhs2) == rhs3, "mirror", param("m", m));
  }
  return r;
}

Report verify_hecke(int max_strands) {
  Report r;
  std::mt19937 rng(20240611);
  const Scalar xs = mono(1, 0, 1);
  const Scalar neg_xs_inv = mono(1, 0, -1) * Scalar(-1L);
  for (int n = 1; n <= max_strands; ++n) {
    const SymmetricGroup& g = SymmetricGroup::get(n);
    bool basis_ok = true;
    for (std::size_t idx = 0; idx < g.order(); ++idx) {
      const Permutation& pi = g.perm(idx);
      if (!(HeckeElement::from_word(ppb_word(pi)) == HeckeElement::basis(pi))) basis_ok = false;
    }
    r.add(basis_ok, "ppb-basis", param("n", n));

    for (int i = 1; i + 1 < n; ++i) {
      const BraidWord lhs(n, {{i, 1}, {i + 1, 1}, {i, 1}});
      const BraidWord rhs(n, {{i + 1, 1}, {i, 1}, {i + 1, 1}});
      r.add(HeckeElement::from_word(lhs) == HeckeElement::from_word(rhs), "braid-relation",
            param("n", n) + " " + param("i", i));
    }
    for (int i = 1; i < n; ++i) {
      for (int j = i + 2; j < n; ++j) {
        const BraidWord lhs(n, {{i, 1}, {j, -1}});
        const BraidWord rhs(n, {{j, -1}, {i, 1}});
        r.add(HeckeElement::from_word(lhs) == HeckeElement::from_word(rhs), "far-commute",
              param("n", n) + " " + param("i", i) + " " + param("j", j));
      }
      const BraidWord cancel(n, {{i, 1}, {i, -1}});
      r.add(HeckeElement::from_word(cancel) == HeckeElement::identity(n), "inverse", param("n", n) + " " + param("i", i));
    }

    const HeckeElement an = a_element(n);
    const HeckeElement bn = b_element(n);
    for (int i = 1; i < n; ++i) {
      const HeckeElement si = HeckeElement::from_word(BraidWord(n, {{i, 1}}));
      const bool a_ok = mul(an, si) == an * xs && mul(si, an) == an * xs;
      const bool b_ok = mul(bn, si) == bn * neg_xs_inv && mul(si, bn) == bn * neg_xs_inv;
      r.add(a_ok, "linhom-a", param("n", n) + " " + param("i", i));
      r.add(b_ok, "linhom-b", param("n", n) + " " + param("i", i));
    }

    if (n >= 2) {
      const HeckeElement a_prev = tensor(a_element(n - 1), HeckeElement::identity(1));
      const HeckeElement b_prev = tensor(b_element(n - 1), HeckeElement::identity(1));
      HeckeElement a_rhs = a_prev;
      HeckeElement b_rhs = b_prev;
      for (int i = 0; i <= n - 2; ++i) {
        std::vector<BraidLetter> w;
        for (int j = n - 1; j >= n - i - 1; --j) w.push_back({j, 1});
        const BraidWord word(n, std::move(w));
        a_rhs += a_prev.times_word(word) * mono(-1, 0, 1).pow(i + 1);
        b_rhs += b_prev.times_word(word) * (mono(-1, 0, -1) * Scalar(-1L)).pow(i + 1);
      }
      r.add(a_rhs == an, "bill-a", param("l", n));
      r.add(b_rhs == bn, "bill-b", param("k", n));
    }

    if (n >= 2 && n <= 4) {
      for (int t = 0; t < 4; ++t) {
        const BraidWord w = random_word(rng, n, 6);
        const BraidWord gamma = random_word(rng, n, 3);
        const AnnulusElement lhs = closure(HeckeElement::from_word(gamma * w * gamma.inverse()));
        const AnnulusElement rhs = closure(HeckeElement::from_word(w));
        r.add(lhs == rhs, "conjugation", param("n", n) + " " + param("trial", t));
      }
    }
    if (n <= 3) {
      for (int t = 0; t < 3; ++t) {
        const BraidWord w = random_word(rng, n, 5);
        const Scalar base = epsilon_plane(closure(HeckeElement::from_word(w)));
        for (int sign : {1, -1}) {
          const BraidWord stab = w.shifted(0, n + 1) * BraidWord(n + 1, {{n, sign}});
          const Scalar lhs = epsilon_plane(closure(HeckeElement::from_word(stab)));
          r.add(lhs == base * mono(1, -1, 0).pow(sign), "markov",
                param("n", n) + " " + param("trial", t) + " sign=" + (sign > 0 ? "+" : "-"));
        }
      }
    }
    if (n >= 2) {
      const HeckeElement a = HeckeElement::from_word(random_word(rng, n, 5));
      const HeckeElement b = HeckeElement::from_word(random_word(rng, n, 5));
      r.add(mul(a, b) == mul_reference(a, b), "mul-reference", param("n", n));
    }
  }
  return r;
}

Report verify_chords(int max_m) {
  Report r;
  const ChordDiagram crossing = ChordDiagram::parse("1-3,2-4");
  const ChordDiagram parallel = ChordDiagram::parse("1-2,3-4");
  const ChordCounts lifted = psi_chords(crossing, 2);
  const bool example = lifted.size() == 2 && lifted.count(crossing) && lifted.at(crossing) == 8 &&
                       lifted.count(parallel) && lifted.at(parallel) == 8;
  r.add(example, "chords-example", "crossing m=2");

  // Every matching on up to 3 chords.
  std::vector<ChordDiagram> diagrams;
  for (int n = 1; n <= 3; ++n) {
    std::vector<int> partner(static_cast<std::size_t>(2 * n), -1);
    std::function<void()> build = [&] {
      auto it = std::find(partner.begin(), partner.end(), -1);
      if (it == partner.end()) {
        const ChordDiagram d(partner);
        if (std::find(diagrams.begin(), diagrams.end(), d) == diagrams.end()) diagrams.push_back(d);
        return;
      }
      const int p = static_cast<int>(it - partner.begin());
      for (int q = p + 1; q < 2 * n; ++q) {
        if (partner[static_cast<std::size_t>(q)] != -1) continue;
        partner[static_cast<std::size_t>(p)] = q;
        partner[static_cast<std::size_t>(q)] = p;
        build();
        partner[static_cast<std::size_t>(p)] = -1;
        partner[static_cast<std::size_t>(q)] = -1;
      }
    };
    build();
  }
  for (const auto& d : diagrams) {
    for (int m = 1; m <= max_m; ++m) {
      const ChordCounts out = psi_chords(d, m);
      long total = 0;
      for (const auto& [k, c] : out) total += c;
      long expected = 1;
      for (int i = 0; i < 2 * d.chords(); ++i) expected *= m;
      r.add(total == expected, "chords-sum", "D=" + d.to_string() + " " + param("m", m));
    }
    const ChordCounts base = psi_chords(d, 2);
    const ChordCounts turned = psi_chords(d.rotated(1), 2);
    r.add(base == turned, "chords-rotation", "D=" + d.to_string());
    r.add(psi_chords(d, 1) == ChordCounts{{d, 1}}, "chords-identity", "D=" + d.to_string());
  }
  return r;
}

Report verify_pattern() {
  Report r;
  const AnnulusElement target =
      theta(DiagramVector::diagram({4}) - DiagramVector::diagram({2, 1, 1}) + DiagramVector::diagram({2, 2}));
  const AnnulusElement up = closure(decorate(BraidWord::parse("1"), Partition({1, 1})));
  const AnnulusElement down = closure(decorate(BraidWord::parse("-1"), Partition({1, 1})));
  const PatternResult forward = solve_pattern({target, {up, down}});
  const PatternResult backward = solve_pattern({target, {down, up}});
  r.add(std::holds_alternative<PatternInconsistency>(forward), "counterexample", "patterns=(+,-)");
  r.add(std::holds_alternative<PatternInconsistency>(backward), "counterexample", "patterns=(-,+)");
  const PatternResult p2 = solve_pattern({P(2), {closure(HeckeElement::from_word(BraidWord::parse("1"))),
                                                 closure(HeckeElement::from_word(BraidWord::parse("-1")))}});
  const auto* sol = std::get_if<PatternSolution>(&p2);
  r.add(sol && sol->coefficients[0] == Scalar(var_x(-1)) && sol->coefficients[1] == Scalar(var_x()), "pattern-P2",
        "m=2");
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"xbiff",  "idempotents", "cd",    "hook",   "rosso-jones",
                                                 "series", "hecke",       "chords", "pattern"};
  return names;
}

int default_size(const std::string& suite) {
  if (suite == "xbiff") return 6;
  if (suite == "idempotents") return 5;
  if (suite == "cd") return 8;
  if (suite == "hook") return 6;
  if (suite == "rosso-jones") return 4;
  if (suite == "series") return 6;
  if (suite == "hecke") return 5;
  if (suite == "chords") return 3;
  if (suite == "pattern") return 1;
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

Report run_suite(const std::string& suite, std::optional<int> max) {
  if (max && *max < 1) throw std::invalid_argument("--max must be at least 1");
  if (suite == "all") {
    Report all;
    for (const auto& name : suite_names()) all.append(run_suite(name, max));
    return all;
  }
  const int size = max ? *max : default_size(suite);
  if (suite == "xbiff") return verify_xbiff(size);
  if (suite == "idempotents") return verify_idempotents(size);
  if (suite == "cd") return verify_cd(size);
  if (suite == "hook") return verify_hook(size);
  if (suite == "rosso-jones") return verify_rosso_jones(size);
  if (suite == "series") return verify_series(size);
  if (suite == "hecke") return verify_hecke(size);
  if (suite == "chords") return verify_chords(size);
  if (suite == "pattern") return verify_pattern();
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace skein

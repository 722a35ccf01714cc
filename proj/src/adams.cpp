#include "skein/adams.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace skein {

BraidWord a_braid(int i, int j) {
  if (i < 0 || j < 0 || i + j < 1) throw std::invalid_argument("a_braid: need i, j >= 0 and i + j >= 1");
  std::vector<BraidLetter> letters;
  for (int k = 1; k <= i; ++k) letters.push_back({k, 1});
  for (int k = i + 1; k <= i + j; ++k) letters.push_back({k, -1});
  return BraidWord(i + j + 1, std::move(letters));
}

AnnulusElement A_bar(int m) {
  if (m < 1) throw std::invalid_argument("A_bar: m must be positive");
  if (m == 1) return AnnulusElement::A(1);
  return closure(HeckeElement::from_word(a_braid(0, m - 1)));
}

AnnulusElement P(int m) {
  if (m < 1) throw std::invalid_argument("P: m must be positive");
  if (m == 1) return AnnulusElement::A(1);
  AnnulusElement out;
  for (int i = 0; i < m; ++i) {
    const AnnulusElement cl = closure(HeckeElement::from_word(a_braid(i, m - 1 - i)));
    out += cl * Scalar(var_x(m - 1 - 2 * i));
  }
  return out;
}

AnnulusElement rosso_jones(int m, int p) {
  if (m < 1) throw std::invalid_argument("rosso_jones: m must be positive");
  if (std::gcd(m, p) != 1) {
    throw std::invalid_argument("rosso_jones: m = " + std::to_string(m) + " and p = " + std::to_string(p) +
                                " are not coprime");
  }
  AnnulusElement out;
  for (int k = 1; k <= m; ++k) {
    const Scalar root(framing_root_hook(k, m - k + 1));
    const Scalar sign(k % 2 == 1 ? 1L : -1L);
    out += Q_hook(k, m - k + 1) * (sign * root.pow(p));
  }
  return out;
}

BraidWord torus_braid(int m, int p) {
  if (m < 1) throw std::invalid_argument("torus_braid: m must be positive");
  std::vector<BraidLetter> cycle;
  for (int k = 1; k < m; ++k) cycle.push_back({k, 1});
  return BraidWord(m, std::move(cycle)).power(p);
}

Scalar torus_invariant(int m, int p, bool normalize) {
  if (std::gcd(m, p) != 1) {
    throw std::invalid_argument("torus_invariant: m = " + std::to_string(m) + " and p = " + std::to_string(p) +
                                " are not coprime");
  }
  Scalar value = epsilon_plane(closure(HeckeElement::from_word(torus_braid(m, p))));
  if (normalize) value *= Scalar(LaurentPoly::monomial(1, -1, 0)).pow(-p * (m - 1));
  return value;
}

TFraction torus_invariant_slN(int m, int p, int N, bool normalize) {
  return specialize_slN(torus_invariant(m, p, normalize), N);
}

namespace {

Scalar qint(int k) { return Scalar(quantum_int(k)); }

template <class F>
GradedSeries<CPoly> build(int order, F coeff) {
  if (order < 0) throw std::invalid_argument("series: negative order");
  std::vector<CPoly> out;
  for (int d = 0; d <= order; ++d) out.push_back(coeff(d));
  return GradedSeries<CPoly>(std::move(out));
}

Scalar sign(int k) { return Scalar(k % 2 == 0 ? 1L : -1L); }

}  // namespace

GradedSeries<CPoly> series_C(int order) {
  return build(order, [](int k) { return CPoly::c(k) * sign(k); });
}

GradedSeries<CPoly> series_D(int order) {
  return build(order, [](int l) { return d(l); });
}

GradedSeries<CPoly> series_Cq_prime(int order) {
  return build(order, [](int i) { return CPoly::c(i + 1) * (sign(i + 1) * qint(i + 1)); });
}

GradedSeries<CPoly> series_Dq_prime(int order) {
  return build(order, [](int i) { return d(i + 1) * qint(i + 1); });
}

GradedSeries<CPoly> series_C_prime(int order) {
  return build(order, [](int i) { return CPoly::c(i + 1) * (sign(i + 1) * Scalar(static_cast<long>(i + 1))); });
}

GradedSeries<CPoly> series_D_prime(int order) {
  return build(order, [](int i) { return d(i + 1) * Scalar(static_cast<long>(i + 1)); });
}

GradedSeries<CPoly> series_Psi(int order) {
  return build(order, [](int i) { return psi(i + 1).first; });
}

namespace {

std::string m_param(int m) { return "m=" + std::to_string(m); }

void compare_series(Report& report, const std::string& tag, const GradedSeries<AnnulusElement>& lhs,
                    const GradedSeries<AnnulusElement>& rhs) {
  const int order = std::min(lhs.order(), rhs.order());
  for (int d = 0; d <= order; ++d) {
    const bool ok = lhs[d] == rhs[d];
    report.add(ok, tag, "X^" + std::to_string(d),
               ok ? std::string() : "lhs " + lhs[d].to_string() + " vs rhs " + rhs[d].to_string());
  }
}

}  // namespace

Report series_identities(int order, int series_order) {
  if (order < 1 || series_order < 1) throw std::invalid_argument("series_identities: order must be positive");
  Report report;
  auto theta_of = [](const CPoly& p) { return theta(p); };

  for (int m = 1; m <= order; ++m) {
    AnnulusElement rhs2;
    for (int k = 1; k <= m; ++k) {
      rhs2 += theta(CPoly::c(k) * d(m - k)) * (sign(k - 1) * Scalar(var_s(m - k)) * qint(k));
    }
    rhs2 *= Scalar(var_x(m - 1));
    const AnnulusElement lhs2 = AnnulusElement::A(m);
    report.add(lhs2 == rhs2, "karen-eq2", m_param(m),
               lhs2 == rhs2 ? std::string() : "A_m = " + lhs2.to_string() + ", rhs = " + rhs2.to_string());

    AnnulusElement rhs3;
    for (int k = 0; k <= m - 1; ++k) {
      rhs3 += theta(CPoly::c(k) * d(m - k)) * (sign(k) * Scalar(var_s(k)) * qint(m - k));
    }
    rhs3 *= Scalar(var_x(-(m - 1)));
    const AnnulusElement lhs3 = A_bar(m);
    report.add(lhs3 == rhs3, "karen-eq3", m_param(m),
               lhs3 == rhs3 ? std::string() : "Abar_m = " + lhs3.to_string() + ", rhs = " + rhs3.to_string());
  }

  // X^{m-1} carries A_m, so the series run through X^{series_order-1}.
  const int top = series_order - 1;
  std::vector<AnnulusElement> plus, minus;
  for (int m = 1; m <= series_order; ++m) {
    plus.push_back(AnnulusElement::A(m));
    minus.push_back(A_bar(m));
  }
  const GradedSeries<AnnulusElement> phi_plus(plus), phi_minus(minus);
  const Scalar x(var_x()), xi(var_x(-1)), s(var_s()), si(var_s(-1));

  compare_series(report, "mary-1", phi_plus,
                 (-(series_Cq_prime(top).scaled(x) * series_D(top).scaled(x * s))).map(theta_of));
  compare_series(report, "mary-2", phi_minus,
                 (series_C(top).scaled(xi * s) * series_Dq_prime(top).scaled(xi)).map(theta_of));
  compare_series(report, "mary-3", phi_minus,
                 (-(series_Cq_prime(top).scaled(xi) * series_D(top).scaled(xi * si))).map(theta_of));

  const GradedSeries<CPoly> psi_series = series_Psi(top);
  const GradedSeries<CPoly> minus_cd = -(series_C_prime(top) * series_D(top));
  const GradedSeries<CPoly> dc = series_D_prime(top) * series_C(top);
  for (int i = 0; i <= top; ++i) {
    report.add(psi_series[i] == minus_cd[i], "rich-CD", m_param(i + 1),
               psi_series[i] == minus_cd[i] ? std::string() : "-C'D gives " + minus_cd[i].to_string());
    report.add(psi_series[i] == dc[i], "rich-DC", m_param(i + 1),
               psi_series[i] == dc[i] ? std::string() : "D'C gives " + dc[i].to_string());
  }
  return report;
}

}  // namespace skein

#include <doctest.h>

#include "oracles.hpp"
#include "skein/adams.hpp"
#include "skein/errors.hpp"

using namespace skein;

namespace {

DiagramVector D(const Partition& p, long c = 1) { return DiagramVector::diagram(p, Scalar(c)); }
CPoly c(int k) { return CPoly::c(k); }

}  // namespace

TEST_CASE("phi") {
  CHECK(phi(c(2)) == D({1, 1}));
  CHECK(phi(c(1) * c(1)) == D({2}) + D({1, 1}));
  CHECK(phi(CPoly::one()) == DiagramVector::one());
  CHECK(phi(c(1) * c(2)) == D({2, 1}) + D({1, 1, 1}));
}

TEST_CASE("phi inverse") {
  CHECK(phi_inverse(D({1, 1})) == c(2));
  CHECK(phi_inverse(D({2})) == c(1) * c(1) - c(2));
  CHECK(phi_inverse(D({2, 1})) == c(1) * c(2) - c(3));
  for (int n = 0; n <= 6; ++n) {
    for (const auto& lam : partitions_of(n)) {
      const CPoly p = phi_inverse(D(lam));
      CHECK(phi(p) == D(lam));
      for (const auto& [m, coeff] : p.terms()) CHECK(m.size() == n);
    }
  }
  std::mt19937 rng(3);
  for (int t = 0; t < 10; ++t) {
    DiagramVector v;
    for (int n = 1; n <= 5; ++n) {
      const auto parts = partitions_of(n);
      v += DiagramVector::diagram(parts[rng() % parts.size()], oracle::random_scalar(rng));
    }
    CHECK(phi(phi_inverse(v)) == v);
  }
}

TEST_CASE("complete generators") {
  CHECK(d(0) == CPoly::one());
  CHECK(d(1) == c(1));
  CHECK(d(2) == c(1) * c(1) - c(2));
  CHECK(phi(d(3)) == D({3}));
  for (int l = 0; l <= 8; ++l) CHECK(phi(d(l)) == D(Partition::row(l)));
}

TEST_CASE("C(X) D(X) = 1") {
  for (int m = 1; m <= 8; ++m) {
    CPoly sum;
    for (int k = 0; k <= m; ++k) sum += (k == 0 ? CPoly::one() : c(k)) * d(m - k) * Scalar(k % 2 == 0 ? 1L : -1L);
    CHECK(sum.is_zero());
  }
}

TEST_CASE("hook Pieri rule") {
  for (int k = 1; k <= 7; ++k) {
    for (int l = 1; k + l <= 8; ++l) {
      CHECK(phi(c(k) * d(l)) == D(Partition::hook(k + 1, l)) + D(Partition::hook(k, l + 1)));
    }
  }
}

TEST_CASE("psi") {
  CHECK(psi(1).first == c(1));
  CHECK(psi(1).second == D({1}));
  CHECK(psi(2).first == c(1) * c(1) - c(2) * Scalar(2L));
  CHECK(psi(2).second == D({2}) - D({1, 1}));
  for (int m = 1; m <= 8; ++m) {
    const auto [cp, dv] = psi(m);
    CHECK(phi(cp) == dv);
    DiagramVector hooks;
    for (int k = 1; k <= m; ++k) hooks += D(Partition::hook(k, m - k + 1), k % 2 == 1 ? 1 : -1);
    CHECK(dv == hooks);
  }
}

TEST_CASE("power sums through the series, diagram level") {
  const int order = 7;
  const auto minus_cd = -(series_C_prime(order) * series_D(order));
  const auto dc = series_D_prime(order) * series_C(order);
  for (int i = 0; i <= order; ++i) {
    CHECK(phi(minus_cd[i]) == psi(i + 1).second);
    CHECK(phi(dc[i]) == psi(i + 1).second);
  }
}

TEST_CASE("power sums by Newton's identity") {
  // p_m = sum_{k<m} (-1)^{k-1} e_k p_{m-k} + (-1)^{m-1} m e_m, with e_k = c_k.
  std::vector<CPoly> p(9);
  for (int m = 1; m <= 8; ++m) {
    CPoly v = c(m) * Scalar(static_cast<long>((m % 2 == 1 ? 1 : -1) * m));
    for (int k = 1; k < m; ++k) v += c(k) * p[static_cast<std::size_t>(m - k)] * Scalar(k % 2 == 1 ? 1L : -1L);
    p[static_cast<std::size_t>(m)] = v;
    CHECK(psi(m).first == v);
  }
}

TEST_CASE("text formats") {
  CHECK(psi(2).first.to_string() == "c1^2 - 2*c2");
  CHECK(psi(2).second.to_string() == "(2) - (1,1)");
  CHECK(CPoly::parse("c1^2 - 2*c2") == psi(2).first);
  CHECK(DiagramVector::parse("(2) - (1,1)") == psi(2).second);
  CHECK(DiagramVector::parse("(4) - (2,1,1) + (2,2)") == D({4}) - D({2, 1, 1}) + D({2, 2}));
  CHECK(DiagramVector::one().to_string() == "(0)");
  const CPoly big = c(1) * c(1) * c(2) * Scalar::parse("x - s^-1") + c(3);
  CHECK(CPoly::parse(big.to_string()) == big);
  CHECK_THROWS_AS(CPoly::parse("c1 + ck"), ParseError);
  CHECK_THROWS_AS(DiagramVector::parse("(2,3)"), ParseError);
}

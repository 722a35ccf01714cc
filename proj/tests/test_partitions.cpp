#include <doctest.h>

#include "oracles.hpp"
#include "skein/errors.hpp"
#include "skein/permutation.hpp"

using namespace skein;

namespace {

PartitionCounts product(const PartitionCounts& a, const PartitionCounts& b) {
  PartitionCounts out;
  for (const auto& [p, c] : a) {
    for (const auto& [q, d] : b) {
      for (const auto& [r, e] : lr_mult(p, q)) out[r] += c * d * e;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("partition basics") {
  const Partition p{4, 2, 1};
  CHECK(p.size() == 7);
  CHECK(p.transpose() == Partition{3, 2, 1, 1});
  CHECK(p.transpose().transpose() == p);
  CHECK(Partition::hook(3, 2) == Partition{2, 1, 1});
  CHECK(Partition::column(3) == Partition{1, 1, 1});
  CHECK(Partition::row(3) == Partition{3});
  CHECK(Partition{2, 1, 0} == Partition{2, 1});
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK(Partition::parse("4,2,1") == p);
  CHECK(Partition::parse("") == Partition());
  CHECK(p.to_string() == "4,2,1");
  CHECK_THROWS_AS(Partition::parse("4,a"), ParseError);
  CHECK_THROWS_AS(Partition::parse("1,2"), ParseError);
  for (int n = 0; n <= 8; ++n) {
    CHECK(partitions_of(n).size() == oracle::partitions_list(n).size());
    for (const auto& lam : partitions_of(n)) {
      CHECK(lam.transpose().transpose() == lam);
      CHECK(lam.transpose().size() == n);
    }
  }
}

TEST_CASE("tableau permutation") {
  CHECK(pi_permutation({4, 2, 1}).cycle_string() == "(2 4 7 3 6 5)");
  CHECK(pi_permutation({1}).is_identity());
  CHECK(pi_permutation({2, 1}).cycle_string() == "(2 3)");
  for (int n = 1; n <= 7; ++n) {
    for (const auto& lam : partitions_of(n)) {
      CHECK(pi_permutation(lam.transpose()) == pi_permutation(lam).inverse());
      // Cell i of T(lambda) at (r, c) goes to the cell (c, r) of T(lambda^vee).
      const auto cells = lam.cells();
      const Partition t = lam.transpose();
      const Permutation pi = pi_permutation(lam);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        const auto [r, c] = cells[i];
        CHECK(pi(static_cast<int>(i)) + 1 == t.tableau_number(c, r));
      }
    }
  }
}

TEST_CASE("lr examples") {
  CHECK(lr_mult({1}, {1}) == PartitionCounts{{Partition{2}, 1}, {Partition{1, 1}, 1}});
  CHECK(lr_mult({2, 1}, {}) == PartitionCounts{{Partition{2, 1}, 1}});
  CHECK(lr_mult({1, 1}, {1}) == PartitionCounts{{Partition{2, 1}, 1}, {Partition{1, 1, 1}, 1}});
  CHECK(lr_mult({2, 1}, {2, 1}).at(Partition{3, 2, 1}) == 2);
}

TEST_CASE("lr agrees with lattice-word tableaux") {
  for (int a = 0; a <= 5; ++a) {
    for (int b = 0; a + b <= 7; ++b) {
      for (const auto& lam : partitions_of(a)) {
        for (const auto& mu : partitions_of(b)) CHECK(lr_mult(lam, mu) == oracle::lr_classical(lam, mu));
      }
    }
  }
}

TEST_CASE("lr symmetry and size") {
  for (int n = 0; n <= 8; ++n) {
    for (int a = 0; a <= n; ++a) {
      for (const auto& lam : partitions_of(a)) {
        for (const auto& mu : partitions_of(n - a)) {
          const PartitionCounts ab = lr_mult(lam, mu);
          CHECK(ab == lr_mult(mu, lam));
          for (const auto& [nu, c] : ab) {
            CHECK(nu.size() == n);
            CHECK(c > 0);
          }
        }
      }
    }
  }
}

TEST_CASE("lr associativity") {
  for (int n = 0; n <= 6; ++n) {
    for (int a = 0; a <= n; ++a) {
      for (int b = 0; a + b <= n; ++b) {
        for (const auto& p : partitions_of(a)) {
          for (const auto& q : partitions_of(b)) {
            for (const auto& r : partitions_of(n - a - b)) {
              const PartitionCounts left = product(lr_mult(p, q), {{r, 1}});
              const PartitionCounts right = product({{p, 1}}, lr_mult(q, r));
              CHECK(left == right);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("alpha") {
  CHECK(alpha({1}) == LaurentPoly(1L));
  CHECK(alpha({2, 1}) == quantum_int(3));
  CHECK(alpha({}) == LaurentPoly(1L));
  for (int k = 1; k <= 7; ++k) {
    for (int l = 1; k + l <= 8; ++l) {
      // Closed hook formula written out directly.
      const int e = (l * (l - 1) - k * (k - 1)) / 2;
      const LaurentPoly expected = var_s(e) * quantum_int(k + l - 1) * quantum_factorial(k - 1) * quantum_factorial(l - 1);
      CHECK(alpha(Partition::hook(k, l)) == expected);
      CHECK(hook_alpha(k, l) == expected);
    }
  }
}

TEST_CASE("framing factors") {
  CHECK(framing_factor({1}) == LaurentPoly::monomial(1, -1, 0));
  CHECK(framing_factor({2}) == LaurentPoly::monomial(4, -2, 2));
  CHECK(framing_exponent({2, 1}) == 0);
  for (int m = 1; m <= 6; ++m) {
    CHECK(framing_root_hook(1, m) == LaurentPoly::monomial(m, -1, m - 1));
    for (int k = 1; k <= m; ++k) {
      const LaurentPoly root = framing_root_hook(k, m - k + 1);
      CHECK(root.pow(m) == framing_factor(Partition::hook(k, m - k + 1)));
    }
  }
}

#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "skein/annulus.hpp"
#include "skein/report.hpp"
#include "skein/series.hpp"
#include "skein/univariate.hpp"

namespace skein {

// sigma_1 ... sigma_i sigma_{i+1}^-1 ... sigma_{i+j}^-1 on i+j+1 strands;
// its closure is A_{i,j}.
BraidWord a_braid(int i, int j);
// Closure of the m-string negative cycle braid, A_{0,m-1}.
AnnulusElement A_bar(int m);

// P_m = sum_{i=0}^{m-1} x^{m-1-2i} A_{i,m-1-i}.
AnnulusElement P(int m);

// sum_k (-1)^{k-1} (x^m v^-1 s^{m-2k+1})^p Q(mu_{k,m-k+1}). p may be
// negative (the mirror). Throws std::invalid_argument unless gcd(m, p) = 1.
AnnulusElement rosso_jones(int m, int p);

// (sigma_1 ... sigma_{m-1})^p on m strands.
BraidWord torus_braid(int m, int p);
// Planar value of the (m, p) torus closure; with `normalize` the writhe is
// corrected by (x v^-1)^{-p(m-1)}.
Scalar torus_invariant(int m, int p, bool normalize);
// The same value after x = t^-1, v = t^{-N^2}, s = t^N.
TFraction torus_invariant_slN(int m, int p, int N, bool normalize);

// C(X) = sum (-1)^k c_k X^k, D(X) = sum d_l X^l and the quantum
// derivatives C'_q(X) = sum (-1)^k [k] c_k X^{k-1}, D'_q(X) = sum [l] d_l X^{l-1},
// all through X^order.
GradedSeries<CPoly> series_C(int order);
GradedSeries<CPoly> series_D(int order);
GradedSeries<CPoly> series_Cq_prime(int order);
GradedSeries<CPoly> series_Dq_prime(int order);
// Ordinary derivatives C'(X), D'(X), and Psi(X) = sum psi_m(c_1) X^{m-1}.
GradedSeries<CPoly> series_C_prime(int order);
GradedSeries<CPoly> series_D_prime(int order);
GradedSeries<CPoly> series_Psi(int order);

// The series identities relating A_m, the negative cycles, theta and the
// generating series. The closed formulas for A_m and its mirror are checked
// for m <= order; the factorizations of Phi^+ and Phi^- and the two
// expressions for Psi(X) through weighted degree `series_order`.
Report series_identities(int order, int series_order);
inline Report series_identities(int order) { return series_identities(order, order); }

// A target and pattern list in C+; the unknowns are the pattern weights.
struct PatternSystem {
  AnnulusElement target;
  std::vector<AnnulusElement> patterns;
};

struct PatternSolution {
  std::vector<Scalar> coefficients;
  std::vector<int> free_unknowns;  // set to zero in `coefficients`
};

// Two square subsystems, each with a unique solution, that disagree on
// `unknown`. Equations are named by their A-monomial.
struct PatternInconsistency {
  std::vector<Partition> first_equations;
  std::vector<Partition> second_equations;
  std::vector<Scalar> first_solution;
  std::vector<Scalar> second_solution;
  int unknown = -1;  // -1: an equation reads 0 = nonzero
};

using PatternResult = std::variant<PatternSolution, PatternInconsistency>;

// Throws std::invalid_argument on an empty pattern list.
PatternResult solve_pattern(const PatternSystem& sys);

}  // namespace skein

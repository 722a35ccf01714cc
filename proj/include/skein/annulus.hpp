#pragma once

#include <string>
#include <string_view>

#include "skein/combination.hpp"
#include "skein/diagram_ring.hpp"
#include "skein/hecke.hpp"

namespace skein {

// Element of C+, the positive part of the skein of the annulus, in the
// basis of monomials A_{m_1} A_{m_2} ... keyed by the partition (m_1, m_2, ...).
// The empty monomial is the empty diagram A_0 = 1.
class AnnulusElement : public LinearCombination<AnnulusElement, Partition> {
 public:
  AnnulusElement() = default;
  static AnnulusElement one() { return basis(Partition()); }
  static AnnulusElement constant(const Scalar& c) { return basis(Partition(), c); }
  // A_m; A_0 = 1.
  static AnnulusElement A(int m);

  // Weighted degree of the top monomial; -1 for zero.
  int degree() const;
  bool is_homogeneous() const;
  AnnulusElement homogeneous_part(int degree) const;
  AnnulusElement pow(int k) const;

  friend AnnulusElement operator*(const AnnulusElement& a, const AnnulusElement& b);

  // "2*x^-1*A2 - (s - s^-1)*A1^2".
  std::string to_string() const;
  static AnnulusElement parse(std::string_view text);
};

// omega_pi -> prod over the cycles of pi of A_{cycle length}.
AnnulusElement closure(const HeckeElement& h);

// Q_lambda = closure(e_lambda) / alpha_lambda; Q of (0) is 1. Cached.
AnnulusElement Q(const Partition& lambda);
// Q_{k,l} = Q(mu_{k,l}).
AnnulusElement Q_hook(int k, int l);

// c_k -> Q_{k,1}, extended multiplicatively.
AnnulusElement theta(const CPoly& p);
AnnulusElement theta(const DiagramVector& v);

// A_n as a polynomial in the Q_{k,1}, written with c_k standing for Q_{k,1},
// so that theta(a_in_Q_basis(n)) = A_n.
CPoly a_in_Q_basis(int n);

// Planar evaluation: the ring homomorphism A_k -> (x v^-1)^{k-1} delta.
Scalar epsilon_plane(const AnnulusElement& e);

}  // namespace skein

#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "skein/combination.hpp"
#include "skein/partition.hpp"

namespace skein {

// Element of the ring Y of Young diagrams; the product has
// Littlewood-Richardson structure constants and (0) is the unit.
class DiagramVector : public LinearCombination<DiagramVector, Partition> {
 public:
  DiagramVector() = default;
  static DiagramVector one() { return basis(Partition()); }
  static DiagramVector diagram(const Partition& p, const Scalar& c = Scalar(1L)) { return basis(p, c); }

  friend DiagramVector operator*(const DiagramVector& a, const DiagramVector& b);

  // "(2) - (1,1)"; the unit prints as "(0)".
  std::string to_string() const;
  static DiagramVector parse(std::string_view text);
};

// Polynomial in the column generators c_1, c_2, ... A monomial
// c_{k_1} c_{k_2} ... is keyed by the partition with parts k_1 >= k_2 >= ...;
// the empty partition is the unit.
class CPoly : public LinearCombination<CPoly, Partition> {
 public:
  CPoly() = default;
  static CPoly one() { return basis(Partition()); }
  static CPoly constant(const Scalar& c) { return basis(Partition(), c); }
  // c_k; c_0 = 1.
  static CPoly c(int k);

  int degree() const;  // maximal weighted degree; -1 for zero
  CPoly homogeneous_part(int degree) const;
  CPoly pow(int k) const;

  friend CPoly operator*(const CPoly& a, const CPoly& b);

  // "c1^2 - 2*c2".
  std::string to_string() const;
  static CPoly parse(std::string_view text);
};

// phi: c_k -> the column (1^k), extended multiplicatively.
DiagramVector phi(const CPoly& p);
// Inverse of phi by unitriangular back-substitution against the column
// monomials prod_j c_{lambda^vee_j}.
CPoly phi_inverse(const DiagramVector& v);

// d_l with phi(d_l) = (l): d_0 = 1, d_m = sum_{k=1}^m (-1)^{k-1} c_k d_{m-k}.
CPoly d(int l);

// psi_m(c_1) both as a polynomial in the c_k and as a diagram vector:
// sum_k (-1)^{k-1} k c_k d_{m-k}  and  sum_k (-1)^{k-1} mu_{k,m-k+1}.
std::pair<CPoly, DiagramVector> psi(int m);

}  // namespace skein

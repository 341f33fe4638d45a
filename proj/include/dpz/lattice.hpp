#pragma once

#include <vector>

#include "dpz/error.hpp"
#include "dpz/numeric.hpp"

namespace dpz {

// Integral divisor class on the blow-up of P^2 at r points, written in the
// basis (H, E_1, ..., E_r).  The coefficient vector (a; b_1, ..., b_r) means
// a*H - sum_i b_i*E_i, so the intersection form is a*a' - sum_i b_i*b_i'.
// Immutable value type.
class DivisorClass {
 public:
  DivisorClass(int r, std::vector<Int> coeffs);

  // Zero class on the rank r+1 lattice.
  static DivisorClass zero(int r);
  static DivisorClass hyperplane(int r);       // H
  static DivisorClass exceptional(int r, int i);  // E_i, 1 <= i <= r

  int r() const { return r_; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  const Int& h_coeff() const { return coeffs_[0]; }
  // b_i, 1 <= i <= r
  const Int& b(int i) const { return coeffs_[static_cast<size_t>(i)]; }

  bool is_zero() const;

  DivisorClass operator+(const DivisorClass& o) const;
  DivisorClass operator-(const DivisorClass& o) const;
  DivisorClass operator-() const;
  DivisorClass operator*(const Int& n) const;

  bool operator==(const DivisorClass& o) const;
  bool operator!=(const DivisorClass& o) const { return !(*this == o); }
  // Lexicographic on the coefficient vector; classes with different r are
  // ordered by r first so sorting mixed containers is still well defined.
  bool operator<(const DivisorClass& o) const;

 private:
  int r_;
  std::vector<Int> coeffs_;
};

// A formal rational combination in the same basis, used for Zariski positive
// parts and adjoint boundary classes.
class RationalClass {
 public:
  RationalClass(int r, std::vector<Rat> coeffs);
  explicit RationalClass(const DivisorClass& c);
  static RationalClass zero(int r);

  int r() const { return r_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  RationalClass operator+(const RationalClass& o) const;
  RationalClass operator-(const RationalClass& o) const;
  RationalClass operator*(const Rat& q) const;
  bool operator==(const RationalClass& o) const;

  // Smallest positive rational multiple that is integral with content 1.
  // Requires a nonzero class.
  DivisorClass primitive_integral() const;

 private:
  int r_;
  std::vector<Rat> coeffs_;
};

// Intersection pairing a*a' - sum b_i*b_i'.  Throws MismatchedLattice if the
// two classes live on lattices of different rank.
Int intersect(const DivisorClass& d1, const DivisorClass& d2);
Rat intersect(const RationalClass& d1, const RationalClass& d2);
Rat intersect(const RationalClass& d1, const DivisorClass& d2);

// K = -3H + sum E_i.  Throws InvalidR unless 0 <= r <= 8.
DivisorClass canonical_class(int r);
inline DivisorClass anticanonical_class(int r) { return -canonical_class(r); }

// p_a(C) = (C^2 + K.C)/2 + 1, as an exact rational.
Rat arithmetic_genus(const DivisorClass& c);

// -K . C, the anticanonical degree.
Int anticanonical_degree(const DivisorClass& c);

}  // namespace dpz

#pragma once

#include <string>
#include <vector>

#include "dpz/lattice.hpp"

namespace dpz {

// All integral classes C with C^2 = -1 and -K.C = 1, sorted lexicographically.
// Exhaustive search over the coefficient box forced by the Hodge bound
// (3a - (-K.C))^2 <= r(a^2 - C^2); throws InvalidR unless 1 <= r <= 8.
std::vector<DivisorClass> enum_minus1_classes(int r);

// All integral classes with C^2 = -2 and K.C = 0 (both rho and -rho), sorted.
std::vector<DivisorClass> enum_root_classes(int r);

// Weyl reflection s_rho(C) = C + (C.rho) rho.  Throws NotARoot unless
// rho^2 = -2 and K.rho = 0.
DivisorClass reflect(const DivisorClass& c, const DivisorClass& rho);

// An ordered set of simple (-2)-roots: rho^2 = -2, K.rho = 0, pairwise
// intersections in {0,1}, linearly independent.  Validated on construction.
class RootBasis {
 public:
  RootBasis(int r, std::vector<DivisorClass> roots);
  static RootBasis empty(int r) { return RootBasis(r, {}); }

  int r() const { return r_; }
  const std::vector<DivisorClass>& roots() const { return roots_; }
  bool is_empty() const { return roots_.empty(); }

 private:
  int r_;
  std::vector<DivisorClass> roots_;
};

// Dynkin type of the root configuration as a canonical string such as
// "A1", "7A1", "A1+D6", "4A2", "2D4", "E8".  Components are classified from
// the intersection graph: path = A_n; one degree-3 node with arm lengths
// (1,1,n) = D; arms (1,2,2)/(1,2,3)/(1,2,4) = E6/E7/E8.  Throws NotADE for
// cycles or other branch patterns.
std::string ade_type(const RootBasis& basis);

}  // namespace dpz

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dpz/curves.hpp"
#include "dpz/lattice.hpp"

namespace dpz {

// A weak del Pezzo surface of degree 9-r, modeled by its Picard lattice
// together with the set of effective simple (-2)-roots.  The surface is an
// honest del Pezzo exactly when the root set is empty.
class SurfaceModel {
 public:
  SurfaceModel(int r, RootBasis effective_roots);
  static SurfaceModel del_pezzo(int r) { return SurfaceModel(r, RootBasis::empty(r)); }

  int r() const { return r_; }
  int degree() const { return 9 - r_; }
  const RootBasis& effective_roots() const { return roots_; }
  bool is_del_pezzo() const { return roots_.is_empty(); }

 private:
  int r_;
  RootBasis roots_;
};

// Generator set for all cone tests: the effective roots together with every
// (-1)-class pairing >= 0 against all of them.  Special cases: r=0 -> {H},
// r=1 -> {E1, H-E1}.
std::vector<DivisorClass> irreducible_negative_curves(const SurfaceModel& s);

// D.C >= 0 for every generator, plus D.H >= 0 and D.(-K) >= 0.
bool is_nef(const SurfaceModel& s, const DivisorClass& d);
bool is_nef(const SurfaceModel& s, const RationalClass& d);

// Exact membership in cone(irreducible_negative_curves union {-K}).
bool is_pseudo_effective(const SurfaceModel& s, const DivisorClass& d);
bool is_pseudo_effective(const SurfaceModel& s, const RationalClass& d);

struct ZariskiDecomposition {
  RationalClass positive;
  std::vector<std::pair<DivisorClass, Rat>> negative;  // coefficients > 0
};

// Unique D = P + N with P nef, P orthogonal to every listed curve, and the
// listed curves' Gram matrix negative definite.  Throws NotPseudoEffective
// when the input lies outside the pseudo-effective cone.
ZariskiDecomposition zariski_decompose(const SurfaceModel& s, const DivisorClass& d);
ZariskiDecomposition zariski_decompose(const SurfaceModel& s, const RationalClass& d);

struct NefDecomposition {
  // n_d, ..., n_7 where d = 9 - r; coefficients[i] multiplies the pullback
  // of -K from the degree d+i surface in the contraction chain.
  std::vector<Int> coefficients;
  // residual nef class on the lattice where the chain stopped
  DivisorClass residual = DivisorClass::zero(0);
  // the (-1)-class contracted at each stage, in that stage's basis
  std::vector<DivisorClass> chain;
  // set when the chain ends on the quadric P1 x P1: the residual is then a
  // class on the rank-3 lattice orthogonal to H - E1 - E2
  bool ends_on_quadric = false;
};

// Testa-style decomposition of a nef class on a del Pezzo surface:
// D = n_d(-K_{Y_d}) + n_{d+1} phi*(-K_{Y_{d+1}}) + ... + phi*(D').
// Greedy: n = min D.E over (-1)-curves, subtract n(-K), contract the
// lexicographically smallest orthogonal (-1)-curve, recurse.  The
// reconstruction is verified internally; a non-nef intermediate raises
// DecompositionFailed.
NefDecomposition nef_decompose(const SurfaceModel& s, const DivisorClass& d);

}  // namespace dpz

#pragma once

#include <array>
#include <optional>

#include "dpz/poly.hpp"

namespace dpz {

// Cubic surface in P^3 over a field of characteristic 2, with coefficients
// y_{ijkl} of the monomials x0^i x1^j x2^k x3^l, i+j+k+l = 3.
class CubicSurface {
 public:
  // The polynomial must have exactly 4 variables, characteristic 2, be
  // homogeneous of degree 3 and not identically zero.
  explicit CubicSurface(FinitePoly f);

  const FiniteField& field() const { return f_.field(); }
  const FinitePoly& poly() const { return f_; }
  FiniteField::Elem y(int i, int j, int k, int l) const;

 private:
  FinitePoly f_;
};

// Double cover of the plane w^2 + w*g2 + g4 = 0 in P(1,1,1,2),
// characteristic 2; g2 and g4 are homogeneous of degrees 2 and 4 in the
// same three plane variables.
class DoublePlaneCover {
 public:
  DoublePlaneCover(FinitePoly g2, FinitePoly g4);
  const FinitePoly& g2() const { return g2_; }
  const FinitePoly& g4() const { return g4_; }
  const FiniteField& field() const { return g2_.field(); }

 private:
  FinitePoly g2_, g4_;
};

// Coefficient criteria for every anticanonical member acquiring a cusp, in
// the normal forms g2 = yz - x^2 (case 2a) and g2 = yz (case 2b).  The
// a_{ijk} below are the coefficients of x^i y^j z^k in g4.
//   case 2a: a130 = a103 = 0, a121 = a310, a112 = a301
//   case 2b: a310 = a301 = 0
// Throws WrongDegree unless g4 is homogeneous of degree 4 in 3 variables,
// InvalidChar unless the characteristic is 2.
bool case2a_insep_conditions(const FinitePoly& g4);
bool case2b_insep_conditions(const FinitePoly& g4);

// Normal form g2 = y^2: slope c of the line z = b*x + c*y whose preimage in
// the double cover is cuspidal, at the branch point p = (1 : 0 : b).
// Computed from the partial derivatives of g4 at p and independently
// cross-checked against the closed-form coefficient identity
//   c*(a301 + a103*b^2) = a310 + a211*b + a112*b^2 + a013*b^3;
// a mismatch raises InternalInconsistency.  Throws Undefined when
// dg4/dx(p) = 0 (no well-defined slope).
FiniteField::Elem case2c_cusp_slope(const FinitePoly& g4, FiniteField::Elem b);

struct SingularWitness {
  int chart;  // 0, 1, 2: which plane coordinate is set to 1
  int ext;    // witness found over F_{2^ext}
  std::array<FiniteField::Elem, 4> point;  // (x, y, z, w), codes in F_{2^ext}
};

// Search all points of the cover over F_{2^k}, k = 1..max_ext, for a
// simultaneous zero of the defining polynomial and its partials on each
// affine chart.  A witness proves the surface is singular; absence of a
// witness proves nothing (the search is one-sided).  Requires max_ext <= 9
// and prime-field coefficients when max_ext exceeds the coefficient field.
std::optional<SingularWitness> double_cover_singular_search(const DoublePlaneCover& cover,
                                                            int max_ext);

// c4 = (y0111*z0 + y1011*z1 + y1101*z2 + y1110*z3)^4, the coefficient that
// controls cuspidal hyperplane sections of a cubic in characteristic 2.
FiniteField::Elem cubic_c4(const CubicSurface& s, const std::array<FiniteField::Elem, 4>& z);

// True iff y0111 = y1011 = y1101 = y1110 = 0, i.e. c4 vanishes identically
// (smooth such cubics are projectively equivalent to the Fermat cubic).
bool cubic_all_cuspidal_condition(const CubicSurface& s);

// Intersection multiplicity of the tangent line with the quartic curve
// q4 = 0 at the given smooth point, over the field ext (which must be the
// polynomial's own field, or an extension when the coefficients lie in the
// prime field).  Returns 5 when the tangent line is contained in the curve.
// A value >= 3 means the point is a flex.  Characteristic must be 3.
// Throws NotOnCurve and SingularPoint.
int tangent_flex_multiplicity(const FinitePoly& q4, const FiniteField& ext,
                              const std::array<FiniteField::Elem, 3>& pt);
int tangent_flex_multiplicity(const FinitePoly& q4,
                              const std::array<FiniteField::Elem, 3>& pt);

enum class FlexVerdict { all_flex, found_nonflex, inconclusive };

const char* flex_verdict_name(FlexVerdict v);

struct FlexSampleResult {
  FlexVerdict verdict;
  std::optional<std::array<FiniteField::Elem, 3>> witness;  // a non-flex point
  int min_multiplicity = 0;  // over the smooth points visited (0 if none)
};

// Iterate every smooth point of the quartic over F_{3^ext} (ext <= 6):
// all_flex if every tangent meets with multiplicity >= 3, found_nonflex
// with a witness otherwise, inconclusive if no smooth points exist.
FlexSampleResult nonreflexive_sample_test(const FinitePoly& q4, int ext);

}  // namespace dpz

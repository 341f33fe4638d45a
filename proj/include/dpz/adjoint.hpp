#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dpz/flags.hpp"
#include "dpz/surface.hpp"

namespace dpz {

// Structural cases of the adjoint analysis when a > 1:
//   P2_O1           a = 3, minimal model P^2 with L pulled back from O(1)
//   QUADRIC_O1      a = 2 and rigid; degree-8 minimal model (quadric or
//                   quadric cone; the two are not distinguishable from the
//                   blow-up lattice)
//   RULED_FIBRATION a = 2 with a genus-0 fibration; fiber_class is set
//   P2_O2           a = 3/2, minimal model P^2 with L pulled back from O(2)
//   GENERAL         a <= 1
enum class AdjointCase { P2_O1, QUADRIC_O1, RULED_FIBRATION, P2_O2, GENERAL };

const char* adjoint_case_name(AdjointCase c);

struct AInvariantResult {
  std::optional<Rat> a;  // nullopt means +infinity (L not big)
  bool rigid = false;
  AdjointCase case_label = AdjointCase::GENERAL;
  std::optional<DivisorClass> fiber_class;

  bool is_infinite() const { return !a.has_value(); }
};

// a(S, L) = min { t : K + tL pseudo-effective }, as an exact rational,
// computed by a parametric LP over the effective-cone generators; nullopt
// (infinity) when L is not big (L^2 <= 0).  Throws NotNef unless L is nef.
std::optional<Rat> fujita_invariant(const SurfaceModel& s, const DivisorClass& l);

// Full adjoint analysis: computes a, Zariski-decomposes the boundary class
// B = K + aL, reads off rigidity (positive part zero) or the fibration
// fiber (primitive integral model of the positive part, which has square
// zero), and assigns the structural case.  The identity a = 2/(L.F) is
// verified in the fibration case.  Throws NotNef / NotBig.
AInvariantResult adjoint_analyze(const SurfaceModel& s, const DivisorClass& l);

enum class BreakingType { Type1, Type2, Type3, Type1or3 };

const char* breaking_type_name(BreakingType t);

// One row of the fixed four-case breaking-map table.
struct BreakingCase {
  int case_id = 0;  // 1..4
  std::string description;
  std::set<int> required_char;
  int required_degree = 0;
  BreakingType required_type = BreakingType::Type1;
  Rat a_value;
  Tri possible = Tri::yes;  // unknown when the gating flag is unresolved
};

// Returns the rows of the breaking-map table whose conditions can be met for
// a degree 9-r surface in characteristic p with the given pathology flags:
//   case 1: d=1, p in {2,3}, Type 1, a = 2   (quasi-elliptic base change)
//   case 2: d=2, p=2,       Type 2, a = 3/2 (inseparable double plane)
//   case 3: d=1, p=2,       Type 3, a = 2   (cover of the quadric cone)
//   case 4: d=1, p=2, Type 1 or 3, a = 3/2 (inseparable degree-4 plane map)
// A del Pezzo model always yields the empty list.  Rows gated by an unknown
// flag are returned with possible = unknown.  Throws InvalidChar unless p is
// zero or prime.
std::vector<BreakingCase> classify_breaking_cases(const SurfaceModel& s, int p,
                                                  const PathologyFlags& flags);

// Dimension lower bound for families pushed through a breaking map:
// bound = a * deg_pushed + dim_x - 3; exceeds_expected compares against the
// expected dimension deg_pushed + dim_x - 3.
std::pair<Rat, bool> breaking_dim_bound(const Rat& a, const Int& deg_pushed, int dim_x);

}  // namespace dpz

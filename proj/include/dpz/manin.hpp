#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dpz/flags.hpp"
#include "dpz/surface.hpp"

namespace dpz {

// Anticanonical-degree threshold delta(d) above which (or at characteristic
// zero) the component census applies: 2 for d >= 4, 3 for d in {2,3}, 11 for
// d = 1.  Throws InvalidDegree unless 1 <= d <= 9.
int delta(int d);

// Expected dimension of the space of rational curves in class beta on a
// surface: -K.beta - 1.
Int expected_dim(const DivisorClass& beta);

// Structural case of a class with 0 <= -K.C <= 2.
enum class LowDegreeCase {
  MinusTwoCurve,          // -K.C = 0, C^2 = -2
  MinusOneCurve,          // -K.C = 1, C^2 = -1
  AnticanonicalDegree1,   // -K.C = 1, C^2 = 1, d = 1 (member of |-K|)
  ConicFibrationFiber,    // -K.C = 2, C^2 = 0
  AnticanonicalDegree2,   // -K.C = 2, C^2 = 2, d in {1,2}
  TwoKTimes,              // -K.C = 2, C^2 = 4, d = 1 (member of |-2K|)
};

const char* low_degree_case_name(LowDegreeCase c);

struct LowDegreeClassification {
  LowDegreeCase case_id;
  // For AnticanonicalDegree1 only: whether the pencil |-K| can be
  // quasi-elliptic.  Decidable only from pathology flags, so callers that
  // do not supply flags get `unknown` there and `no` elsewhere.
  Tri quasi_elliptic_possible = Tri::no;
};

// Classify a class with anticanonical degree at most 2 by (degree, C^2, d).
// Throws HodgeViolation when the invariant combination is impossible and
// InvalidInput when -K.C is outside [0, 2].
LowDegreeClassification classify_low_degree(const SurfaceModel& s, const DivisorClass& c,
                                            const std::optional<PathologyFlags>& flags = {});

struct ConicClass {
  DivisorClass q;  // nef, -K.q = 2
  Int m;           // beta = m * q
  Int q_square;    // 0, 2, or 4
};

// All nef classes Q with -K.Q = 2 dividing beta (beta = mQ, m >= 1).
std::vector<ConicClass> conic_classes(const SurfaceModel& s, const DivisorClass& beta);

// Pathology flags from the ADE type of the effective roots and the
// characteristic, per the sporadic singularity-type lists:
//   char 2, degree 1, Type 1: E8, D8, A1+E7, 2A1+D6, 2D4, 4A1+D4, 8A1
//                             (plus unlisted infinite families -> unknown)
//   char 3, degree 1, Type 1: E8, A2+E6, 4A2
//   char 2, degree 2, Type 2: E7, A1+D6, 3A1+D4, 7A1
// Type 3 coincides with Type 1 in characteristic 2 and is `no` otherwise.
// Characteristics outside {2,3}, wrong degrees, and del Pezzo models (empty
// root set) all give `no`.
PathologyFlags pathology_from_roots(const SurfaceModel& s, int p);

enum class CensusKind { BirationalFree, ConicCovers, ConicCoversAtLeast };

const char* census_kind_name(CensusKind k);

struct CensusEntry {
  CensusKind kind;
  std::optional<Int> expected_dim;       // set for BirationalFree and Q^2=0 covers
  std::optional<DivisorClass> conic;     // set for cover entries
  std::optional<Int> cover_multiplicity; // m with beta = m * conic
};

struct ComponentCensus {
  bool applicable = false;
  std::string reason;  // set when not applicable
  std::vector<CensusEntry> entries;
  bool lower_bound_only = false;
};

// Census of components of the space of rational curves in class beta on a
// del Pezzo surface over characteristic p (p = 0 allowed):
//   - inapplicable when 0 < p < delta(d), or when the caller flags the
//     exceptional surface (the degree-2 characteristic-3 Klein double cover)
//   - no conic divisor of beta         -> [BirationalFree]
//   - beta = mQ, Q^2 = 0               -> [ConicCovers(Q, m)] only
//   - beta = mQ, Q^2 = 2               -> [BirationalFree, ConicCovers(Q, m)]
//   - beta = m(-2K), d = 1 (Q^2 = 4)   -> [BirationalFree, ConicCoversAtLeast],
//                                         lower_bound_only
// Throws NotDelPezzo, NotNef, DegreeTooSmall (-K.beta < 3), InvalidChar.
ComponentCensus component_census(const SurfaceModel& s, int p, const DivisorClass& beta,
                                 bool exceptional);

// yes iff some type flag is yes; no iff all are no; unknown otherwise.
Tri excess_family_predicate(const PathologyFlags& flags);

}  // namespace dpz

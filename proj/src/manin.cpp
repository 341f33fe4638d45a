#include "dpz/manin.hpp"

#include <array>

#include "dpz/curves.hpp"

namespace dpz {

int delta(int d) {
  if (d < 1 || d > 9) fail(Err::InvalidDegree, "delta: degree must be in [1,9]");
  if (d >= 4) return 2;
  if (d >= 2) return 3;
  return 11;
}

Int expected_dim(const DivisorClass& beta) { return anticanonical_degree(beta) - 1; }

const char* low_degree_case_name(LowDegreeCase c) {
  switch (c) {
    case LowDegreeCase::MinusTwoCurve: return "MinusTwoCurve";
    case LowDegreeCase::MinusOneCurve: return "MinusOneCurve";
    case LowDegreeCase::AnticanonicalDegree1: return "AnticanonicalDegree1";
    case LowDegreeCase::ConicFibrationFiber: return "ConicFibrationFiber";
    case LowDegreeCase::AnticanonicalDegree2: return "AnticanonicalDegree2";
    default: return "TwoKTimes";
  }
}

LowDegreeClassification classify_low_degree(const SurfaceModel& s, const DivisorClass& c,
                                            const std::optional<PathologyFlags>& flags) {
  if (c.r() != s.r()) fail(Err::MismatchedLattice, "classify_low_degree: wrong lattice");
  const Int deg = anticanonical_degree(c);
  if (deg < 0 || deg > 2)
    fail(Err::InvalidInput, "classify_low_degree: -K.C must be in [0,2]");
  const Int c2 = intersect(c, c);
  const int d = s.degree();
  // Hodge bound for classes with nonnegative pairing against the nef-and-big -K
  if (Int(d) * c2 > deg * deg)
    fail(Err::HodgeViolation, "classify_low_degree: d*C^2 > (-K.C)^2");

  LowDegreeClassification out{LowDegreeCase::MinusTwoCurve, Tri::no};
  if (deg == 0) {
    if (c2 == -2) {
      out.case_id = LowDegreeCase::MinusTwoCurve;
      return out;
    }
  } else if (deg == 1) {
    if (c2 == -1) {
      out.case_id = LowDegreeCase::MinusOneCurve;
      return out;
    }
    if (c2 == 1 && d == 1) {
      out.case_id = LowDegreeCase::AnticanonicalDegree1;
      out.quasi_elliptic_possible = flags ? flags->type1 : Tri::unknown;
      return out;
    }
  } else {
    if (c2 == 0) {
      out.case_id = LowDegreeCase::ConicFibrationFiber;
      return out;
    }
    if (c2 == 2 && (d == 1 || d == 2)) {
      out.case_id = LowDegreeCase::AnticanonicalDegree2;
      return out;
    }
    if (c2 == 4 && d == 1) {
      out.case_id = LowDegreeCase::TwoKTimes;
      return out;
    }
  }
  fail(Err::HodgeViolation, "classify_low_degree: impossible (-K.C, C^2, d) combination");
}

std::vector<ConicClass> conic_classes(const SurfaceModel& s, const DivisorClass& beta) {
  if (beta.r() != s.r()) fail(Err::MismatchedLattice, "conic_classes: wrong lattice");
  std::vector<ConicClass> out;
  const Int deg = anticanonical_degree(beta);
  if (deg <= 0 || deg % 2 != 0) return out;  // -K.(mQ) = 2m is even and positive
  for (Int m = 1; 2 * m <= deg; ++m) {
    bool divisible = true;
    std::vector<Int> q(beta.coeffs());
    for (Int& x : q) {
      if (x % m != 0) {
        divisible = false;
        break;
      }
      x /= m;
    }
    if (!divisible) continue;
    DivisorClass cand(beta.r(), std::move(q));
    if (anticanonical_degree(cand) != 2) continue;
    if (!is_nef(s, cand)) continue;
    out.push_back({cand, m, intersect(cand, cand)});
  }
  return out;
}

namespace {

const std::array<const char*, 7> kChar2Type1 = {"E8",  "D8",      "A1+E7", "2A1+D6",
                                                "2D4", "4A1+D4", "8A1"};
const std::array<const char*, 3> kChar3Type1 = {"E8", "A2+E6", "4A2"};
const std::array<const char*, 4> kChar2Type2 = {"E7", "A1+D6", "3A1+D4", "7A1"};

template <size_t N>
bool in_list(const std::string& t, const std::array<const char*, N>& list) {
  for (const char* x : list)
    if (t == x) return true;
  return false;
}

}  // namespace

PathologyFlags pathology_from_roots(const SurfaceModel& s, int p) {
  PathologyFlags f;  // defaults: all no, asserted
  if (p != 2 && p != 3) return f;
  if (s.is_del_pezzo()) return f;  // a del Pezzo surface has none of the pathologies
  const int d = s.degree();
  const std::string t = ade_type(s.effective_roots());
  f.source = FlagSource::sporadic_list;

  if (d == 1) {
    if (p == 2) {
      // the sporadic char-2 list is accompanied by unlisted infinite
      // families, so a non-match is inconclusive
      f.type1 = in_list(t, kChar2Type1) ? Tri::yes : Tri::unknown;
    } else {
      f.type1 = in_list(t, kChar3Type1) ? Tri::yes : Tri::unknown;
    }
  }
  if (d == 2 && p == 2) {
    f.type2 = in_list(t, kChar2Type2) ? Tri::yes : Tri::unknown;
  }
  // an inseparable bianticanonical map exists exactly in the Type 1 cases
  // when p = 2, and never when p = 3
  f.type3 = (p == 2) ? f.type1 : Tri::no;
  return f;
}

const char* census_kind_name(CensusKind k) {
  switch (k) {
    case CensusKind::BirationalFree: return "BirationalFree";
    case CensusKind::ConicCovers: return "ConicCovers";
    default: return "ConicCoversAtLeast";
  }
}

namespace {

bool is_prime_int(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

}  // namespace

ComponentCensus component_census(const SurfaceModel& s, int p, const DivisorClass& beta,
                                 bool exceptional) {
  if (p != 0 && !is_prime_int(p))
    fail(Err::InvalidChar, "component_census: characteristic must be 0 or prime");
  if (!s.is_del_pezzo()) fail(Err::NotDelPezzo, "component_census requires a del Pezzo model");
  if (!is_nef(s, beta)) fail(Err::NotNef, "component_census: beta must be nef");
  const Int deg = anticanonical_degree(beta);
  if (deg < 3) fail(Err::DegreeTooSmall, "component_census: -K.beta must be at least 3");

  ComponentCensus census;
  const int d = s.degree();
  if (exceptional) {
    census.applicable = false;
    census.reason = "exceptional surface: degree-2 double cover branched over the Klein quartic";
    return census;
  }
  if (p != 0 && p < delta(d)) {
    census.applicable = false;
    census.reason = "p < delta(" + std::to_string(d) + ") = " + std::to_string(delta(d));
    return census;
  }
  census.applicable = true;

  auto qs = conic_classes(s, beta);
  CensusEntry birational{CensusKind::BirationalFree, expected_dim(beta), {}, {}};
  if (qs.empty()) {
    census.entries.push_back(birational);
    return census;
  }
  const ConicClass& q = qs.front();
  if (q.q_square == 0) {
    census.entries.push_back({CensusKind::ConicCovers, deg - 1, q.q, q.m});
  } else if (q.q_square == 2) {
    census.entries.push_back(birational);
    census.entries.push_back({CensusKind::ConicCovers, {}, q.q, q.m});
  } else {
    census.entries.push_back(birational);
    census.entries.push_back({CensusKind::ConicCoversAtLeast, {}, q.q, q.m});
    census.lower_bound_only = true;
  }
  return census;
}

Tri excess_family_predicate(const PathologyFlags& flags) {
  if (flags.type1 == Tri::yes || flags.type2 == Tri::yes || flags.type3 == Tri::yes)
    return Tri::yes;
  if (flags.type1 == Tri::no && flags.type2 == Tri::no && flags.type3 == Tri::no)
    return Tri::no;
  return Tri::unknown;
}

}  // namespace dpz

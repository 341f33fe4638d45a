#include "dpz/adjoint.hpp"

#include "dpz/linalg.hpp"

namespace dpz {

const char* adjoint_case_name(AdjointCase c) {
  switch (c) {
    case AdjointCase::P2_O1: return "P2_O1";
    case AdjointCase::QUADRIC_O1: return "QUADRIC_O1";
    case AdjointCase::RULED_FIBRATION: return "RULED_FIBRATION";
    case AdjointCase::P2_O2: return "P2_O2";
    default: return "GENERAL";
  }
}

const char* breaking_type_name(BreakingType t) {
  switch (t) {
    case BreakingType::Type1: return "Type1";
    case BreakingType::Type2: return "Type2";
    case BreakingType::Type3: return "Type3";
    default: return "Type1or3";
  }
}

std::optional<Rat> fujita_invariant(const SurfaceModel& s, const DivisorClass& l) {
  if (!is_nef(s, l)) fail(Err::NotNef, "fujita_invariant: L must be nef");
  if (intersect(l, l) <= 0) return std::nullopt;  // not big -> infinity

  // minimize t subject to  sum_j lambda_j g_j - t L = K,  lambda, t >= 0
  std::vector<DivisorClass> gens = irreducible_negative_curves(s);
  gens.push_back(anticanonical_class(s.r()));
  const size_t rows = static_cast<size_t>(s.r()) + 1;
  const size_t nvars = gens.size() + 1;
  RatMat a(rows, RatVec(nvars));
  RatVec b(rows), c(nvars, Rat(0));
  DivisorClass k = canonical_class(s.r());
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < gens.size(); ++j) a[i][j] = Rat(gens[j].coeffs()[i]);
    a[i][gens.size()] = Rat(-l.coeffs()[i]);
    b[i] = Rat(k.coeffs()[i]);
  }
  c[gens.size()] = 1;
  LpResult lp = solve_lp(a, b, c);
  if (lp.status != LpStatus::Optimal)
    fail(Err::InternalInconsistency, "fujita_invariant: boundary LP not solvable");
  return lp.objective;
}

AInvariantResult adjoint_analyze(const SurfaceModel& s, const DivisorClass& l) {
  if (!is_nef(s, l)) fail(Err::NotNef, "adjoint_analyze: L must be nef");
  if (intersect(l, l) <= 0) fail(Err::NotBig, "adjoint_analyze: L must be big");

  AInvariantResult res;
  res.a = fujita_invariant(s, l);
  const Rat a = *res.a;

  // boundary class B = K + aL and its Zariski decomposition
  RationalClass b = RationalClass(canonical_class(s.r())) + RationalClass(l) * a;
  ZariskiDecomposition z = zariski_decompose(s, b);
  if (z.positive.is_zero()) {
    res.rigid = true;
  } else {
    res.rigid = false;
    if (intersect(z.positive, z.positive) != 0)
      fail(Err::InternalInconsistency, "adjoint_analyze: positive part has nonzero square");
    DivisorClass f = z.positive.primitive_integral();
    Int lf = intersect(l, f);
    if (lf <= 0 || a != Rat(2) / Rat(lf))
      fail(Err::InternalInconsistency, "adjoint_analyze: a != 2/(L.F) for the fiber class");
    res.fiber_class = f;
  }

  if (a == Rat(3)) {
    res.case_label = AdjointCase::P2_O1;
  } else if (a == Rat(2)) {
    res.case_label = res.rigid ? AdjointCase::QUADRIC_O1 : AdjointCase::RULED_FIBRATION;
  } else if (a == Rat(3, 2)) {
    res.case_label = AdjointCase::P2_O2;
  } else {
    res.case_label = AdjointCase::GENERAL;
  }
  return res;
}

namespace {

bool is_prime_int(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

Tri combine_or(Tri x, Tri y) {
  if (x == Tri::yes || y == Tri::yes) return Tri::yes;
  if (x == Tri::no && y == Tri::no) return Tri::no;
  return Tri::unknown;
}

}  // namespace

std::vector<BreakingCase> classify_breaking_cases(const SurfaceModel& s, int p,
                                                  const PathologyFlags& flags) {
  if (p != 0 && !is_prime_int(p))
    fail(Err::InvalidChar, "classify_breaking_cases: characteristic must be 0 or prime");
  std::vector<BreakingCase> out;
  if (s.is_del_pezzo()) return out;  // no breaking maps on a del Pezzo surface
  const int d = s.degree();

  auto add = [&](int id, const char* desc, std::set<int> chars, int deg, BreakingType type,
                 Rat a, Tri flag) {
    if (deg != d || !chars.count(p) || flag == Tri::no) return;
    BreakingCase bc;
    bc.case_id = id;
    bc.description = desc;
    bc.required_char = std::move(chars);
    bc.required_degree = deg;
    bc.required_type = type;
    bc.a_value = std::move(a);
    bc.possible = flag;
    out.push_back(std::move(bc));
  };

  add(1, "base change of a quasi-elliptic fibration", {2, 3}, 1, BreakingType::Type1, Rat(2),
      flags.type1);
  add(2, "purely inseparable degree-2 cover of the plane", {2}, 2, BreakingType::Type2,
      Rat(3, 2), flags.type2);
  add(3, "degree-2 cover of the quadric cone", {2}, 1, BreakingType::Type3, Rat(2), flags.type3);
  add(4, "non-separable degree-4 cover of the plane", {2}, 1, BreakingType::Type1or3, Rat(3, 2),
      combine_or(flags.type1, flags.type3));
  return out;
}

std::pair<Rat, bool> breaking_dim_bound(const Rat& a, const Int& deg_pushed, int dim_x) {
  if (a <= 0) fail(Err::InvalidInput, "breaking_dim_bound: a must be positive");
  if (deg_pushed < 0) fail(Err::InvalidInput, "breaking_dim_bound: degree must be nonnegative");
  Rat bound = a * Rat(deg_pushed) + Rat(dim_x) - Rat(3);
  Rat expected = Rat(deg_pushed) + Rat(dim_x) - Rat(3);
  return {bound, bound > expected};
}

}  // namespace dpz

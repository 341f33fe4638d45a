#include "dpz/ffcover.hpp"

#include <algorithm>

namespace dpz {

namespace {

using Elem = FiniteField::Elem;

void require_quartic_plane(const FinitePoly& g4, int want_char) {
  if (g4.vars().size() != 3)
    fail(Err::WrongDegree, "expected a polynomial in three plane variables");
  if (!g4.is_homogeneous(4) || g4.is_zero())
    fail(Err::WrongDegree, "expected a nonzero homogeneous quartic");
  if (g4.field().p() != want_char)
    fail(Err::InvalidChar, "wrong characteristic for this criterion");
}

// rebuild a prime-field polynomial over an extension of the same
// characteristic (identity when the fields coincide)
FinitePoly lift(const FinitePoly& f, const FiniteField& ext) {
  if (f.field().same_as(ext)) return f;
  if (f.field().p() != ext.p() || f.field().k() != 1)
    fail(Err::FieldMismatch, "cannot lift coefficients into the requested field");
  FinitePoly out(ext, f.vars());
  for (const auto& [e, c] : f.terms()) out.set_coeff(e, ext.from_int(static_cast<long long>(c)));
  return out;
}

}  // namespace

CubicSurface::CubicSurface(FinitePoly f) : f_(std::move(f)) {
  if (f_.vars().size() != 4)
    fail(Err::WrongDegree, "CubicSurface: expected four variables");
  if (!f_.is_homogeneous(3) || f_.is_zero())
    fail(Err::WrongDegree, "CubicSurface: expected a nonzero homogeneous cubic");
  if (f_.field().p() != 2) fail(Err::InvalidChar, "CubicSurface: characteristic must be 2");
}

Elem CubicSurface::y(int i, int j, int k, int l) const { return f_.coeff({i, j, k, l}); }

DoublePlaneCover::DoublePlaneCover(FinitePoly g2, FinitePoly g4)
    : g2_(std::move(g2)), g4_(std::move(g4)) {
  if (g2_.vars().size() != 3 || g4_.vars() != g2_.vars())
    fail(Err::WrongDegree, "DoublePlaneCover: expected matching three-variable polynomials");
  if (!g2_.field().same_as(g4_.field()))
    fail(Err::FieldMismatch, "DoublePlaneCover: g2 and g4 over different fields");
  if (g2_.field().p() != 2) fail(Err::InvalidChar, "DoublePlaneCover: characteristic must be 2");
  if (!g2_.is_homogeneous(2)) fail(Err::WrongDegree, "DoublePlaneCover: g2 must have degree 2");
  if (!g4_.is_homogeneous(4) || g4_.is_zero())
    fail(Err::WrongDegree, "DoublePlaneCover: g4 must be a nonzero quartic");
}

bool case2a_insep_conditions(const FinitePoly& g4) {
  require_quartic_plane(g4, 2);
  const Elem a130 = g4.coeff({1, 3, 0}), a103 = g4.coeff({1, 0, 3});
  const Elem a121 = g4.coeff({1, 2, 1}), a310 = g4.coeff({3, 1, 0});
  const Elem a112 = g4.coeff({1, 1, 2}), a301 = g4.coeff({3, 0, 1});
  return a130 == 0 && a103 == 0 && a121 == a310 && a112 == a301;
}

bool case2b_insep_conditions(const FinitePoly& g4) {
  require_quartic_plane(g4, 2);
  return g4.coeff({3, 1, 0}) == 0 && g4.coeff({3, 0, 1}) == 0;
}

Elem case2c_cusp_slope(const FinitePoly& g4, Elem b) {
  require_quartic_plane(g4, 2);
  const FiniteField& f = g4.field();
  const auto& v = g4.vars();
  const std::vector<Elem> p{f.one(), f.zero(), b};

  const Elem gx = g4.derivative(v[0]).eval(p);
  if (gx == f.zero()) fail(Err::Undefined, "case2c_cusp_slope: dg4/dx vanishes at (1:0:b)");
  const Elem gy = g4.derivative(v[1]).eval(p);
  const Elem gz = g4.derivative(v[2]).eval(p);
  if (gz == f.zero())
    fail(Err::InternalInconsistency, "case2c_cusp_slope: dg4/dz(p) = 0 despite dg4/dx(p) != 0");
  const Elem c = f.mul(gy, f.inv(gz));

  // independent closed-form check straight from the coefficients
  const Elem b2 = f.mul(b, b), b3 = f.mul(b2, b);
  const Elem lhs_mult = f.add(g4.coeff({3, 0, 1}), f.mul(g4.coeff({1, 0, 3}), b2));
  Elem rhs = g4.coeff({3, 1, 0});
  rhs = f.add(rhs, f.mul(g4.coeff({2, 1, 1}), b));
  rhs = f.add(rhs, f.mul(g4.coeff({1, 1, 2}), b2));
  rhs = f.add(rhs, f.mul(g4.coeff({0, 1, 3}), b3));
  if (f.mul(c, lhs_mult) != rhs)
    fail(Err::InternalInconsistency, "case2c_cusp_slope: derivative and coefficient routes disagree");
  return c;
}

std::optional<SingularWitness> double_cover_singular_search(const DoublePlaneCover& cover,
                                                            int max_ext) {
  if (max_ext < 1 || max_ext > 9)
    fail(Err::InvalidInput, "double_cover_singular_search: max_ext must be in [1,9]");
  const auto& vars = cover.g2().vars();
  for (int k = 1; k <= max_ext; ++k) {
    if (cover.field().k() != 1 && cover.field().k() != k) continue;
    const FiniteField& f = FiniteField::get(2, k);
    const FinitePoly g2 = lift(cover.g2(), f);
    const FinitePoly g4 = lift(cover.g4(), f);
    std::array<FinitePoly, 3> dg2{g2.derivative(vars[0]), g2.derivative(vars[1]),
                                  g2.derivative(vars[2])};
    std::array<FinitePoly, 3> dg4{g4.derivative(vars[0]), g4.derivative(vars[1]),
                                  g4.derivative(vars[2])};
    for (int chart = 0; chart < 3; ++chart) {
      for (Elem u = 0; u < f.size(); ++u) {
        for (Elem v = 0; v < f.size(); ++v) {
          std::vector<Elem> pt(3);
          pt[static_cast<size_t>(chart)] = f.one();
          int slot = 0;
          for (int i = 0; i < 3; ++i) {
            if (i == chart) continue;
            pt[static_cast<size_t>(i)] = (slot++ == 0) ? u : v;
          }
          const Elem g2p = g2.eval(pt);
          if (g2p != f.zero()) continue;  // dF/dw = g2 must vanish
          const Elem g4p = g4.eval(pt);
          for (Elem w = 0; w < f.size(); ++w) {
            // F = w^2 + w*g2 + g4; with g2(pt) = 0 this is w^2 + g4(pt)
            if (f.add(f.mul(w, w), g4p) != f.zero()) continue;
            bool singular = true;
            for (int i = 0; i < 3 && singular; ++i) {
              if (i == chart) continue;  // chart coordinate is constant 1
              const Elem di = f.add(f.mul(w, dg2[static_cast<size_t>(i)].eval(pt)),
                                    dg4[static_cast<size_t>(i)].eval(pt));
              if (di != f.zero()) singular = false;
            }
            if (singular)
              return SingularWitness{chart, k, {pt[0], pt[1], pt[2], w}};
          }
        }
      }
    }
  }
  return std::nullopt;
}

Elem cubic_c4(const CubicSurface& s, const std::array<Elem, 4>& z) {
  const FiniteField& f = s.field();
  Elem lin = f.mul(s.y(0, 1, 1, 1), z[0]);
  lin = f.add(lin, f.mul(s.y(1, 0, 1, 1), z[1]));
  lin = f.add(lin, f.mul(s.y(1, 1, 0, 1), z[2]));
  lin = f.add(lin, f.mul(s.y(1, 1, 1, 0), z[3]));
  return f.pow(lin, 4);
}

bool cubic_all_cuspidal_condition(const CubicSurface& s) {
  return s.y(0, 1, 1, 1) == 0 && s.y(1, 0, 1, 1) == 0 && s.y(1, 1, 0, 1) == 0 &&
         s.y(1, 1, 1, 0) == 0;
}

int tangent_flex_multiplicity(const FinitePoly& q4, const FiniteField& ext,
                              const std::array<Elem, 3>& pt) {
  require_quartic_plane(q4, 3);
  const FinitePoly q = lift(q4, ext);
  const auto& vars = q.vars();
  const std::vector<Elem> p{pt[0], pt[1], pt[2]};
  if (q.eval(p) != ext.zero()) fail(Err::NotOnCurve, "tangent_flex_multiplicity: point not on curve");

  std::array<Elem, 3> g{q.derivative(vars[0]).eval(p), q.derivative(vars[1]).eval(p),
                        q.derivative(vars[2]).eval(p)};
  if (g[0] == 0 && g[1] == 0 && g[2] == 0)
    fail(Err::SingularPoint, "tangent_flex_multiplicity: singular point of the curve");

  // direction v on the tangent line g.v = 0, independent of pt
  size_t j = 0;
  while (g[j] == 0) ++j;
  std::array<Elem, 3> v{};
  bool found = false;
  for (size_t m = 0; m < 3 && !found; ++m) {
    if (m == j) continue;
    // candidate v = e_m - (g_m / g_j) e_j
    std::array<Elem, 3> cand{};
    cand[m] = ext.one();
    cand[j] = ext.neg(ext.mul(g[m], ext.inv(g[j])));
    // independence from pt: some 2x2 minor of (pt, cand) is nonzero
    for (size_t a = 0; a < 3 && !found; ++a) {
      for (size_t b2 = a + 1; b2 < 3 && !found; ++b2) {
        Elem minor = ext.sub(ext.mul(pt[a], cand[b2]), ext.mul(pt[b2], cand[a]));
        if (minor != ext.zero()) {
          v = cand;
          found = true;
        }
      }
    }
  }
  if (!found)
    fail(Err::InternalInconsistency, "tangent_flex_multiplicity: no independent line direction");

  // restrict q to the line t -> pt + t*v and read off the vanishing order
  FinitePoly restricted(ext, {"t"});
  {
    std::array<FinitePoly, 3> coord{FinitePoly(ext, {"t"}), FinitePoly(ext, {"t"}),
                                    FinitePoly(ext, {"t"})};
    for (size_t i = 0; i < 3; ++i) {
      coord[i].set_coeff({0}, pt[i]);
      coord[i].set_coeff({1}, ext.add(coord[i].coeff({1}), v[i]));
    }
    for (const auto& [e, c] : q.terms()) {
      FinitePoly term(ext, {"t"});
      term.set_coeff({0}, c);
      for (size_t i = 0; i < 3; ++i)
        if (e[i] > 0) term = term * coord[i].pow(e[i]);
      restricted = restricted + term;
    }
  }
  if (restricted.is_zero()) return 5;  // tangent line contained in the curve
  int order = 1000;
  for (const auto& [e, c] : restricted.terms()) {
    (void)c;
    order = std::min(order, e[0]);
  }
  if (order < 2)
    fail(Err::InternalInconsistency, "tangent_flex_multiplicity: tangency order below 2");
  return order;
}

int tangent_flex_multiplicity(const FinitePoly& q4, const std::array<Elem, 3>& pt) {
  return tangent_flex_multiplicity(q4, q4.field(), pt);
}

const char* flex_verdict_name(FlexVerdict v) {
  switch (v) {
    case FlexVerdict::all_flex: return "all_flex";
    case FlexVerdict::found_nonflex: return "found_nonflex";
    default: return "inconclusive";
  }
}

FlexSampleResult nonreflexive_sample_test(const FinitePoly& q4, int ext) {
  require_quartic_plane(q4, 3);
  if (ext < 1 || ext > 6)
    fail(Err::InvalidInput, "nonreflexive_sample_test: ext must be in [1,6]");
  const FiniteField& f =
      (q4.field().k() == ext) ? q4.field() : FiniteField::get(3, ext);
  const FinitePoly q = lift(q4, f);
  const auto& vars = q.vars();
  std::array<FinitePoly, 3> dq{q.derivative(vars[0]), q.derivative(vars[1]),
                               q.derivative(vars[2])};

  FlexSampleResult res{FlexVerdict::inconclusive, {}, 0};
  int min_mult = 1000;
  bool any_smooth = false;

  auto visit = [&](const std::array<Elem, 3>& pt) -> bool {
    const std::vector<Elem> p{pt[0], pt[1], pt[2]};
    if (q.eval(p) != f.zero()) return true;
    if (dq[0].eval(p) == 0 && dq[1].eval(p) == 0 && dq[2].eval(p) == 0) return true;
    any_smooth = true;
    int m = tangent_flex_multiplicity(q4, f, pt);
    min_mult = std::min(min_mult, m);
    if (m < 3) {
      res.verdict = FlexVerdict::found_nonflex;
      res.witness = pt;
      return false;
    }
    return true;
  };

  bool keep_going = true;
  // projective representatives (1:y:z), (0:1:z), (0:0:1)
  for (Elem y = 0; y < f.size() && keep_going; ++y)
    for (Elem z = 0; z < f.size() && keep_going; ++z)
      keep_going = visit({f.one(), y, z});
  for (Elem z = 0; z < f.size() && keep_going; ++z)
    keep_going = visit({f.zero(), f.one(), z});
  if (keep_going) keep_going = visit({f.zero(), f.zero(), f.one()});

  if (res.verdict != FlexVerdict::found_nonflex)
    res.verdict = any_smooth ? FlexVerdict::all_flex : FlexVerdict::inconclusive;
  res.min_multiplicity = any_smooth ? min_mult : 0;
  return res;
}

}  // namespace dpz

#include "dpz/surface.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "dpz/linalg.hpp"

namespace dpz {

SurfaceModel::SurfaceModel(int r, RootBasis effective_roots)
    : r_(r), roots_(std::move(effective_roots)) {
  if (r_ < 0 || r_ > 8) fail(Err::InvalidR, "SurfaceModel: r must be in [0,8]");
  if (roots_.r() != r_) fail(Err::MismatchedLattice, "SurfaceModel: root basis on wrong lattice");
}

std::vector<DivisorClass> irreducible_negative_curves(const SurfaceModel& s) {
  const int r = s.r();
  if (r == 0) return {DivisorClass::hyperplane(0)};
  if (r == 1) {
    // effective cone generators of F1
    return {DivisorClass::exceptional(1, 1),
            DivisorClass::hyperplane(1) - DivisorClass::exceptional(1, 1)};
  }
  std::vector<DivisorClass> out = s.effective_roots().roots();
  for (const auto& e : enum_minus1_classes(r)) {
    bool keep = true;
    for (const auto& rho : s.effective_roots().roots()) {
      if (intersect(e, rho) < 0) {
        keep = false;
        break;
      }
    }
    if (keep) out.push_back(e);
  }
  return out;
}

bool is_nef(const SurfaceModel& s, const DivisorClass& d) {
  if (d.r() != s.r()) fail(Err::MismatchedLattice, "is_nef: class on wrong lattice");
  for (const auto& c : irreducible_negative_curves(s))
    if (intersect(d, c) < 0) return false;
  if (intersect(d, DivisorClass::hyperplane(s.r())) < 0) return false;
  if (intersect(anticanonical_class(s.r()), d) < 0) return false;
  return true;
}

bool is_nef(const SurfaceModel& s, const RationalClass& d) {
  if (d.is_zero()) return true;
  // nef-ness only depends on the ray, so test the primitive integral point
  return is_nef(s, d.primitive_integral());
}

namespace {

bool cone_membership(const SurfaceModel& s, const RationalClass& d) {
  if (d.r() != s.r()) fail(Err::MismatchedLattice, "is_pseudo_effective: wrong lattice");
  if (d.is_zero()) return true;
  std::vector<DivisorClass> gens = irreducible_negative_curves(s);
  gens.push_back(anticanonical_class(s.r()));
  const size_t rows = static_cast<size_t>(s.r()) + 1;
  RatMat a(rows, RatVec(gens.size()));
  RatVec b(rows);
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < gens.size(); ++j) a[i][j] = Rat(gens[j].coeffs()[i]);
    b[i] = d.coeffs()[i];
  }
  return cone_feasible(a, b);
}

}  // namespace

bool is_pseudo_effective(const SurfaceModel& s, const DivisorClass& d) {
  return cone_membership(s, RationalClass(d));
}

bool is_pseudo_effective(const SurfaceModel& s, const RationalClass& d) {
  return cone_membership(s, d);
}

ZariskiDecomposition zariski_decompose(const SurfaceModel& s, const DivisorClass& d) {
  return zariski_decompose(s, RationalClass(d));
}

ZariskiDecomposition zariski_decompose(const SurfaceModel& s, const RationalClass& d) {
  if (d.r() != s.r()) fail(Err::MismatchedLattice, "zariski_decompose: wrong lattice");

  std::vector<DivisorClass> candidates;
  for (const auto& c : irreducible_negative_curves(s))
    if (intersect(c, c) < 0) candidates.push_back(c);

  std::vector<size_t> support;
  std::vector<bool> in_support(candidates.size(), false);
  RatVec coeffs;

  auto solve_support = [&]() -> RatVec {
    const size_t k = support.size();
    if (k == 0) return {};
    RatMat gram(k, RatVec(k));
    RatVec rhs(k);
    for (size_t i = 0; i < k; ++i) {
      for (size_t j = 0; j < k; ++j)
        gram[i][j] = Rat(intersect(candidates[support[i]], candidates[support[j]]));
      rhs[i] = intersect(d, candidates[support[i]]);
    }
    auto sol = solve_linear(gram, rhs);
    if (!sol) fail(Err::NotPseudoEffective, "zariski_decompose: singular Gram system");
    return *sol;
  };

  while (true) {
    coeffs = solve_support();
    RationalClass neg = RationalClass::zero(s.r());
    for (size_t i = 0; i < support.size(); ++i)
      neg = neg + RationalClass(candidates[support[i]]) * coeffs[i];
    RationalClass pos = d - neg;
    bool grew = false;
    for (size_t j = 0; j < candidates.size(); ++j) {
      if (in_support[j]) continue;
      if (intersect(pos, candidates[j]) < 0) {
        support.push_back(j);
        in_support[j] = true;
        grew = true;
      }
    }
    if (!grew) break;
  }

  // validate: nonnegative coefficients, negative definite Gram
  for (const Rat& c : coeffs)
    if (c < 0) fail(Err::NotPseudoEffective, "zariski_decompose: negative Gram coefficient");
  {
    std::vector<size_t> active;
    for (size_t i = 0; i < support.size(); ++i)
      if (coeffs[i] > 0) active.push_back(support[i]);
    RatMat gram(active.size(), RatVec(active.size()));
    for (size_t i = 0; i < active.size(); ++i)
      for (size_t j = 0; j < active.size(); ++j)
        gram[i][j] = Rat(intersect(candidates[active[i]], candidates[active[j]]));
    if (!active.empty() && !is_negative_definite(gram))
      fail(Err::NotPseudoEffective, "zariski_decompose: Gram matrix not negative definite");
  }

  ZariskiDecomposition z{RationalClass::zero(s.r()), {}};
  RationalClass neg = RationalClass::zero(s.r());
  for (size_t i = 0; i < support.size(); ++i) {
    if (coeffs[i] == 0) continue;
    z.negative.emplace_back(candidates[support[i]], coeffs[i]);
    neg = neg + RationalClass(candidates[support[i]]) * coeffs[i];
  }
  std::sort(z.negative.begin(), z.negative.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  z.positive = d - neg;
  if (!is_nef(s, z.positive))
    fail(Err::NotPseudoEffective, "zariski_decompose: positive part not nef");
  for (const auto& [curve, c] : z.negative) {
    (void)c;
    if (intersect(z.positive, curve) != 0)
      fail(Err::InternalInconsistency, "zariski_decompose: positive part not orthogonal");
  }
  return z;
}

namespace {

// Simple roots generating the Weyl group of the rank r+1 lattice.
std::vector<DivisorClass> simple_roots(int r) {
  std::vector<DivisorClass> roots;
  for (int i = 1; i < r; ++i)
    roots.push_back(DivisorClass::exceptional(r, i) - DivisorClass::exceptional(r, i + 1));
  if (r >= 3) {
    DivisorClass h = DivisorClass::hyperplane(r);
    roots.push_back(h - DivisorClass::exceptional(r, 1) - DivisorClass::exceptional(r, 2) -
                    DivisorClass::exceptional(r, 3));
  }
  return roots;
}

// Word of simple reflections mapping the given (-1)-class onto E_r,
// found by breadth-first search over the Weyl orbit of E_r.
std::vector<DivisorClass> weyl_word_to_last(int r, const DivisorClass& e0) {
  const DivisorClass target = DivisorClass::exceptional(r, r);
  auto simples = simple_roots(r);
  // BFS from the target; parent edges give the word back to e0.
  std::map<DivisorClass, std::pair<DivisorClass, int>> parent;  // node -> (prev, root idx)
  std::vector<DivisorClass> frontier{target};
  std::map<DivisorClass, bool> seen;
  seen[target] = true;
  bool found = (e0 == target);
  while (!frontier.empty() && !found) {
    std::vector<DivisorClass> next;
    for (const auto& v : frontier) {
      for (size_t k = 0; k < simples.size(); ++k) {
        DivisorClass w = reflect(v, simples[k]);
        if (seen.count(w)) continue;
        seen[w] = true;
        parent.emplace(w, std::make_pair(v, static_cast<int>(k)));
        if (w == e0) {
          found = true;
        }
        next.push_back(w);
      }
      if (found) break;
    }
    frontier = std::move(next);
  }
  if (!found)
    fail(Err::DecompositionFailed, "nef_decompose: class not in the Weyl orbit of E_r");
  std::vector<DivisorClass> word;
  DivisorClass cur = e0;
  while (!(cur == target)) {
    auto it = parent.find(cur);
    word.push_back(simples[static_cast<size_t>(it->second.second)]);
    cur = it->second.first;
  }
  return word;  // applying in order sends e0 to target
}

DivisorClass apply_word(const std::vector<DivisorClass>& word, DivisorClass v) {
  for (const auto& rho : word) v = reflect(v, rho);
  return v;
}

DivisorClass apply_word_inverse(const std::vector<DivisorClass>& word, DivisorClass v) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = reflect(v, *it);
  return v;
}

DivisorClass drop_last(const DivisorClass& v) {
  std::vector<Int> c(v.coeffs().begin(), v.coeffs().end() - 1);
  return DivisorClass(v.r() - 1, std::move(c));
}

DivisorClass extend_by_zero(const DivisorClass& v) {
  std::vector<Int> c = v.coeffs();
  c.emplace_back(0);
  return DivisorClass(v.r() + 1, std::move(c));
}

}  // namespace

NefDecomposition nef_decompose(const SurfaceModel& s, const DivisorClass& d) {
  if (!s.is_del_pezzo()) fail(Err::NotDelPezzo, "nef_decompose requires a del Pezzo model");
  if (s.r() < 1 || s.r() > 8) fail(Err::InvalidR, "nef_decompose: r must be in [1,8]");
  if (!is_nef(s, d)) fail(Err::NotNef, "nef_decompose: class is not nef");

  NefDecomposition result;
  std::vector<std::vector<DivisorClass>> words;  // per regular stage
  std::vector<Int> stage_n;

  DivisorClass cur = d;
  int cur_r = s.r();
  while (cur_r >= 2) {
    SurfaceModel stage = SurfaceModel::del_pezzo(cur_r);
    auto curves = enum_minus1_classes(cur_r);
    Int n = intersect(cur, curves.front());
    for (const auto& e : curves) n = std::min(n, intersect(cur, e));
    if (n < 0) fail(Err::DecompositionFailed, "nef_decompose: negative multiplier");
    stage_n.push_back(n);
    cur = cur + canonical_class(cur_r) * n;
    if (!is_nef(stage, cur))
      fail(Err::DecompositionFailed, "nef_decompose: non-nef intermediate");

    std::vector<DivisorClass> orth;
    for (const auto& e : curves)
      if (intersect(cur, e) == 0) orth.push_back(e);
    if (orth.empty())
      fail(Err::InternalInconsistency, "nef_decompose: no orthogonal (-1)-curve after step");
    std::sort(orth.begin(), orth.end());

    if (cur_r == 2) {
      // the two orbits of (-1)-classes on Bl_2 P^2: {E1,E2} contract within
      // the blow-up basis, H-E1-E2 contracts to the quadric P1 x P1
      DivisorClass e1 = DivisorClass::exceptional(2, 1);
      DivisorClass e2 = DivisorClass::exceptional(2, 2);
      std::optional<DivisorClass> pick;
      for (const auto& e : orth)
        if (e == e1 || e == e2) {
          pick = e;
          break;
        }
      if (!pick) {
        // the degree-8 end is the quadric; residual stays orthogonal to H-E1-E2
        result.ends_on_quadric = true;
        result.chain.push_back(orth.front());
        break;
      }
      result.chain.push_back(*pick);
      auto word = weyl_word_to_last(2, *pick);
      cur = drop_last(apply_word(word, cur));
      words.push_back(std::move(word));
      cur_r = 1;
    } else {
      DivisorClass e0 = orth.front();
      result.chain.push_back(e0);
      auto word = weyl_word_to_last(cur_r, e0);
      cur = drop_last(apply_word(word, cur));
      words.push_back(std::move(word));
      --cur_r;
    }
  }

  result.coefficients = stage_n;
  result.residual = cur;
  {
    SurfaceModel end_model = SurfaceModel::del_pezzo(result.ends_on_quadric ? 2 : cur_r);
    if (!is_nef(end_model, result.residual))
      fail(Err::DecompositionFailed, "nef_decompose: residual not nef");
  }

  // replay the chain and verify exact reconstruction
  {
    DivisorClass acc = result.residual;
    int top_r = result.ends_on_quadric ? 2 : 1;
    int stages = static_cast<int>(stage_n.size());
    for (int i = stages - 1; i >= 0; --i) {
      bool quadric_stage = result.ends_on_quadric && i == stages - 1;
      if (!quadric_stage) {
        acc = apply_word_inverse(words[static_cast<size_t>(i)], extend_by_zero(acc));
        ++top_r;
      }
      acc = acc + anticanonical_class(acc.r()) * stage_n[static_cast<size_t>(i)];
    }
    (void)top_r;
    if (!(acc == d))
      fail(Err::InternalInconsistency, "nef_decompose: reconstruction mismatch");
  }
  return result;
}

}  // namespace dpz

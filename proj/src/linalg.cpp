#include "dpz/linalg.hpp"

#include <cassert>
#include <cstddef>

namespace dpz {

std::optional<RatVec> solve_linear(RatMat m, RatVec rhs) {
  const size_t n = m.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    Rat d = m[col][col];
    for (size_t j = col; j < n; ++j) m[col][j] /= d;
    rhs[col] /= d;
    for (size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      Rat f = m[row][col];
      for (size_t j = col; j < n; ++j) m[row][j] -= f * m[col][j];
      rhs[row] -= f * rhs[col];
    }
  }
  return rhs;
}

int matrix_rank(RatMat m) {
  if (m.empty()) return 0;
  const size_t rows = m.size(), cols = m[0].size();
  int rank = 0;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t piv = row;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[row]);
    for (size_t i = row + 1; i < rows; ++i) {
      if (m[i][col] == 0) continue;
      Rat f = m[i][col] / m[row][col];
      for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

std::vector<Rat> leading_principal_minors(const RatMat& m) {
  const size_t n = m.size();
  std::vector<Rat> minors;
  minors.reserve(n);
  for (size_t k = 1; k <= n; ++k) {
    // fraction-free expansion is overkill at rank <= 9; plain elimination
    RatMat sub(k, RatVec(k));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) sub[i][j] = m[i][j];
    Rat det = 1;
    bool singular = false;
    for (size_t col = 0; col < k && !singular; ++col) {
      size_t piv = col;
      while (piv < k && sub[piv][col] == 0) ++piv;
      if (piv == k) {
        singular = true;
        break;
      }
      if (piv != col) {
        std::swap(sub[piv], sub[col]);
        det = -det;
      }
      det *= sub[col][col];
      for (size_t i = col + 1; i < k; ++i) {
        if (sub[i][col] == 0) continue;
        Rat f = sub[i][col] / sub[col][col];
        for (size_t j = col; j < k; ++j) sub[i][j] -= f * sub[col][j];
      }
    }
    minors.push_back(singular ? Rat(0) : det);
  }
  return minors;
}

bool is_negative_definite(const RatMat& m) {
  auto minors = leading_principal_minors(m);
  for (size_t k = 0; k < minors.size(); ++k) {
    bool want_positive = (k % 2 == 1);  // det_1 < 0, det_2 > 0, ...
    if (want_positive ? minors[k] <= 0 : minors[k] >= 0) return false;
  }
  return true;
}

namespace {

// Dense simplex tableau over exact rationals, Bland's rule.
class Tableau {
 public:
  Tableau(const RatMat& a, const RatVec& b) : m_(a.size()), n_(a.empty() ? 0 : a[0].size()) {
    // columns: n structural + m artificial, plus rhs
    t_.assign(m_, RatVec(n_ + m_ + 1, Rat(0)));
    basis_.resize(m_);
    for (size_t i = 0; i < m_; ++i) {
      bool flip = b[i] < 0;
      for (size_t j = 0; j < n_; ++j) t_[i][j] = flip ? -a[i][j] : a[i][j];
      t_[i][n_ + i] = 1;
      t_[i].back() = flip ? -b[i] : b[i];
      basis_[i] = n_ + i;
    }
  }

  // Minimize the given objective over the current feasible region.
  // cost has one entry per column (structural + artificial).
  LpStatus minimize(const RatVec& cost) {
    // reduced cost row: z_j - c_j maintained implicitly; recompute per pivot
    // via the classic approach: keep a full cost row.
    RatVec row(n_ + m_ + 1, Rat(0));
    for (size_t j = 0; j < n_ + m_; ++j) row[j] = -cost[j];
    for (size_t i = 0; i < m_; ++i) {
      const Rat& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (size_t j = 0; j <= n_ + m_; ++j) row[j] += cb * t_[i][j];
    }
    while (true) {
      // Bland: entering column = smallest index with positive reduced profit
      size_t enter = n_ + m_;
      for (size_t j = 0; j < n_ + m_; ++j) {
        if (row[j] > 0 && !banned_[j]) {
          enter = j;
          break;
        }
      }
      if (enter == n_ + m_) return LpStatus::Optimal;
      // ratio test, Bland tie-break on smallest basis variable
      size_t leave = m_;
      Rat best;
      for (size_t i = 0; i < m_; ++i) {
        if (t_[i][enter] <= 0) continue;
        Rat ratio = t_[i].back() / t_[i][enter];
        if (leave == m_ || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m_) return LpStatus::Unbounded;
      pivot(leave, enter, row);
    }
  }

  Rat objective_value(const RatVec& cost) const {
    Rat v = 0;
    for (size_t i = 0; i < m_; ++i) v += cost[basis_[i]] * t_[i].back();
    return v;
  }

  // After phase 1, forbid artificial columns and pivot any remaining
  // artificial basis variables out where possible.
  void retire_artificials() {
    banned_.assign(n_ + m_, false);
    for (size_t j = n_; j < n_ + m_; ++j) banned_[j] = true;
    for (size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      // degenerate artificial still in basis (rhs must be 0); swap it for
      // any structural column with a nonzero entry in this row
      for (size_t j = 0; j < n_; ++j) {
        if (t_[i][j] != 0) {
          RatVec dummy(n_ + m_ + 1, Rat(0));
          pivot(i, j, dummy);
          break;
        }
      }
    }
  }

  RatVec solution(size_t nvars) const {
    RatVec x(nvars, Rat(0));
    for (size_t i = 0; i < m_; ++i)
      if (basis_[i] < nvars) x[basis_[i]] = t_[i].back();
    return x;
  }

  void init_bans() { banned_.assign(n_ + m_, false); }

 private:
  void pivot(size_t leave, size_t enter, RatVec& row) {
    Rat d = t_[leave][enter];
    for (auto& v : t_[leave]) v /= d;
    for (size_t i = 0; i < m_; ++i) {
      if (i == leave || t_[i][enter] == 0) continue;
      Rat f = t_[i][enter];
      for (size_t j = 0; j <= n_ + m_; ++j) t_[i][j] -= f * t_[leave][j];
    }
    if (!row.empty() && row[enter] != 0) {
      Rat f = row[enter];
      for (size_t j = 0; j <= n_ + m_; ++j) row[j] -= f * t_[leave][j];
    }
    basis_[leave] = enter;
  }

  size_t m_, n_;
  RatMat t_;
  std::vector<size_t> basis_;
  std::vector<bool> banned_;
};

}  // namespace

LpResult solve_lp(const RatMat& a, const RatVec& b, const RatVec& c) {
  const size_t m = a.size();
  const size_t n = a.empty() ? c.size() : a[0].size();
  Tableau tab(a, b);
  tab.init_bans();
  // phase 1: minimize sum of artificials
  RatVec phase1(n + m, Rat(0));
  for (size_t j = n; j < n + m; ++j) phase1[j] = 1;
  LpStatus s1 = tab.minimize(phase1);
  (void)s1;  // phase 1 is always bounded below by 0
  if (tab.objective_value(phase1) != 0) return {LpStatus::Infeasible, Rat(0), {}};
  tab.retire_artificials();
  // phase 2
  RatVec phase2(n + m, Rat(0));
  for (size_t j = 0; j < n && j < c.size(); ++j) phase2[j] = c[j];
  LpStatus s2 = tab.minimize(phase2);
  if (s2 == LpStatus::Unbounded) return {LpStatus::Unbounded, Rat(0), {}};
  return {LpStatus::Optimal, tab.objective_value(phase2), tab.solution(n)};
}

bool cone_feasible(const RatMat& a, const RatVec& b) {
  RatVec c(a.empty() ? 0 : a[0].size(), Rat(0));
  return solve_lp(a, b, c).status == LpStatus::Optimal;
}

}  // namespace dpz

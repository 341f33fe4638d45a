#pragma once

#include <optional>
#include <vector>

#include "dpz/numeric.hpp"

namespace dpz {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row-major

// Solve M x = rhs for square M by exact Gaussian elimination.
// Returns nullopt when M is singular.
std::optional<RatVec> solve_linear(RatMat m, RatVec rhs);

// Rank of a rational matrix.
int matrix_rank(RatMat m);

// Leading principal minors det(M[0..k-1, 0..k-1]) for k = 1..n.
std::vector<Rat> leading_principal_minors(const RatMat& m);

// True iff the symmetric matrix is negative definite: (-1)^k det_k > 0.
bool is_negative_definite(const RatMat& m);

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status;
  Rat objective;  // valid when Optimal
  RatVec x;       // valid when Optimal
};

// Exact rational simplex with Bland's rule (deterministic, terminating):
// minimize c.x subject to A x = b, x >= 0.
LpResult solve_lp(const RatMat& a, const RatVec& b, const RatVec& c);

// Feasibility of A x = b, x >= 0 (phase 1 only).
bool cone_feasible(const RatMat& a, const RatVec& b);

}  // namespace dpz

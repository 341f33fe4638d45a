#include "dpz/curves.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "dpz/linalg.hpp"

namespace dpz {

namespace {

// Enumerate classes aH - sum b_i E_i with C^2 = square and -K.C = degree.
// For each a the b-vector must satisfy sum b_i = 3a - degree and
// sum b_i^2 = a^2 - square; the recursion prunes with Cauchy-Schwarz.
std::vector<DivisorClass> enum_by_invariants(int r, long long square, long long degree) {
  if (r < 1 || r > 8) fail(Err::InvalidR, "class enumeration: r must be in [1,8]");
  std::vector<DivisorClass> out;
  std::vector<long long> b(static_cast<size_t>(r));

  // box for a: (3a - degree)^2 <= r(a^2 - square)
  for (long long a = -8; a <= 8; ++a) {
    long long sum_target = 3 * a - degree;
    long long sq_target = a * a - square;
    if (sq_target < 0) continue;
    if (sum_target * sum_target > r * sq_target) continue;

    // depth-first over b_1..b_r
    auto rec = [&](auto&& self, int idx, long long sum_left, long long sq_left) -> void {
      int left = r - idx;
      if (left == 0) {
        if (sum_left == 0 && sq_left == 0) {
          std::vector<Int> c(static_cast<size_t>(r) + 1);
          c[0] = a;
          for (int i = 0; i < r; ++i) c[static_cast<size_t>(i) + 1] = b[static_cast<size_t>(i)];
          out.emplace_back(r, std::move(c));
        }
        return;
      }
      if (sq_left < 0) return;
      if (sum_left * sum_left > static_cast<long long>(left) * sq_left) return;
      long long bound = static_cast<long long>(std::sqrt(static_cast<double>(sq_left))) + 1;
      for (long long v = -bound; v <= bound; ++v) {
        if (v * v > sq_left) continue;
        b[static_cast<size_t>(idx)] = v;
        self(self, idx + 1, sum_left - v, sq_left - v * v);
      }
    };
    rec(rec, 0, sum_target, sq_target);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// The enumerations are pure functions of r and are queried constantly by the
// cone tests, so memoize them.
const std::vector<DivisorClass>& enum_cached(int r, long long square, long long degree) {
  static std::mutex mu;
  static std::map<std::tuple<int, long long, long long>, std::vector<DivisorClass>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(r, square, degree);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, enum_by_invariants(r, square, degree)).first;
  return it->second;
}

}  // namespace

std::vector<DivisorClass> enum_minus1_classes(int r) { return enum_cached(r, -1, 1); }

std::vector<DivisorClass> enum_root_classes(int r) { return enum_cached(r, -2, 0); }

DivisorClass reflect(const DivisorClass& c, const DivisorClass& rho) {
  if (intersect(rho, rho) != -2 || intersect(canonical_class(rho.r()), rho) != 0)
    fail(Err::NotARoot, "reflect: rho is not a (-2)-root");
  return c + rho * intersect(c, rho);
}

RootBasis::RootBasis(int r, std::vector<DivisorClass> roots) : r_(r), roots_(std::move(roots)) {
  DivisorClass k = canonical_class(r_);
  for (const auto& rho : roots_) {
    if (rho.r() != r_) fail(Err::MismatchedLattice, "RootBasis: root on wrong lattice");
    if (intersect(rho, rho) != -2 || intersect(k, rho) != 0)
      fail(Err::NotARoot, "RootBasis: class is not a (-2)-root");
  }
  for (size_t i = 0; i < roots_.size(); ++i) {
    for (size_t j = i + 1; j < roots_.size(); ++j) {
      Int p = intersect(roots_[i], roots_[j]);
      if (p != 0 && p != 1)
        fail(Err::NotARoot, "RootBasis: pairwise intersections must lie in {0,1}");
    }
  }
  if (!roots_.empty()) {
    RatMat m;
    for (const auto& rho : roots_) {
      RatVec row;
      for (const Int& x : rho.coeffs()) row.emplace_back(x);
      m.push_back(std::move(row));
    }
    if (matrix_rank(m) != static_cast<int>(roots_.size()))
      fail(Err::NotARoot, "RootBasis: roots are linearly dependent");
  }
}

std::string ade_type(const RootBasis& basis) {
  const auto& roots = basis.roots();
  const size_t n = roots.size();
  if (n == 0) return "";

  std::vector<std::vector<size_t>> adj(n);
  size_t edges = 0;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (intersect(roots[i], roots[j]) == 1) {
        adj[i].push_back(j);
        adj[j].push_back(i);
        ++edges;
      }
    }
  }
  (void)edges;

  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (size_t i = 0; i < n; ++i) {
    if (comp[i] != -1) continue;
    std::vector<size_t> stack{i};
    comp[i] = ncomp;
    while (!stack.empty()) {
      size_t v = stack.back();
      stack.pop_back();
      for (size_t w : adj[v])
        if (comp[w] == -1) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
    }
    ++ncomp;
  }

  // classify each component as (rank, letter)
  std::vector<std::pair<int, char>> types;
  for (int cidx = 0; cidx < ncomp; ++cidx) {
    std::vector<size_t> nodes;
    for (size_t i = 0; i < n; ++i)
      if (comp[i] == cidx) nodes.push_back(i);
    size_t ce = 0;
    size_t branch = n;  // index of the unique degree-3 node, if any
    int ndeg3 = 0;
    for (size_t v : nodes) {
      ce += adj[v].size();
      if (adj[v].size() >= 4) fail(Err::NotADE, "ade_type: node of degree >= 4");
      if (adj[v].size() == 3) {
        ++ndeg3;
        branch = v;
      }
    }
    ce /= 2;
    if (ce != nodes.size() - 1) fail(Err::NotADE, "ade_type: component contains a cycle");
    int rank = static_cast<int>(nodes.size());
    if (ndeg3 == 0) {
      types.emplace_back(rank, 'A');
    } else if (ndeg3 == 1) {
      // walk the three arms from the branch node
      std::vector<int> arms;
      for (size_t start : adj[branch]) {
        int len = 1;
        size_t prev = branch, cur = start;
        while (adj[cur].size() == 2) {
          size_t next = (adj[cur][0] == prev) ? adj[cur][1] : adj[cur][0];
          prev = cur;
          cur = next;
          ++len;
        }
        arms.push_back(len);
      }
      std::sort(arms.begin(), arms.end());
      if (arms[0] == 1 && arms[1] == 1) {
        types.emplace_back(rank, 'D');
      } else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
        types.emplace_back(rank, 'E');  // rank = 4 + arms[2] in {6,7,8}
      } else {
        fail(Err::NotADE, "ade_type: branch arms outside A/D/E patterns");
      }
    } else {
      fail(Err::NotADE, "ade_type: more than one branch node in a component");
    }
  }

  std::sort(types.begin(), types.end(),
            [](const auto& x, const auto& y) {
              return x.first != y.first ? x.first < y.first : x.second < y.second;
            });
  std::map<std::pair<int, char>, int> mult;
  for (const auto& t : types) ++mult[t];

  std::ostringstream os;
  bool first = true;
  std::pair<int, char> last{-1, '?'};
  for (const auto& t : types) {
    if (t == last) continue;
    last = t;
    if (!first) os << "+";
    first = false;
    int m = mult[t];
    if (m > 1) os << m;
    os << t.second << t.first;
  }
  return os.str();
}

}  // namespace dpz

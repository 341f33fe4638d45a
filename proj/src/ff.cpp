#include "dpz/ff.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <utility>

namespace dpz {

namespace {

using Poly = std::vector<int>;  // ascending coefficients over F_p, no trailing zeros

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// remainder of a modulo the monic polynomial m
Poly poly_mod(Poly a, const Poly& m, int p) {
  trim(a);
  const size_t dm = m.size() - 1;
  while (a.size() > dm) {
    int lead = a.back();
    size_t shift = a.size() - 1 - dm;
    for (size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] - lead * m[i]) % p;
      if (a[shift + i] < 0) a[shift + i] += p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  trim(c);
  return c;
}

// deterministic irreducibility test by trial division over all monic
// divisors of degree 1..deg/2
bool poly_irreducible(const Poly& f, int p) {
  const size_t deg = f.size() - 1;
  for (size_t d = 1; 2 * d <= deg; ++d) {
    uint64_t count = 1;
    for (size_t i = 0; i < d; ++i) count *= static_cast<uint64_t>(p);
    for (uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      g[d] = 1;
      uint64_t c = code;
      for (size_t i = 0; i < d; ++i) {
        g[i] = static_cast<int>(c % static_cast<uint64_t>(p));
        c /= static_cast<uint64_t>(p);
      }
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(int p, int k) : p_(p), k_(k) {
  if (p != 2 && p != 3) fail(Err::InvalidChar, "FiniteField: p must be 2 or 3");
  if (k < 1) fail(Err::InvalidInput, "FiniteField: extension degree must be >= 1");
  uint64_t sz = 1;
  for (int i = 0; i < k; ++i) sz *= static_cast<uint64_t>(p);
  if (sz > 19683) fail(Err::InvalidInput, "FiniteField: p^k exceeds the 3^9 cap");
  size_ = static_cast<uint32_t>(sz);

  // smallest lower-coefficient code giving a monic irreducible of degree k
  for (uint32_t code = 0;; ++code) {
    if (code >= size_) fail(Err::InternalInconsistency, "FiniteField: no irreducible found");
    Poly f(static_cast<size_t>(k) + 1, 0);
    f[static_cast<size_t>(k)] = 1;
    uint32_t c = code;
    for (int i = 0; i < k; ++i) {
      f[static_cast<size_t>(i)] = static_cast<int>(c % static_cast<uint32_t>(p));
      c /= static_cast<uint32_t>(p);
    }
    if (poly_irreducible(f, p)) {
      modulus_ = f;
      break;
    }
  }
}

const FiniteField& FiniteField::get(int p, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, FiniteField*> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({p, k});
  if (it == cache.end())
    it = cache.emplace(std::make_pair(p, k), new FiniteField(p, k)).first;
  return *it->second;
}

std::string FiniteField::modulus_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = k_; i >= 0; --i) {
    int c = modulus_[static_cast<size_t>(i)];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i >= 1) {
      os << (i == 0 ? "" : "t");
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::vector<int> FiniteField::decode(Elem a) const {
  std::vector<int> d(static_cast<size_t>(k_), 0);
  for (int i = 0; i < k_; ++i) {
    d[static_cast<size_t>(i)] = static_cast<int>(a % static_cast<uint32_t>(p_));
    a /= static_cast<uint32_t>(p_);
  }
  return d;
}

FiniteField::Elem FiniteField::encode(const std::vector<int>& digits) const {
  Elem a = 0;
  for (int i = k_ - 1; i >= 0; --i)
    a = a * static_cast<uint32_t>(p_) +
        static_cast<uint32_t>(i < static_cast<int>(digits.size()) ? digits[static_cast<size_t>(i)] : 0);
  return a;
}

FiniteField::Elem FiniteField::from_int(long long n) const {
  long long m = n % p_;
  if (m < 0) m += p_;
  return static_cast<Elem>(m);
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
  auto da = decode(a), db = decode(b);
  for (int i = 0; i < k_; ++i)
    da[static_cast<size_t>(i)] = (da[static_cast<size_t>(i)] + db[static_cast<size_t>(i)]) % p_;
  return encode(da);
}

FiniteField::Elem FiniteField::neg(Elem a) const {
  auto d = decode(a);
  for (int& x : d) x = (p_ - x) % p_;
  return encode(d);
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
  auto da = decode(a), db = decode(b);
  trim(da);
  trim(db);
  Poly prod = poly_mul(da, db, p_);
  Poly red = poly_mod(std::move(prod), modulus_, p_);
  red.resize(static_cast<size_t>(k_), 0);
  return encode(red);
}

FiniteField::Elem FiniteField::pow(Elem a, unsigned long long e) const {
  Elem result = one();
  Elem base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) fail(Err::Undefined, "FiniteField: zero has no inverse");
  return pow(a, size_ - 2);
}

}  // namespace dpz

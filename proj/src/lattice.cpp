#include "dpz/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace dpz {

DivisorClass::DivisorClass(int r, std::vector<Int> coeffs) : r_(r), coeffs_(std::move(coeffs)) {
  if (r_ < 0 || r_ > 8) fail(Err::InvalidR, "DivisorClass: r must be in [0,8]");
  if (coeffs_.size() != static_cast<size_t>(r_) + 1)
    fail(Err::InvalidInput, "DivisorClass: coefficient vector must have length r+1");
}

DivisorClass DivisorClass::zero(int r) {
  return DivisorClass(r, std::vector<Int>(static_cast<size_t>(r) + 1, 0));
}

DivisorClass DivisorClass::hyperplane(int r) {
  std::vector<Int> c(static_cast<size_t>(r) + 1, 0);
  c[0] = 1;
  return DivisorClass(r, std::move(c));
}

DivisorClass DivisorClass::exceptional(int r, int i) {
  if (i < 1 || i > r) fail(Err::InvalidInput, "exceptional: index out of range");
  std::vector<Int> c(static_cast<size_t>(r) + 1, 0);
  c[static_cast<size_t>(i)] = -1;  // E_i = 0*H - (-1)*E_i
  return DivisorClass(r, std::move(c));
}

bool DivisorClass::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Int& x) { return x == 0; });
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
  if (r_ != o.r_) fail(Err::MismatchedLattice, "class addition across different lattices");
  std::vector<Int> c(coeffs_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = coeffs_[i] + o.coeffs_[i];
  return DivisorClass(r_, std::move(c));
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const { return *this + (-o); }

DivisorClass DivisorClass::operator-() const {
  std::vector<Int> c(coeffs_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = -coeffs_[i];
  return DivisorClass(r_, std::move(c));
}

DivisorClass DivisorClass::operator*(const Int& n) const {
  std::vector<Int> c(coeffs_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = coeffs_[i] * n;
  return DivisorClass(r_, std::move(c));
}

bool DivisorClass::operator==(const DivisorClass& o) const {
  return r_ == o.r_ && coeffs_ == o.coeffs_;
}

bool DivisorClass::operator<(const DivisorClass& o) const {
  if (r_ != o.r_) return r_ < o.r_;
  return std::lexicographical_compare(coeffs_.begin(), coeffs_.end(), o.coeffs_.begin(),
                                      o.coeffs_.end());
}

RationalClass::RationalClass(int r, std::vector<Rat> coeffs) : r_(r), coeffs_(std::move(coeffs)) {
  if (r_ < 0 || r_ > 8) fail(Err::InvalidR, "RationalClass: r must be in [0,8]");
  if (coeffs_.size() != static_cast<size_t>(r_) + 1)
    fail(Err::InvalidInput, "RationalClass: coefficient vector must have length r+1");
}

RationalClass::RationalClass(const DivisorClass& c) : r_(c.r()) {
  coeffs_.reserve(c.coeffs().size());
  for (const Int& x : c.coeffs()) coeffs_.emplace_back(x);
}

RationalClass RationalClass::zero(int r) {
  return RationalClass(r, std::vector<Rat>(static_cast<size_t>(r) + 1, Rat(0)));
}

bool RationalClass::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& x) { return x == 0; });
}

RationalClass RationalClass::operator+(const RationalClass& o) const {
  if (r_ != o.r_) fail(Err::MismatchedLattice, "class addition across different lattices");
  std::vector<Rat> c(coeffs_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = coeffs_[i] + o.coeffs_[i];
  return RationalClass(r_, std::move(c));
}

RationalClass RationalClass::operator-(const RationalClass& o) const {
  if (r_ != o.r_) fail(Err::MismatchedLattice, "class subtraction across different lattices");
  std::vector<Rat> c(coeffs_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = coeffs_[i] - o.coeffs_[i];
  return RationalClass(r_, std::move(c));
}

RationalClass RationalClass::operator*(const Rat& q) const {
  std::vector<Rat> c(coeffs_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = coeffs_[i] * q;
  return RationalClass(r_, std::move(c));
}

bool RationalClass::operator==(const RationalClass& o) const {
  return r_ == o.r_ && coeffs_ == o.coeffs_;
}

DivisorClass RationalClass::primitive_integral() const {
  if (is_zero()) fail(Err::InvalidInput, "primitive_integral of the zero class");
  Int lcm_den = 1;
  for (const Rat& q : coeffs_) lcm_den = boost::multiprecision::lcm(lcm_den, rat_den(q));
  std::vector<Int> c(coeffs_.size());
  Int content = 0;
  for (size_t i = 0; i < c.size(); ++i) {
    c[i] = rat_num(coeffs_[i]) * (lcm_den / rat_den(coeffs_[i]));
    content = boost::multiprecision::gcd(content, c[i]);
  }
  for (auto& x : c) x /= content;
  // orient along the original class
  for (size_t i = 0; i < c.size(); ++i) {
    if (coeffs_[i] != 0) {
      if ((coeffs_[i] < 0) != (c[i] < 0)) {
        for (auto& x : c) x = -x;
      }
      break;
    }
  }
  return DivisorClass(r_, std::move(c));
}

Int intersect(const DivisorClass& d1, const DivisorClass& d2) {
  if (d1.r() != d2.r()) fail(Err::MismatchedLattice, "intersect: lattices of different rank");
  Int s = d1.coeffs()[0] * d2.coeffs()[0];
  for (int i = 1; i <= d1.r(); ++i) s -= d1.b(i) * d2.b(i);
  return s;
}

Rat intersect(const RationalClass& d1, const RationalClass& d2) {
  if (d1.r() != d2.r()) fail(Err::MismatchedLattice, "intersect: lattices of different rank");
  Rat s = d1.coeffs()[0] * d2.coeffs()[0];
  for (size_t i = 1; i < d1.coeffs().size(); ++i) s -= d1.coeffs()[i] * d2.coeffs()[i];
  return s;
}

Rat intersect(const RationalClass& d1, const DivisorClass& d2) {
  return intersect(d1, RationalClass(d2));
}

DivisorClass canonical_class(int r) {
  if (r < 0 || r > 8) fail(Err::InvalidR, "canonical_class: r must be in [0,8]");
  std::vector<Int> c(static_cast<size_t>(r) + 1, -1);
  c[0] = -3;
  return DivisorClass(r, std::move(c));  // -3H + sum E_i
}

Rat arithmetic_genus(const DivisorClass& c) {
  Int self = intersect(c, c);
  Int kc = intersect(canonical_class(c.r()), c);
  return Rat(self + kc, 2) + 1;
}

Int anticanonical_degree(const DivisorClass& c) {
  return intersect(anticanonical_class(c.r()), c);
}

}  // namespace dpz

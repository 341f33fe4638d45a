#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dpz/error.hpp"

namespace dpz {

// Small finite field F_{p^k}, p in {2,3}, p^k <= 3^9.  Elements are encoded
// as base-p digit strings packed into a uint32_t: the element
// sum_i c_i t^i (mod the field modulus) has code sum_i c_i p^i.  The prime
// subfield is therefore always {0, 1, ..., p-1}.
//
// The modulus is the monic irreducible polynomial of degree k over F_p whose
// lower-coefficient code (sum_{i<k} c_i p^i) is smallest; it is recomputed
// and re-verified deterministically, so serialized element codes are
// portable across runs and machines.
class FiniteField {
 public:
  using Elem = uint32_t;

  // Cached accessor; instances live for the whole program.
  static const FiniteField& get(int p, int k);

  int p() const { return p_; }
  int k() const { return k_; }
  uint32_t size() const { return size_; }
  // Monic modulus, ascending coefficients, length k+1 (last entry 1).
  const std::vector<int>& modulus() const { return modulus_; }
  std::string modulus_string() const;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long n) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem pow(Elem a, unsigned long long e) const;
  // Multiplicative inverse; throws Undefined for zero.
  Elem inv(Elem a) const;

  bool same_as(const FiniteField& o) const { return this == &o; }

 private:
  FiniteField(int p, int k);

  std::vector<int> decode(Elem a) const;
  Elem encode(const std::vector<int>& digits) const;

  int p_, k_;
  uint32_t size_;
  std::vector<int> modulus_;
};

}  // namespace dpz

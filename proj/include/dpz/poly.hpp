#pragma once

#include <map>
#include <string>
#include <vector>

#include "dpz/ff.hpp"

namespace dpz {

// Graded-lexicographic term order: higher total degree first, ties broken
// lexicographically on the exponent vector (larger first).
struct GradedLex {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Multivariate polynomial over a small finite field, with a fixed ordered
// variable list.  Terms are stored in canonical graded-lex order with no
// zero coefficients.  Immutable value semantics except for set_coeff.
class FinitePoly {
 public:
  using Elem = FiniteField::Elem;
  using TermMap = std::map<std::vector<int>, Elem, GradedLex>;

  FinitePoly(const FiniteField& field, std::vector<std::string> vars);

  // Parse expressions like "x^3*z + y^4 + 2*x*y*z^2"; coefficients are
  // integer literals reduced into the prime subfield.  Throws InvalidInput
  // on syntax errors or unknown variables.
  static FinitePoly parse(const FiniteField& field, std::vector<std::string> vars,
                          const std::string& text);

  const FiniteField& field() const { return *field_; }
  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  // Coefficient of the monomial with the given exponents (zero if absent).
  Elem coeff(const std::vector<int>& exps) const;
  void set_coeff(const std::vector<int>& exps, Elem c);

  FinitePoly operator+(const FinitePoly& o) const;
  FinitePoly operator-(const FinitePoly& o) const;
  FinitePoly operator*(const FinitePoly& o) const;
  FinitePoly scaled(Elem c) const;
  FinitePoly pow(int e) const;

  // Formal partial derivative; exponents reduce modulo the characteristic
  // (so d/dx x^2 = 0 over F_2).
  FinitePoly derivative(const std::string& var) const;

  // Evaluate at a point with coordinates in this polynomial's own field.
  Elem eval(const std::vector<Elem>& point) const;
  // Evaluate at a point over an extension field; requires the coefficients
  // to lie in the prime subfield (k = 1) unless ext is this same field.
  Elem eval_ext(const FiniteField& ext, const std::vector<Elem>& point) const;

  int total_degree() const;  // -1 for the zero polynomial
  bool is_homogeneous(int degree) const;

  std::string to_string() const;

  bool operator==(const FinitePoly& o) const;

 private:
  void check_same_field(const FinitePoly& o) const;
  size_t var_index(const std::string& var) const;

  const FiniteField* field_;
  std::vector<std::string> vars_;
  TermMap terms_;
};

}  // namespace dpz

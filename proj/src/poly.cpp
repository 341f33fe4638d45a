#include "dpz/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace dpz {

bool GradedLex::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return a > b;
}

FinitePoly::FinitePoly(const FiniteField& field, std::vector<std::string> vars)
    : field_(&field), vars_(std::move(vars)) {}

void FinitePoly::check_same_field(const FinitePoly& o) const {
  if (!field_->same_as(*o.field_) || vars_ != o.vars_)
    fail(Err::FieldMismatch, "FinitePoly: mixed fields or variable lists");
}

size_t FinitePoly::var_index(const std::string& var) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == var) return i;
  fail(Err::InvalidInput, "FinitePoly: unknown variable '" + var + "'");
}

FinitePoly::Elem FinitePoly::coeff(const std::vector<int>& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? field_->zero() : it->second;
}

void FinitePoly::set_coeff(const std::vector<int>& exps, Elem c) {
  if (exps.size() != vars_.size())
    fail(Err::InvalidInput, "FinitePoly: exponent vector of wrong length");
  for (int e : exps)
    if (e < 0) fail(Err::InvalidInput, "FinitePoly: negative exponent");
  if (c == field_->zero())
    terms_.erase(exps);
  else
    terms_[exps] = c;
}

FinitePoly FinitePoly::operator+(const FinitePoly& o) const {
  check_same_field(o);
  FinitePoly out = *this;
  for (const auto& [e, c] : o.terms_) out.set_coeff(e, field_->add(out.coeff(e), c));
  return out;
}

FinitePoly FinitePoly::operator-(const FinitePoly& o) const {
  check_same_field(o);
  FinitePoly out = *this;
  for (const auto& [e, c] : o.terms_) out.set_coeff(e, field_->sub(out.coeff(e), c));
  return out;
}

FinitePoly FinitePoly::operator*(const FinitePoly& o) const {
  check_same_field(o);
  FinitePoly out(*field_, vars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      std::vector<int> e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.set_coeff(e, field_->add(out.coeff(e), field_->mul(ca, cb)));
    }
  }
  return out;
}

FinitePoly FinitePoly::scaled(Elem c) const {
  FinitePoly out(*field_, vars_);
  for (const auto& [e, x] : terms_) out.set_coeff(e, field_->mul(x, c));
  return out;
}

FinitePoly FinitePoly::pow(int e) const {
  if (e < 0) fail(Err::InvalidInput, "FinitePoly: negative power");
  FinitePoly out(*field_, vars_);
  out.set_coeff(std::vector<int>(vars_.size(), 0), field_->one());
  FinitePoly base = *this;
  while (e > 0) {
    if (e & 1) out = out * base;
    base = base * base;
    e >>= 1;
  }
  return out;
}

FinitePoly FinitePoly::derivative(const std::string& var) const {
  const size_t idx = var_index(var);
  FinitePoly out(*field_, vars_);
  for (const auto& [e, c] : terms_) {
    if (e[idx] == 0) continue;
    Elem factor = field_->from_int(e[idx]);
    if (factor == field_->zero()) continue;
    std::vector<int> de = e;
    --de[idx];
    out.set_coeff(de, field_->add(out.coeff(de), field_->mul(c, factor)));
  }
  return out;
}

FinitePoly::Elem FinitePoly::eval(const std::vector<Elem>& point) const {
  return eval_ext(*field_, point);
}

FinitePoly::Elem FinitePoly::eval_ext(const FiniteField& ext, const std::vector<Elem>& point) const {
  if (point.size() != vars_.size())
    fail(Err::InvalidInput, "FinitePoly: evaluation point of wrong length");
  const bool same = field_->same_as(ext);
  if (!same) {
    if (field_->p() != ext.p())
      fail(Err::FieldMismatch, "FinitePoly: evaluation field has different characteristic");
    if (field_->k() != 1)
      fail(Err::FieldMismatch,
           "FinitePoly: extension evaluation needs prime-field coefficients");
  }
  Elem total = ext.zero();
  for (const auto& [e, c] : terms_) {
    // prime-subfield codes are identical in the base field and the extension
    Elem term = same ? c : ext.from_int(static_cast<long long>(c));
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term = ext.mul(term, ext.pow(point[i], static_cast<unsigned>(e[i])));
    total = ext.add(total, term);
  }
  return total;
}

int FinitePoly::total_degree() const {
  if (terms_.empty()) return -1;
  // graded-lex order puts a maximal-degree term first
  const auto& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

bool FinitePoly::is_homogeneous(int degree) const {
  for (const auto& [e, c] : terms_) {
    (void)c;
    if (std::accumulate(e.begin(), e.end(), 0) != degree) return false;
  }
  return true;
}

std::string FinitePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    bool printed = false;
    if (c != field_->one() || std::accumulate(e.begin(), e.end(), 0) == 0) {
      os << c;
      printed = true;
    }
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (printed) os << "*";
      printed = true;
      os << vars_[i];
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

bool FinitePoly::operator==(const FinitePoly& o) const {
  return field_->same_as(*o.field_) && vars_ == o.vars_ && terms_ == o.terms_;
}

namespace {

struct Parser {
  const std::string& text;
  size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  char take() {
    skip_ws();
    if (pos >= text.size()) fail(Err::InvalidInput, "polynomial parse: unexpected end");
    return text[pos++];
  }
  long long integer() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail(Err::InvalidInput, "polynomial parse: expected an integer");
    return std::stoll(text.substr(start, pos - start));
  }
  std::string identifier() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == '_')) {
      ++pos;
    }
    if (pos == start) fail(Err::InvalidInput, "polynomial parse: expected a variable name");
    return text.substr(start, pos - start);
  }
};

}  // namespace

FinitePoly FinitePoly::parse(const FiniteField& field, std::vector<std::string> vars,
                             const std::string& text) {
  FinitePoly result(field, vars);
  Parser p(text);
  bool first_term = true;
  while (!p.done()) {
    long long sign = 1;
    char c = p.peek();
    if (c == '+' || c == '-') {
      p.take();
      sign = (c == '-') ? -1 : 1;
    } else if (!first_term) {
      fail(Err::InvalidInput, "polynomial parse: expected '+' or '-' between terms");
    }
    first_term = false;

    Elem coeff = field.from_int(sign);
    std::vector<int> exps(vars.size(), 0);
    bool want_factor = true;
    while (want_factor) {
      char f = p.peek();
      if (std::isdigit(static_cast<unsigned char>(f))) {
        coeff = field.mul(coeff, field.from_int(p.integer()));
      } else if (std::isalpha(static_cast<unsigned char>(f)) || f == '_') {
        std::string name = p.identifier();
        int e = 1;
        if (p.peek() == '^') {
          p.take();
          long long ev = p.integer();
          if (ev < 0 || ev > 1000) fail(Err::InvalidInput, "polynomial parse: bad exponent");
          e = static_cast<int>(ev);
        }
        size_t idx = result.var_index(name);
        exps[idx] += e;
      } else {
        fail(Err::InvalidInput, "polynomial parse: unexpected character");
      }
      if (p.peek() == '*') {
        p.take();
      } else {
        want_factor = false;
      }
    }
    result.set_coeff(exps, field.add(result.coeff(exps), coeff));
  }
  return result;
}

}  // namespace dpz

#include "forestcalc/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "forestcalc/errors.hpp"

namespace forestcalc {

Polynomial::Polynomial(int nvars, int params) : nvars_(nvars), params_(params) {
  if (nvars < 0 || params < 0) throw PreconditionError("negative variable count");
}

Polynomial Polynomial::constant(const Rational& c, int nvars, int params) {
  Polynomial p(nvars, params);
  p.add_term(Exponents(nvars + params, 0), c);
  return p;
}

Polynomial Polynomial::variable(int i, int nvars, int params) {
  if (i < 0 || i >= nvars + params) throw PreconditionError("variable index out of range");
  Polynomial p(nvars, params);
  Exponents e(nvars + params, 0);
  e[i] = 1;
  p.add_term(e, Rational(1));
  return p;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_ + params_) throw MismatchError("monomial has the wrong number of variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Polynomial::x_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int i = 0; i < nvars_; ++i) s += e[i];
    d = std::max(d, s);
  }
  return d;
}

int Polynomial::param_degree(int k) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(nvars_ + k));
  return d;
}

Polynomial Polynomial::derivative(int i) const {
  if (i < 0 || i >= nvars_) throw PreconditionError("derivative index out of range");
  Polynomial out(nvars_, params_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponents f = e;
    --f[i];
    out.add_term(f, c * e[i]);
  }
  return out;
}

Polynomial Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw MismatchError("point has the wrong dimension");
  Polynomial out(nvars_, params_);
  for (const auto& [e, c] : terms_) {
    Rational v = c;
    Exponents f = e;
    for (int i = 0; i < nvars_; ++i) {
      for (int k = 0; k < e[i]; ++k) v *= point[i];
      f[i] = 0;
    }
    out.add_term(f, v);
  }
  return out;
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& values, int h_truncation) const {
  if (static_cast<int>(values.size()) != nvars_) throw MismatchError("substitution has the wrong dimension");
  for (const auto& v : values) v.require_same_shape(*this);
  auto cut = [&](Polynomial p) { return h_truncation >= 0 ? p.truncate_param(h_truncation) : p; };
  // powers[i][k] = values[i]^k, filled on demand
  std::vector<std::vector<Polynomial>> powers(nvars_);
  auto power = [&](int i, int k) -> const Polynomial& {
    auto& p = powers[i];
    if (p.empty()) p.push_back(constant(Rational(1), nvars_, params_));
    while (static_cast<int>(p.size()) <= k) p.push_back(cut(p.back() * values[i]));
    return p[k];
  };
  Polynomial out(nvars_, params_);
  for (const auto& [e, c] : terms_) {
    Exponents rest(nvars_ + params_, 0);
    for (int k = 0; k < params_; ++k) rest[nvars_ + k] = e[nvars_ + k];
    Polynomial term(nvars_, params_);
    term.add_term(rest, c);
    for (int i = 0; i < nvars_; ++i) {
      if (e[i]) term = cut(term * power(i, e[i]));
    }
    out += term;
  }
  return cut(std::move(out));
}

Polynomial Polynomial::truncate_param(int max_degree, int k) const {
  Polynomial out(nvars_, params_);
  for (const auto& [e, c] : terms_) {
    if (e.at(nvars_ + k) <= max_degree) out.terms_.emplace(e, c);
  }
  return out;
}

Polynomial Polynomial::param_coefficient(int power, int k) const {
  Polynomial out(nvars_, params_);
  for (const auto& [e, c] : terms_) {
    if (e.at(nvars_ + k) != power) continue;
    Exponents f = e;
    f[nvars_ + k] = 0;
    out.add_term(f, c);
  }
  return out;
}

Polynomial Polynomial::with_params(int params) const {
  Polynomial out(nvars_, params);
  for (const auto& [e, c] : terms_) {
    Exponents f(e.begin(), e.begin() + nvars_);
    for (int k = 0; k < params; ++k) f.push_back(k < params_ ? e[nvars_ + k] : 0);
    for (int k = params; k < params_; ++k) {
      if (e[nvars_ + k] != 0) throw PreconditionError("dropping a parameter that is in use");
    }
    out.add_term(f, c);
  }
  return out;
}

Rational Polynomial::constant_value() const {
  Rational v = 0;
  for (const auto& [e, c] : terms_) {
    if (std::any_of(e.begin(), e.end(), [](int k) { return k != 0; })) {
      throw PreconditionError("polynomial is not constant");
    }
    v += c;
  }
  return v;
}

void Polynomial::require_same_shape(const Polynomial& o) const {
  if (nvars_ != o.nvars_ || params_ != o.params_) throw MismatchError("polynomials in different variables");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_shape(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_shape(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_shape(b);
  Polynomial out(a.nvars_, a.params_);
  Polynomial::Exponents e(a.nvars_ + a.params_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

namespace {

std::string variable_name(int i, int nvars, int params) {
  if (i < nvars) return "x" + std::to_string(i + 1);
  if (params == 1) return "h";
  return "h" + std::to_string(i - nvars + 1);
}

}  // namespace

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  // highest degree first reads more naturally
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = abs(c);
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += variable_name(static_cast<int>(i), p.nvars(), p.params());
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string term;
    if (mono.empty()) {
      term = to_short_string(a);
    } else if (a == 1) {
      term = mono;
    } else {
      term = to_short_string(a) + "*" + mono;
    }
    if (s.empty()) {
      s = (c < 0 ? "-" : "") + term;
    } else {
      s += (c < 0 ? " - " : " + ") + term;
    }
  }
  return s;
}

namespace {

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, int nvars, int params) : text_(text), nvars_(nvars), params_(params) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("polynomial '" + std::string(text_) + "': " + what);
  }

  Polynomial expression() {
    Polynomial p(nvars_, params_);
    bool first = true;
    while (true) {
      char c = peek();
      int sign = 1;
      if (c == '+' || c == '-') {
        sign = c == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      Polynomial t = term();
      p += Rational(sign) * t;
      first = false;
      c = peek();
      if (c != '+' && c != '-') break;
    }
    return p;
  }

  Polynomial term() {
    Polynomial p = factor();
    while (peek() == '*') {
      ++pos_;
      p = p * factor();
    }
    return p;
  }

  long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 9) fail("number too long");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial factor() {
    char c = peek();
    Polynomial base(nvars_, params_);
    if (c == '(') {
      ++pos_;
      base = expression();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational value(integer());
      if (peek() == '/') {
        ++pos_;
        long den = integer();
        if (den == 0) fail("zero denominator");
        value /= Rational(den);
      }
      base = Polynomial::constant(value, nvars_, params_);
    } else if (c == 'x' || c == 'h') {
      ++pos_;
      int index = 0;
      bool has_digits = pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
      long k = has_digits ? integer() : 0;
      if (c == 'x') {
        if (!has_digits || k < 1 || k > nvars_) fail("unknown variable x" + std::to_string(k));
        index = static_cast<int>(k - 1);
      } else {
        if (params_ == 0) fail("no parameter h in this context");
        if (!has_digits) {
          if (params_ != 1) fail("ambiguous parameter h");
          k = 1;
        }
        if (k < 1 || k > params_) fail("unknown parameter");
        index = nvars_ + static_cast<int>(k - 1);
      }
      base = Polynomial::variable(index, nvars_, params_);
    } else {
      fail(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
    }
    if (peek() == '^') {
      ++pos_;
      long e = integer();
      if (e > 64) fail("exponent too large");
      Polynomial p = Polynomial::constant(Rational(1), nvars_, params_);
      for (long i = 0; i < e; ++i) p = p * base;
      return p;
    }
    return base;
  }

  std::string_view text_;
  int nvars_;
  int params_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, int nvars, int params) {
  return PolynomialParser(text, nvars, params).parse();
}

}  // namespace forestcalc

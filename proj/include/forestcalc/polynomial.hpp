#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "forestcalc/rational.hpp"

namespace forestcalc {

/// Sparse polynomial with rational coefficients in space variables
/// x1..xn followed by `params` parameter variables (h when params = 1, else
/// h1..hp). Parameters are never differentiated or evaluated by the
/// vector-field operations.
class Polynomial {
 public:
  using Exponents = std::vector<int>;

  Polynomial() = default;
  Polynomial(int nvars, int params = 0);

  static Polynomial constant(const Rational& c, int nvars, int params = 0);
  /// x_{i+1} for i < nvars, otherwise parameter i - nvars.
  static Polynomial variable(int i, int nvars, int params = 0);

  int nvars() const { return nvars_; }
  int params() const { return params_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Exponents& e, const Rational& c);

  /// Largest total degree in the space variables.
  int x_degree() const;
  /// Largest exponent of parameter k.
  int param_degree(int k = 0) const;

  Polynomial derivative(int i) const;
  /// Substitutes the space variables by the given rationals.
  Polynomial evaluate(const std::vector<Rational>& point) const;
  /// Substitutes each space variable x_i by values[i] (same shape). With
  /// h_truncation >= 0, powers of the first parameter above it are dropped
  /// along the way.
  Polynomial compose(const std::vector<Polynomial>& values, int h_truncation = -1) const;
  /// Drops terms whose parameter k exponent exceeds max_degree.
  Polynomial truncate_param(int max_degree, int k = 0) const;
  /// Coefficient of h_k^e, as a polynomial with that exponent set to zero.
  Polynomial param_coefficient(int e, int k = 0) const;
  /// Same polynomial with `params` parameter slots (new slots at exponent 0;
  /// dropping slots requires them to be unused).
  Polynomial with_params(int params) const;
  /// Value as a rational when the polynomial is constant.
  Rational constant_value() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.params_ == b.params_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_shape(const Polynomial& o) const;

  int nvars_ = 0;
  int params_ = 0;
  std::map<Exponents, Rational> terms_;
};

/// Terms like "-1/2*x1^2*x2" joined by " + " / " - "; zero renders as "0".
std::string to_string(const Polynomial& p);
/// Accepts sums and products of rationals, variables x1..xn (and h or
/// h1..hp), integer powers and parentheses.
Polynomial parse_polynomial(std::string_view text, int nvars, int params = 0);

}  // namespace forestcalc

#pragma once

#include <map>
#include <string>
#include <string_view>

#include "forestcalc/rational.hpp"

namespace forestcalc {

/// Truncated Laurent series in z with exact rational coefficients.
///
/// Every series carries an exponent window [min_exp, max_exp]. Terms above
/// max_exp are dropped (the series is known only to that order); a term
/// below min_exp raises WindowOverflow rather than being silently lost.
/// Binary operations require equal windows.
class LaurentSeries {
 public:
  static constexpr int default_min = -16;
  static constexpr int default_max = 16;

  LaurentSeries() = default;
  explicit LaurentSeries(int min_exp, int max_exp);
  /// The constant `c` in the given window.
  LaurentSeries(const Rational& c, int min_exp = default_min, int max_exp = default_max);

  /// c z^k in the given window.
  static LaurentSeries monomial(int k, const Rational& c, int min_exp = default_min, int max_exp = default_max);

  int min_exp() const { return min_; }
  int max_exp() const { return max_; }
  const std::map<int, Rational>& terms() const { return terms_; }
  Rational coefficient(int k) const;
  bool is_zero() const { return terms_.empty(); }
  /// Lowest exponent present; 0 for the zero series.
  int order() const { return terms_.empty() ? 0 : terms_.begin()->first; }

  void add_term(int k, const Rational& c);
  LaurentSeries with_window(int min_exp, int max_exp) const;

  /// Part with strictly negative exponents.
  LaurentSeries polar_part() const;
  /// Part with exponents >= 0.
  LaurentSeries regular_part() const;

  LaurentSeries& operator+=(const LaurentSeries& o);
  LaurentSeries& operator-=(const LaurentSeries& o);
  LaurentSeries& operator*=(const Rational& s);
  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
  friend LaurentSeries operator-(LaurentSeries a) { return a *= Rational(-1); }
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(LaurentSeries a, const Rational& s) { return a *= s; }
  friend LaurentSeries operator*(const Rational& s, LaurentSeries a) { return a *= s; }
  /// Compares coefficients only; windows may differ.
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) { return a.terms_ == b.terms_; }

 private:
  void require_same_window(const LaurentSeries& o) const;

  int min_ = default_min;
  int max_ = default_max;
  std::map<int, Rational> terms_;
};

/// Comma separated "z^k:p/q" terms in increasing k; the zero series is "0".
std::string to_string(const LaurentSeries& a);
LaurentSeries parse_laurent(std::string_view text, int min_exp = LaurentSeries::default_min,
                            int max_exp = LaurentSeries::default_max);

inline Rational one_like(const Rational&) { return Rational(1); }
inline LaurentSeries one_like(const LaurentSeries& z) { return LaurentSeries(Rational(1), z.min_exp(), z.max_exp()); }
inline bool is_zero(const Rational& r) { return r == 0; }
inline bool is_zero(const LaurentSeries& a) { return a.is_zero(); }

}  // namespace forestcalc

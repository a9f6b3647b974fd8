#include "forestcalc/laurent.hpp"

#include <string>

#include "forestcalc/errors.hpp"

namespace forestcalc {

LaurentSeries::LaurentSeries(int min_exp, int max_exp) : min_(min_exp), max_(max_exp) {
  if (min_exp > max_exp) throw PreconditionError("empty Laurent window");
}

LaurentSeries::LaurentSeries(const Rational& c, int min_exp, int max_exp) : LaurentSeries(min_exp, max_exp) {
  add_term(0, c);
}

LaurentSeries LaurentSeries::monomial(int k, const Rational& c, int min_exp, int max_exp) {
  LaurentSeries a(min_exp, max_exp);
  a.add_term(k, c);
  return a;
}

Rational LaurentSeries::coefficient(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentSeries::add_term(int k, const Rational& c) {
  if (c == 0 || k > max_) return;
  if (k < min_) {
    throw WindowOverflow("term z^" + std::to_string(k) + " below window minimum " + std::to_string(min_));
  }
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentSeries LaurentSeries::with_window(int min_exp, int max_exp) const {
  LaurentSeries out(min_exp, max_exp);
  for (const auto& [k, c] : terms_) out.add_term(k, c);
  return out;
}

LaurentSeries LaurentSeries::polar_part() const {
  LaurentSeries out(min_, max_);
  for (const auto& [k, c] : terms_) {
    if (k < 0) out.terms_.emplace(k, c);
  }
  return out;
}

LaurentSeries LaurentSeries::regular_part() const {
  LaurentSeries out(min_, max_);
  for (const auto& [k, c] : terms_) {
    if (k >= 0) out.terms_.emplace(k, c);
  }
  return out;
}

void LaurentSeries::require_same_window(const LaurentSeries& o) const {
  if (min_ != o.min_ || max_ != o.max_) throw MismatchError("Laurent series with different windows");
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
  require_same_window(o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) {
  require_same_window(o);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

LaurentSeries& LaurentSeries::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= s;
  return *this;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  a.require_same_window(b);
  LaurentSeries out(a.min_, a.max_);
  for (const auto& [i, x] : a.terms_) {
    for (const auto& [j, y] : b.terms_) {
      if (i + j > a.max_) break;
      out.add_term(i + j, x * y);
    }
  }
  return out;
}

std::string to_string(const LaurentSeries& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (const auto& [k, c] : a.terms()) {
    if (!s.empty()) s += ',';
    s += "z^" + std::to_string(k) + ":" + to_string(c);
  }
  return s;
}

LaurentSeries parse_laurent(std::string_view text, int min_exp, int max_exp) {
  LaurentSeries out(min_exp, max_exp);
  auto trim = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t' || v.back() == '\r')) v.remove_suffix(1);
    return v;
  };
  text = trim(text);
  if (text == "0") return out;
  if (text.empty()) throw ParseError("empty Laurent series");
  while (!text.empty()) {
    std::size_t comma = text.find(',');
    std::string_view term = trim(text.substr(0, comma));
    if (term.substr(0, 2) != "z^") throw ParseError("Laurent term must start with 'z^': '" + std::string(term) + "'");
    std::size_t colon = term.find(':');
    if (colon == std::string_view::npos) throw ParseError("Laurent term missing ':'");
    std::string exp(term.substr(2, colon - 2));
    int k = 0;
    try {
      std::size_t used = 0;
      k = std::stoi(exp, &used);
      if (used != exp.size()) throw ParseError("bad exponent '" + exp + "'");
    } catch (const std::logic_error&) {
      throw ParseError("bad exponent '" + exp + "'");
    }
    out.add_term(k, parse_rational(term.substr(colon + 1)));
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return out;
}

}  // namespace forestcalc

#pragma once

#include <functional>
#include <map>
#include <utility>

#include "forestcalc/rational.hpp"

namespace forestcalc {

/// Finite formal linear combination of basis keys. Zero coefficients are
/// never stored, so two combinations are equal iff their term maps are.
template <class Key, class Coeff = Rational>
class LinearCombination {
 public:
  using key_type = Key;
  using coeff_type = Coeff;
  using map_type = std::map<Key, Coeff>;
  using const_iterator = typename map_type::const_iterator;

  LinearCombination() = default;
  explicit LinearCombination(Key key, Coeff coeff = Coeff(1)) { add(std::move(key), std::move(coeff)); }

  void add(const Key& key, const Coeff& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Coeff coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  /// Keeps only the terms whose key satisfies the predicate.
  template <class Pred>
  LinearCombination filtered(Pred&& keep) const {
    LinearCombination out;
    for (const auto& [k, c] : terms_) {
      if (keep(k)) out.terms_.emplace(k, c);
    }
    return out;
  }

  /// Applies a key map term by term, merging keys that collide.
  template <class F>
  auto mapped(F&& f) const {
    using NewKey = std::decay_t<decltype(f(std::declval<const Key&>()))>;
    LinearCombination<NewKey, Coeff> out;
    for (const auto& [k, c] : terms_) out.add(f(k), c);
    return out;
  }

  LinearCombination& operator+=(const LinearCombination& other) {
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& other) {
    for (const auto& [k, c] : other.terms_) add(k, -c);
    return *this;
  }
  LinearCombination& operator*=(const Coeff& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& kv : terms_) kv.second *= s;
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator-(LinearCombination a) { return a *= Coeff(-1); }
  friend LinearCombination operator*(const Coeff& s, LinearCombination a) { return a *= s; }
  friend LinearCombination operator*(LinearCombination a, const Coeff& s) { return a *= s; }
  friend bool operator==(const LinearCombination& a, const LinearCombination& b) { return a.terms_ == b.terms_; }

 private:
  map_type terms_;
};

/// Bilinear extension of a product defined on basis keys. The basis product
/// returns a linear combination.
template <class Key, class Coeff, class BasisProduct>
LinearCombination<Key, Coeff> bilinear(const LinearCombination<Key, Coeff>& a,
                                       const LinearCombination<Key, Coeff>& b, BasisProduct&& product) {
  LinearCombination<Key, Coeff> out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      Coeff c = ca * cb;
      for (const auto& [k, ck] : product(ka, kb)) out.add(k, c * ck);
    }
  }
  return out;
}

}  // namespace forestcalc

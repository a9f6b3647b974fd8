#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "forestcalc/errors.hpp"
#include "forestcalc/forest_sum.hpp"

namespace forestcalc {

/// s -> t: the sum of the graftings of s on every vertex of t. Left pre-Lie.
TreeSum graft(const RootedTree& s, const RootedTree& t);
TreeSum graft(const TreeSum& s, const TreeSum& t);
/// [a, b] = a -> b - b -> a.
TreeSum prelie_bracket(const TreeSum& a, const TreeSum& b);

/// The one-vertex tree of the given color, as a sum.
TreeSum generator(int color = 0);

struct GraftingCounts {
  std::uint64_t n_prime;  ///< admissible cuts of v with crown t and trunk u
  Rational m_prime;       ///< sigma(t) sigma(u) / sigma(v) * n_prime
};

GraftingCounts grafting_counts(const RootedTree& t, const RootedTree& u, const RootedTree& v);

/// Picks the distinguished branch (an index into t.children()) used by the
/// F_a recursion at tree t.
using BranchChoice = std::function<std::size_t(const RootedTree&)>;

/// The pre-Lie morphism from colored trees to a target algebra sending the
/// one-vertex tree of color c to generators[c].
///
/// T must support +, - and multiplication by a Rational on the left. The
/// product is only assumed bilinear; for a target that is not left pre-Lie
/// the result depends on the branch choice. Results are memoized per instance.
template <class T>
class FreeMorphismF {
 public:
  using Product = std::function<T(const T&, const T&)>;

  FreeMorphismF(std::vector<T> generators, Product product, BranchChoice choice = {})
      : generators_(std::move(generators)), product_(std::move(product)), choice_(std::move(choice)) {
    if (generators_.empty()) throw PreconditionError("at least one generator is required");
  }

  const T& operator()(const RootedTree& t) {
    if (auto it = memo_.find(t); it != memo_.end()) return it->second;
    T value = compute(t);
    return memo_.emplace(t, std::move(value)).first->second;
  }

  T operator()(const TreeSum& x) {
    T out = Rational(0) * generators_.front();
    for (const auto& [t, c] : x) out = out + c * (*this)(t);
    return out;
  }

 private:
  T compute(const RootedTree& t) {
    const int color = t.color();
    if (color < 0 || static_cast<std::size_t>(color) >= generators_.size()) {
      throw PreconditionError("no generator for color " + std::to_string(color));
    }
    const auto& ch = t.children();
    if (ch.empty()) return generators_[color];
    std::size_t j = choice_ ? choice_(t) : 0;
    if (j >= ch.size()) throw PreconditionError("branch choice out of range");
    const RootedTree t1 = ch[j];
    std::vector<RootedTree> rest;
    for (std::size_t i = 0; i < ch.size(); ++i) {
      if (i != j) rest.push_back(ch[i]);
    }
    if (rest.empty()) return product_((*this)(t1), generators_[color]);
    // t = t1 -> B+(rest) - sum_i B+(rest with rest_i replaced by t1 -> rest_i)
    T value = product_((*this)(t1), (*this)(RootedTree(rest, color)));
    for (std::size_t i = 0; i < rest.size(); ++i) {
      for (const auto& [g, c] : graft(t1, rest[i])) {
        std::vector<RootedTree> branches = rest;
        branches[i] = g;
        value = value - c * (*this)(RootedTree(std::move(branches), color));
      }
    }
    return value;
  }

  std::vector<T> generators_;
  Product product_;
  BranchChoice choice_;
  std::map<RootedTree, T> memo_;
};

/// One-shot convenience wrapper around FreeMorphismF.
template <class T>
T free_morphism_F(const std::vector<T>& generators, const RootedTree& t,
                  typename FreeMorphismF<T>::Product product, BranchChoice choice = {}) {
  FreeMorphismF<T> f(generators, std::move(product), std::move(choice));
  return f(t);
}

/// Free magma on named generators, for symbolic checks of morphism values.
/// Monomials render with ">" for the product and parentheses around
/// composite factors, e.g. "a>(a>a)".
using MagmaSum = LinearCombination<std::string>;
MagmaSum magma_generator(const std::string& name);
MagmaSum magma_product(const MagmaSum& x, const MagmaSum& y);

/// Exact Bernoulli numbers with B_1 = -1/2.
Rational bernoulli(unsigned n);

/// W(x) = e^{L_x} 1 - 1 = sum_{n>=1} L_x^{n-1} x / n!, truncated to trees
/// with at most `order` vertices.
TreeSum w_map(const TreeSum& x, std::size_t order);
/// The compositional inverse of W: Omega(x) = sum_i B_i / i! L_{Omega(x)}^i x.
TreeSum magnus_omega(const TreeSum& x, std::size_t order);
/// Omega of the one-vertex tree.
TreeSum magnus_omega(std::size_t order);
/// e^{L_y} x truncated.
TreeSum exp_left_action(const TreeSum& y, const TreeSum& x, std::size_t order);
/// a # b = a + e^{L_{Omega(a)}} b.
TreeSum sharp_product(const TreeSum& a, const TreeSum& b, std::size_t order);
/// a^{#-1} = W(-Omega(a)).
TreeSum sharp_inverse(const TreeSum& a, std::size_t order);
/// Omega(W(a) # W(b)): the BCH series C(a, b) in the free pre-Lie algebra.
TreeSum bch(const TreeSum& a, const TreeSum& b, std::size_t order);

/// The morphism to the one-generator algebra that sets every color to 0.
TreeSum forget_colors(const TreeSum& x);
RootedTree forget_colors(const RootedTree& t);

/// M_a u = a u + a -> u, where a -> acts as a derivation on the trees of u.
ForestSum m_action(const TreeSum& a, const ForestSum& u, std::size_t order);
/// sum_n M_a^n(u) / n!, truncated.
ForestSum star_exp_applied(const TreeSum& a, const ForestSum& u, std::size_t order);
/// e^{*a} = star_exp_applied(a, 1).
ForestSum star_exp(const TreeSum& a, std::size_t order);
/// e^{*a} * e^{*b} = sum_n M_a^n(e^{*b}) / n!.
ForestSum star_exp_product(const TreeSum& a, const TreeSum& b, std::size_t order);

}  // namespace forestcalc

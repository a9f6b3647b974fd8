#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "forestcalc/conv.hpp"
#include "forestcalc/forest_sum.hpp"
#include "forestcalc/vector_fields.hpp"

namespace forestcalc {

/// B(α; a) = α(∅)·id + Σ_s h^{|s|} α(s)/σ(s) F_a(s), truncated at h^order.
/// Trees missing from `tree_coeffs` have coefficient zero.
struct BSeries {
  Rational empty_coeff = 1;
  std::map<RootedTree, Rational> tree_coeffs;
  std::size_t order = 0;

  /// Throws TruncationError for trees larger than the order.
  Rational operator()(const RootedTree& t) const;
  friend bool operator==(const BSeries& a, const BSeries& b);
};

/// Largest order accepted by bseries_eval.
inline constexpr std::size_t kMaxBSeriesOrder = 6;

/// γ(t): product over vertices of the size of the subtree they root.
Rational tree_factorial(const RootedTree& t);
/// The exact flow: α(∅) = 1, α(t) = 1/γ(t).
BSeries exact_flow_bseries(std::size_t order);

/// Multiplicative extension to forests (requires α(∅) = 1).
RationalFunctional to_character(const BSeries& alpha);
/// Tree values only, zero on 1 and on products (requires α(∅) = 0).
RationalFunctional to_infinitesimal(const BSeries& alpha);
/// Tree values of a functional; the empty coefficient is f(1).
BSeries from_functional(const RationalFunctional& f);

/// A map x ↦ Σ_k h^k c_k(x), stored as n polynomials in x1..xn and h,
/// truncated at h^order.
struct HSeriesMap {
  std::size_t order = 0;
  std::vector<Polynomial> components;

  int dimension() const { return static_cast<int>(components.size()); }
  static HSeriesMap identity(int n, std::size_t order);
  /// The h^k coefficient of component i, as a polynomial in x (and h, at h^0).
  Polynomial coefficient(std::size_t k, int i) const;
  friend bool operator==(const HSeriesMap& a, const HSeriesMap& b) = default;
};

/// outer ∘ inner, truncated at the smaller order.
HSeriesMap compose(const HSeriesMap& outer, const HSeriesMap& inner);
/// One line per power of h: "h^k: c_1 ; ... ; c_n".
std::string to_string(const HSeriesMap& m);

/// Exact truncated expansion of B(α; X). X may already depend on h (one
/// parameter), which is then the same h as the series variable.
HSeriesMap bseries_eval(const BSeries& alpha, const PolyVectorField& x);

/// α∗β: the convolution of the two characters. B(β)∘B(α) = B(α∗β).
BSeries bseries_compose(const BSeries& alpha, const BSeries& beta);

/// The h-dependent field h⁻¹B(α; X), kept to powers h^0..h^{order-1}.
PolyVectorField modified_field(const BSeries& alpha, const PolyVectorField& x);
/// α⋆β through the coaction of H; needs α(∅) = 0 and α(•) = 1.
BSeries bseries_substitute(const BSeries& alpha, const BSeries& beta);

/// δ̃⁻¹(α) restricted to trees: the element Σ c_t t of the free pre-Lie
/// algebra with Σ c_t δ̃_t = α on trees, δ̃_t the normalized dual basis.
TreeSum bseries_to_prelie(const BSeries& alpha);
/// empty·id + 𝓕_X(x), where 𝓕_X is the pre-Lie morphism with 𝓕_X(•) = hX.
HSeriesMap eval_prelie(const TreeSum& element, const Rational& empty, const PolyVectorField& x, std::size_t order);

struct ButcherTableau {
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  std::size_t stages() const { return b.size(); }
};

/// Elementary weights Φ(t) = Σ b_i Φ_i(t), Φ_i(B+(t_1..t_k)) = Π_m Σ_j a_ij Φ_j(t_m).
/// The recursion is a formal power series identity, so implicit tableaux
/// need no solve.
BSeries rk_to_bseries(const ButcherTableau& tableau, std::size_t order);

/// "A = [[...], ...]" and "b = [...]" lines; '#' starts a comment.
ButcherTableau parse_tableau(std::string_view text);
ButcherTableau read_tableau_file(const std::string& path);

}  // namespace forestcalc

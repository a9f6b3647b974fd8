#pragma once

#include "forestcalc/conv.hpp"
#include "forestcalc/forest_sum.hpp"

namespace forestcalc {

// The extraction-contraction Hopf algebra H: polynomials in trees with at
// least one edge, graded by edges. The one-vertex tree is identified with
// the unit, so an element of H is a Forest none of whose components is a
// single vertex, and the unit renders as "1".

/// True when no component of `f` is a single vertex.
bool is_edge_forest(const Forest& f);

/// The terms of the coaction on one tree: for every subset E' of the edges,
/// (components of E' with at least one edge) x (t with each component
/// contracted to a vertex carrying the color of the component's root).
TensorSum contraction_terms(const RootedTree& t);

/// Coproduct of H. A contracted tree equal to a single vertex is the unit.
/// Multiplicative; Delta_H(1) = 1 x 1. Requires an edge forest.
TensorSum contraction_coproduct(const Forest& u);
TensorSum contraction_coproduct(const RootedTree& t);

enum class HAntipodeMethod {
  crown_recursion,  ///< S(t) = -t - sum S(s) t/s
  trunk_recursion,  ///< S(t) = -t - sum s S(t/s)
};

ForestSum h_antipode(const Forest& u, HAntipodeMethod method = HAntipodeMethod::crown_recursion);
ForestSum h_antipode(const ForestSum& x, HAntipodeMethod method = HAntipodeMethod::crown_recursion);

/// Left coaction of H on the forest algebra: Phi(t) = contraction_terms(t)
/// with the contracted tree kept as an element of the forest algebra.
/// Multiplicative; Phi(1) = 1 x 1.
TensorSum coaction(const Forest& u);

/// (alpha * beta)(u) = sum alpha(u') beta(u'') over Phi(u). `alpha` is read
/// as a character of H: it is evaluated on edge forests only, with value 1
/// on the unit.
RationalFunctional substitution_star(const RationalFunctional& alpha, const RationalFunctional& beta);

/// Edge forests with exactly `edges` edges.
std::vector<Forest> enumerate_edge_forests(std::size_t edges);

}  // namespace forestcalc

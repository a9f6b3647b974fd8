#pragma once

#include <cstddef>
#include <map>

#include "forestcalc/forest_sum.hpp"
#include "forestcalc/laurent.hpp"
#include "forestcalc/rational.hpp"
#include "forestcalc/tree.hpp"

namespace forestcalc {

enum class FunctionalKind {
  general,        ///< arbitrary linear form, value stored per forest
  character,      ///< unital and multiplicative; stored by tree values
  infinitesimal,  ///< vanishes on 1 and on products of two or more trees
};

/// Linear form on the forest algebra with values in Scalar (Rational or
/// LaurentSeries), known on all forests with at most `truncation()` vertices
/// over a palette of `colors()` colors. Unset values are zero.
///
/// Operations combining two functionals take the smaller truncation.
/// Evaluating beyond the truncation throws TruncationError.
template <class Scalar>
class Functional {
 public:
  Functional(FunctionalKind kind, std::size_t truncation, Scalar zero = Scalar(), int colors = 1);

  FunctionalKind kind() const { return kind_; }
  std::size_t truncation() const { return truncation_; }
  int colors() const { return colors_; }
  const Scalar& zero() const { return zero_; }
  /// Explicitly stored values: forests for general functionals, single-tree
  /// forests otherwise.
  const std::map<Forest, Scalar>& stored() const { return values_; }

  /// Characters and infinitesimal characters accept trees only.
  void set(const Forest& f, const Scalar& v);
  void set(const RootedTree& t, const Scalar& v) { set(Forest(t), v); }

  Scalar operator()(const Forest& f) const;
  Scalar operator()(const RootedTree& t) const { return (*this)(Forest(t)); }
  Scalar operator()(const ForestSum& x) const;

  /// Same values stored explicitly on every forest up to the truncation.
  Functional<Scalar> to_general() const;

 private:
  void check_degree(const Forest& f) const;

  FunctionalKind kind_;
  std::size_t truncation_;
  int colors_;
  Scalar zero_;
  std::map<Forest, Scalar> values_;
};

using RationalFunctional = Functional<Rational>;
using LaurentFunctional = Functional<LaurentSeries>;

/// u o epsilon: 1 on the unit, 0 elsewhere. Stored as a character with no trees.
template <class Scalar>
Functional<Scalar> unit_functional(std::size_t truncation, const Scalar& zero = Scalar(), int colors = 1);

/// (phi * psi)(x) = sum phi(x') psi(x'') over the full coproduct.
template <class Scalar>
Functional<Scalar> convolve(const Functional<Scalar>& phi, const Functional<Scalar>& psi);

template <class Scalar>
Functional<Scalar> add(const Functional<Scalar>& phi, const Functional<Scalar>& psi);
template <class Scalar>
Functional<Scalar> subtract(const Functional<Scalar>& phi, const Functional<Scalar>& psi);
template <class Scalar>
Functional<Scalar> scale(const Functional<Scalar>& phi, const Rational& s);

/// Geometric series sum_k (e - phi)^{*k}; requires phi(1) = 1.
template <class Scalar>
Functional<Scalar> conv_inverse(const Functional<Scalar>& phi);
/// sum_k alpha^{*k} / k!; requires alpha(1) = 0.
template <class Scalar>
Functional<Scalar> conv_exp(const Functional<Scalar>& alpha);
/// sum_{k>=1} (-1)^{k+1} (phi - e)^{*k} / k; requires phi(1) = 1.
template <class Scalar>
Functional<Scalar> conv_log(const Functional<Scalar>& phi);
/// phi * psi - psi * phi.
template <class Scalar>
Functional<Scalar> conv_bracket(const Functional<Scalar>& phi, const Functional<Scalar>& psi);

/// x -> phi(S(x)).
template <class Scalar>
Functional<Scalar> compose_with_antipode(const Functional<Scalar>& phi);

/// Multiplicative extension of tree values. Every tree with at most
/// `truncation` vertices over the palette must have a value.
template <class Scalar>
Functional<Scalar> character_from_tree_values(const std::map<RootedTree, Scalar>& tree_values, std::size_t truncation,
                                              const Scalar& zero = Scalar(), int colors = 1);

/// Agreement on every forest up to the common truncation.
template <class Scalar>
bool equal_functionals(const Functional<Scalar>& phi, const Functional<Scalar>& psi);

/// phi(1) = 1 and phi(uv) = phi(u) phi(v) for all forest pairs within the truncation.
template <class Scalar>
bool is_character(const Functional<Scalar>& phi);
/// phi(1) = 0 and phi vanishes on every forest with two or more trees.
template <class Scalar>
bool is_infinitesimal_character(const Functional<Scalar>& phi);

/// delta_t picks the coefficient of t; the normalized version is sigma(t) delta_t.
RationalFunctional dual_basis(const RootedTree& t, bool normalized, std::size_t truncation, int colors = 1);

}  // namespace forestcalc

#pragma once

#include "forestcalc/forest_sum.hpp"

namespace forestcalc {

/// Connes-Kreimer coproduct by admissible cuts: sum of crown x trunk over
/// all splittings of the vertex set where the trunk is downward closed
/// (closed under taking parents). Multiplicative on forests; Delta(1) = 1 x 1.
TensorSum coproduct(const Forest& u);
TensorSum coproduct(const ForestSum& x);

/// Delta(u) - u x 1 - 1 x u. Requires u != 1.
TensorSum reduced_coproduct(const Forest& u);

/// k-fold iterate of the reduced coproduct, a sum over k + 1 non-empty
/// tensor slots. Vanishes once k reaches the vertex count of u.
MultiTensorSum reduced_coproduct(const Forest& u, int iterations);

enum class AntipodeMethod {
  left_recursion,   ///< S(x) = -x - sum S(x') x''
  right_recursion,  ///< S(x) = -x - sum x' S(x'')
  geometric,        ///< S = sum_k (u eps - I)^{*k}
};

ForestSum antipode(const Forest& u, AntipodeMethod method = AntipodeMethod::left_recursion);
ForestSum antipode(const ForestSum& x, AntipodeMethod method = AntipodeMethod::left_recursion);

/// Coefficient of the unit.
Rational counit(const ForestSum& x);

/// m (S x I) Delta (x), or m (I x S) Delta (x) when `antipode_on_left` is false.
ForestSum hopf_convolution_check(const Forest& u, bool antipode_on_left,
                                 AntipodeMethod method = AntipodeMethod::left_recursion);

/// Applies Delta to slot `slot` of every key, producing one more slot.
MultiTensorSum apply_coproduct_to_slot(const MultiTensorSum& x, std::size_t slot);
MultiTensorSum as_multi(const TensorSum& x);

}  // namespace forestcalc

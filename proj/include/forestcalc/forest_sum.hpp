#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "forestcalc/linear_combination.hpp"
#include "forestcalc/tree.hpp"

namespace forestcalc {

/// Element of the forest algebra: a rational combination of forests.
using ForestSum = LinearCombination<Forest>;
/// Element of a free pre-Lie or NAP algebra: a rational combination of trees.
using TreeSum = LinearCombination<RootedTree>;
/// Element of a two-fold tensor power of the forest algebra.
using TensorSum = LinearCombination<std::pair<Forest, Forest>>;
/// Element of an arbitrary tensor power; every key has the same length.
using MultiTensorSum = LinearCombination<std::vector<Forest>>;

inline ForestSum unit_sum() { return ForestSum(Forest{}); }

/// Commutative product of forest sums (disjoint union on the basis).
ForestSum multiply(const ForestSum& a, const ForestSum& b);
/// Componentwise product (a1 x a2)(b1 x b2) = a1 b1 x a2 b2.
TensorSum multiply(const TensorSum& a, const TensorSum& b);

/// Single-tree forests as trees; other forests are dropped.
TreeSum project_trees(const ForestSum& x);
ForestSum as_forest_sum(const TreeSum& x);
TreeSum truncate(const TreeSum& x, std::size_t max_vertices);

/// Keeps the terms whose forests have at most `max_vertices` vertices.
ForestSum truncate(const ForestSum& x, std::size_t max_vertices);

/// "p/q * forest" terms joined by " + "; the zero sum renders as "0".
std::string to_string(const ForestSum& x);
std::string to_string(const TreeSum& x);
/// Same as above with "left | right" keys.
std::string to_string(const TensorSum& x);
/// Keys rendered with " | " between the tensor slots.
std::string to_string(const MultiTensorSum& x);
/// Sums over string keys (magma monomials, words): "c key" terms with short
/// coefficients.
std::string to_string(const LinearCombination<std::string>& x);

/// Inverse of to_string(ForestSum); also accepts bare forests (coefficient 1).
ForestSum parse_forest_sum(std::string_view text);
TreeSum parse_tree_sum(std::string_view text);

}  // namespace forestcalc

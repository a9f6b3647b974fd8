#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "forestcalc/linear_combination.hpp"

namespace forestcalc {

/// Element of a finite-dimensional algebra: coefficients on basis indices.
using TableElement = LinearCombination<int>;

/// Bilinear product on k^d given by structure constants e_i e_j = sum_k c_ijk e_k.
/// No axiom is assumed.
class ProductTable {
 public:
  explicit ProductTable(int dimension);

  int dimension() const { return dimension_; }
  const std::vector<Rational>& entry(int i, int j) const;
  void set(int i, int j, std::vector<Rational> coefficients);

  TableElement basis(int i) const;
  TableElement product(const TableElement& a, const TableElement& b) const;

  /// Same carrier with the product a.b replaced by b.a.
  ProductTable opposite() const;

 private:
  void check_index(int i) const;

  int dimension_;
  std::vector<std::vector<Rational>> table_;  // row-major, d * d entries of length d
};

/// "dimension d" followed by lines "i j -> c1,...,cd" (0-based indices, rational
/// coefficients). Missing pairs multiply to zero. Lines starting with '#' are comments.
ProductTable parse_product_table(std::string_view text);
std::string to_string(const ProductTable& table);

}  // namespace forestcalc

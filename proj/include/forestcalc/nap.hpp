#pragma once

#include <functional>
#include <map>
#include <vector>

#include "forestcalc/errors.hpp"
#include "forestcalc/forest_sum.hpp"

namespace forestcalc {

/// s o t: s grafted on the root of t. Always a single tree.
RootedTree butcher_product(const RootedTree& s, const RootedTree& t);
/// Bilinear extension; left NAP.
TreeSum butcher_product(const TreeSum& s, const TreeSum& t);

/// The NAP morphism sending the one-vertex tree of color c to generators[c]:
/// G(B+(t1, ..., tk)) = G(t1) > (G(t2) > ... (G(tk) > a_c)).
/// Branches are taken in the given permutation of the child list (identity
/// by default); for a NAP target the result does not depend on it.
template <class T>
class FreeMorphismG {
 public:
  using Product = std::function<T(const T&, const T&)>;
  using BranchOrder = std::function<std::vector<std::size_t>(const RootedTree&)>;

  FreeMorphismG(std::vector<T> generators, Product product, BranchOrder order = {})
      : generators_(std::move(generators)), product_(std::move(product)), order_(std::move(order)) {
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
    std::vector<std::size_t> idx(ch.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    if (order_) idx = order_(t);
    if (idx.size() != ch.size()) throw PreconditionError("branch order has the wrong length");
    T value = generators_[color];
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) value = product_((*this)(ch.at(*it)), value);
    return value;
  }

  std::vector<T> generators_;
  Product product_;
  BranchOrder order_;
  std::map<RootedTree, T> memo_;
};

template <class T>
T free_morphism_G(const std::vector<T>& generators, const RootedTree& t, typename FreeMorphismG<T>::Product product) {
  FreeMorphismG<T> g(generators, std::move(product));
  return g(t);
}

}  // namespace forestcalc

#include "forestcalc/nap.hpp"

namespace forestcalc {

RootedTree butcher_product(const RootedTree& s, const RootedTree& t) {
  std::vector<RootedTree> children = t.children();
  children.push_back(s);
  return RootedTree(std::move(children), t.color());
}

TreeSum butcher_product(const TreeSum& s, const TreeSum& t) {
  return bilinear(s, t, [](const RootedTree& a, const RootedTree& b) { return TreeSum(butcher_product(a, b)); });
}

}  // namespace forestcalc

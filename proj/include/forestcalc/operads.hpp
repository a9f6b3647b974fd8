#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "forestcalc/forest_sum.hpp"
#include "forestcalc/linear_combination.hpp"
#include "forestcalc/tree.hpp"

namespace forestcalc {

/// Bijection of {1..n} stored as its word: w[k-1] = σ(k).
struct Permutation {
  std::vector<int> w;

  int size() const { return static_cast<int>(w.size()); }
  int operator()(int k) const { return w.at(k - 1); }
  static Permutation identity(int n);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

/// (στ)(k) = σ(τ(k)).
Permutation operator*(const Permutation& s, const Permutation& t);
Permutation inverse(const Permutation& s);
bool is_permutation(const std::vector<int>& w);
/// All of S_n in lexicographic order of words.
std::vector<Permutation> all_permutations(int n);
/// Renders "(2 1 3)".
std::string to_string(const Permutation& s);

/// Block substitution ι_i(σ, τ): τ permutes the block {i..i+l-1}, σ permutes
/// the k blocks. Realized through operations on a tensor algebra, where σ
/// multiplies its inputs in the order σ⁻¹(1), ..., σ⁻¹(k).
Permutation assoc_compose(const Permutation& s, int i, const Permutation& t);
using PermutationSum = LinearCombination<Permutation>;
PermutationSum assoc_compose(const PermutationSum& s, int i, const PermutationSum& t);

/// Rooted tree with vertices labelled 1..n; vertex v (0-based) carries label
/// v+1 and parent[v] is the 0-based parent, -1 at the root.
struct LabelledTree {
  std::vector<int> parent;

  int size() const { return static_cast<int>(parent.size()); }
  friend auto operator<=>(const LabelledTree&, const LabelledTree&) = default;
};

using LabelledTreeSum = LinearCombination<LabelledTree>;

/// Throws PreconditionError unless the array describes a rooted tree.
void validate(const LabelledTree& t);
/// All n^{n-1} labelled rooted trees on n vertices.
std::vector<LabelledTree> labelled_trees(int n);
RootedTree forget_labels(const LabelledTree& t);
/// One labelling of an unlabelled tree (preorder).
LabelledTree some_labelling(const RootedTree& t);
/// "1(2,3(4))": label, then the children in increasing label order.
std::string to_string(const LabelledTree& t);

/// s ∘_i t: t replaces the vertex labelled i, the parent edge of i lands on
/// the root of t, and each child subtree of i is regrafted on any vertex of t
/// (one term per map). Labels of s below i keep their value, labels of t are
/// shifted by i-1, labels of s above i by |t|-1.
LabelledTreeSum prelie_insert(const LabelledTree& s, int i, const LabelledTree& t);
/// Right action: the vertex labelled k in t.σ is the vertex labelled σ(k) in t.
LabelledTree act(const LabelledTree& t, const Permutation& s);
/// Σ_i of s ∘_i t with labels forgotten: the product ⊲ on unlabelled trees.
TreeSum insertion_product(const RootedTree& s, const RootedTree& t);

/// Basis element of an operad: arity plus instance-specific data.
struct OperadElement {
  int arity = 0;
  std::vector<int> data;
  friend auto operator<=>(const OperadElement&, const OperadElement&) = default;
};
using OperadSum = LinearCombination<OperadElement>;

/// Uniform view of an operad with a basis permuted by the symmetric groups.
class Operad {
 public:
  virtual ~Operad() = default;
  virtual std::string name() const = 0;
  virtual std::vector<OperadElement> basis(int arity) const = 0;
  virtual OperadSum compose(const OperadElement& a, int i, const OperadElement& b) const = 0;
  virtual OperadElement act(const OperadElement& a, const Permutation& s) const = 0;
  virtual OperadElement unit() const = 0;
  virtual std::string render(const OperadElement& a) const = 0;

  OperadSum compose(const OperadSum& a, int i, const OperadSum& b) const;
  OperadSum act(const OperadSum& a, const Permutation& s) const;
};

std::unique_ptr<Operad> assoc_operad();
std::unique_ptr<Operad> com_operad();
std::unique_ptr<Operad> prelie_operad();
/// "assoc", "com" or "prelie".
std::unique_ptr<Operad> make_operad(const std::string& which);

struct AxiomReport {
  std::string operad;
  int max_arity = 0;
  /// Number of instances checked per axiom.
  std::map<std::string, std::size_t> checked;
  std::vector<std::string> violations;
  bool passed() const { return violations.empty(); }
};

/// Nested and disjoint associativity, both unit laws and equivariance, over
/// every basis element of arity <= max_arity in each slot.
AxiomReport check_operad_axioms(const Operad& op, int max_arity);
std::string to_string(const AxiomReport& r);

}  // namespace forestcalc

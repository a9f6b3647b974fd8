#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace forestcalc {

/// A rooted tree with ordered children, exactly as written. This is the raw
/// input shape; `canonical_form` collapses isomorphic plane trees.
struct PlaneTree {
  int color = 0;
  std::vector<PlaneTree> children;
};

/// Unordered rooted tree with optional small integer vertex colors.
///
/// Children are kept sorted by their canonical rendering, so structural
/// equality is tree isomorphism. The rendering follows the grammar
///   tree  ::= "[" color? tree* "]"
///   color ::= ":" digits          (omitted when 0)
/// Nodes are immutable and shared, so copies are cheap.
class RootedTree {
 public:
  /// The single vertex of color 0.
  RootedTree();
  /// B+ of the given branches with a root of the given color.
  explicit RootedTree(std::vector<RootedTree> children, int color = 0);

  int color() const { return node_->color; }
  const std::vector<RootedTree>& children() const { return node_->children; }
  std::size_t vertex_count() const { return node_->vertices; }
  std::size_t edge_count() const { return node_->vertices - 1; }
  bool is_single_vertex() const { return node_->children.empty(); }
  const std::string& str() const { return node_->repr; }

  friend bool operator==(const RootedTree& a, const RootedTree& b) {
    return a.node_ == b.node_ || a.node_->repr == b.node_->repr;
  }
  friend std::strong_ordering operator<=>(const RootedTree& a, const RootedTree& b) {
    return a.node_->repr <=> b.node_->repr;
  }

 private:
  struct Node {
    int color;
    std::vector<RootedTree> children;
    std::string repr;
    std::size_t vertices;
  };
  std::shared_ptr<const Node> node_;
};

/// Multiset of rooted trees; the empty forest is the unit 1 and renders as "1".
class Forest {
 public:
  Forest() = default;
  explicit Forest(RootedTree tree);
  explicit Forest(std::vector<RootedTree> trees);

  const std::vector<RootedTree>& trees() const { return trees_; }
  bool empty() const { return trees_.empty(); }
  std::size_t size() const { return trees_.size(); }
  std::size_t vertex_count() const;
  std::size_t edge_count() const;
  bool is_tree() const { return trees_.size() == 1; }
  std::string str() const;

  friend Forest operator*(const Forest& a, const Forest& b);
  friend bool operator==(const Forest& a, const Forest& b) = default;
  friend std::strong_ordering operator<=>(const Forest& a, const Forest& b);

 private:
  std::vector<RootedTree> trees_;
};

/// The unique sorted representative of a plane tree.
RootedTree canonical_form(const PlaneTree& t);
/// Identity on already-canonical trees (kept for symmetry with the plane overload).
RootedTree canonical_form(const RootedTree& t);
/// One plane representative of a canonical tree (children in canonical order).
PlaneTree to_plane(const RootedTree& t);

/// Grafts the components of `f` on a common new root.
RootedTree b_plus(const Forest& f, int root_color = 0);

/// All canonical trees with `n` vertices and colors in [0, colors), sorted by
/// rendering. Empty for n = 0.
std::vector<RootedTree> enumerate_trees(std::size_t n, int colors = 1);
/// All forests with exactly `n` vertices (n = 0 gives the unit only).
std::vector<Forest> enumerate_forests(std::size_t n, int colors = 1);
/// All forests with at most `n` vertices, ordered by vertex count.
std::vector<Forest> forests_up_to(std::size_t n, int colors = 1);

/// Order of the root-fixing automorphism group.
std::uint64_t symmetry_factor(const RootedTree& t);
std::uint64_t symmetry_factor(const Forest& f);

PlaneTree parse_plane_tree(std::string_view text);
RootedTree parse_tree(std::string_view text);
/// Space separated trees, or "1" for the empty forest.
Forest parse_forest(std::string_view text);

/// Vertices of a forest in preorder; parent[v] < v, roots have parent -1.
struct FlatForest {
  std::vector<int> parent;
  std::vector<int> color;
  std::size_t size() const { return parent.size(); }
};

FlatForest flatten(const Forest& f);
FlatForest flatten(const RootedTree& t);
/// The subforest induced on the vertex set `mask`, keeping the edges that join
/// two vertices of the set.
Forest induced_subforest(const FlatForest& flat, std::uint64_t mask);
/// True when every vertex of `mask` has its parent in `mask` (or is a root).
bool is_downward_closed(const FlatForest& flat, std::uint64_t mask);

}  // namespace forestcalc

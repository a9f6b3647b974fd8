#include "forestcalc/substitution.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "forestcalc/errors.hpp"

namespace forestcalc {

bool is_edge_forest(const Forest& f) {
  for (const auto& t : f.trees()) {
    if (t.is_single_vertex()) return false;
  }
  return true;
}

namespace {

RootedTree tree_from_parents(const std::vector<int>& parent, const std::vector<int>& color, int root,
                             const std::vector<std::vector<int>>& kids) {
  std::vector<RootedTree> ch;
  for (int k : kids[root]) ch.push_back(tree_from_parents(parent, color, k, kids));
  return RootedTree(std::move(ch), color[root]);
}

TensorSum contraction_terms_uncached(const RootedTree& t) {
  FlatForest flat = flatten(t);
  const int n = static_cast<int>(flat.size());
  TensorSum out;
  // edge v joins v to parent[v], for v >= 1 (preorder puts the root at 0)
  const std::uint64_t edge_sets = 1ULL << (n - 1);
  for (std::uint64_t e = 0; e < edge_sets; ++e) {
    // top[v]: the highest vertex reachable from v through kept edges
    std::vector<int> top(n);
    for (int v = 0; v < n; ++v) top[v] = (v > 0 && (e >> (v - 1) & 1)) ? top[flat.parent[v]] : v;
    std::vector<int> size(n, 0);
    for (int v = 0; v < n; ++v) ++size[top[v]];
    // components are built separately: two extracted pieces may be adjacent
    std::vector<std::uint64_t> piece(n, 0);
    for (int v = 0; v < n; ++v) {
      if (size[top[v]] >= 2) piece[top[v]] |= 1ULL << v;
    }
    std::vector<RootedTree> extracted;
    for (int v = 0; v < n; ++v) {
      if (piece[v]) extracted.push_back(induced_subforest(flat, piece[v]).trees().front());
    }
    // contracted tree on the component tops
    std::vector<int> index(n, -1), parent, color;
    for (int v = 0; v < n; ++v) {
      if (top[v] != v) continue;
      index[v] = static_cast<int>(parent.size());
      parent.push_back(v == 0 ? -1 : index[top[flat.parent[v]]]);
      color.push_back(flat.color[v]);
    }
    std::vector<std::vector<int>> kids(parent.size());
    for (std::size_t w = 1; w < parent.size(); ++w) kids[parent[w]].push_back(static_cast<int>(w));
    out.add({Forest(std::move(extracted)), Forest(tree_from_parents(parent, color, 0, kids))}, Rational(1));
  }
  return out;
}

}  // namespace

TensorSum contraction_terms(const RootedTree& t) {
  static std::mutex mutex;
  static std::map<RootedTree, TensorSum> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(t); it != cache.end()) return it->second;
  }
  TensorSum out = contraction_terms_uncached(t);
  std::lock_guard lock(mutex);
  cache.emplace(t, out);
  return out;
}

TensorSum contraction_coproduct(const RootedTree& t) {
  if (t.is_single_vertex()) return TensorSum({Forest{}, Forest{}});
  TensorSum out;
  for (const auto& [k, c] : contraction_terms(t)) {
    Forest right = (k.second.vertex_count() == 1) ? Forest{} : k.second;
    out.add({k.first, right}, c);
  }
  return out;
}

TensorSum contraction_coproduct(const Forest& u) {
  if (!is_edge_forest(u)) throw PreconditionError("not an element of H: '" + u.str() + "' has a one-vertex component");
  TensorSum out({Forest{}, Forest{}});
  for (const auto& t : u.trees()) out = multiply(out, contraction_coproduct(t));
  return out;
}

namespace {

class HAntipodeSolver {
 public:
  explicit HAntipodeSolver(HAntipodeMethod method) : method_(method) {}

  ForestSum operator()(const Forest& u) {
    if (!is_edge_forest(u)) throw PreconditionError("not an element of H: '" + u.str() + "'");
    ForestSum out = unit_sum();
    for (const auto& t : u.trees()) out = multiply(out, tree(t));
    return out;
  }

  ForestSum operator()(const ForestSum& x) {
    ForestSum out;
    for (const auto& [f, c] : x) out += c * (*this)(f);
    return out;
  }

 private:
  const ForestSum& tree(const RootedTree& t) {
    if (auto it = memo_.find(t); it != memo_.end()) return it->second;
    const Forest whole(t);
    ForestSum s = -ForestSum(whole);
    for (const auto& [k, c] : contraction_coproduct(t)) {
      if (k.first.empty() || k.second.empty()) continue;
      if (method_ == HAntipodeMethod::crown_recursion) {
        s -= c * multiply((*this)(k.first), ForestSum(k.second));
      } else {
        s -= c * multiply(ForestSum(k.first), (*this)(k.second));
      }
    }
    return memo_.emplace(t, std::move(s)).first->second;
  }

  HAntipodeMethod method_;
  std::map<RootedTree, ForestSum> memo_;
};

}  // namespace

ForestSum h_antipode(const Forest& u, HAntipodeMethod method) { return HAntipodeSolver(method)(u); }

ForestSum h_antipode(const ForestSum& x, HAntipodeMethod method) { return HAntipodeSolver(method)(x); }

TensorSum coaction(const Forest& u) {
  TensorSum out({Forest{}, Forest{}});
  for (const auto& t : u.trees()) out = multiply(out, contraction_terms(t));
  return out;
}

RationalFunctional substitution_star(const RationalFunctional& alpha, const RationalFunctional& beta) {
  if (alpha.colors() != beta.colors()) throw MismatchError("functionals over different color palettes");
  const std::size_t d = std::min(alpha.truncation(), beta.truncation());
  RationalFunctional out(FunctionalKind::general, d, Rational(0), beta.colors());
  for (const auto& u : forests_up_to(d, beta.colors())) {
    Rational v = 0;
    for (const auto& [k, c] : coaction(u)) {
      Rational a = 1;
      for (const auto& t : k.first.trees()) a *= alpha(t);
      if (a == 0) continue;
      v += c * a * beta(k.second);
    }
    out.set(u, v);
  }
  return out;
}

std::vector<Forest> enumerate_edge_forests(std::size_t edges) {
  std::vector<Forest> out;
  for (std::size_t n = edges; n <= 2 * edges; ++n) {
    for (const auto& f : enumerate_forests(n)) {
      if (f.edge_count() == edges && is_edge_forest(f)) out.push_back(f);
    }
  }
  return out;
}

}  // namespace forestcalc

#include "forestcalc/tree.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>

#include "forestcalc/errors.hpp"

namespace forestcalc {

RootedTree::RootedTree() : RootedTree(std::vector<RootedTree>{}, 0) {}

RootedTree::RootedTree(std::vector<RootedTree> children, int color) {
  if (color < 0) throw PreconditionError("tree colors must be non-negative");
  std::sort(children.begin(), children.end());
  std::string repr = "[";
  if (color != 0) repr += ":" + std::to_string(color);
  std::size_t vertices = 1;
  for (const auto& c : children) {
    repr += c.str();
    vertices += c.vertex_count();
  }
  repr += "]";
  node_ = std::make_shared<const Node>(Node{color, std::move(children), std::move(repr), vertices});
}

Forest::Forest(RootedTree tree) : trees_{std::move(tree)} {}

Forest::Forest(std::vector<RootedTree> trees) : trees_(std::move(trees)) {
  std::sort(trees_.begin(), trees_.end());
}

std::size_t Forest::vertex_count() const {
  std::size_t n = 0;
  for (const auto& t : trees_) n += t.vertex_count();
  return n;
}

std::size_t Forest::edge_count() const {
  std::size_t n = 0;
  for (const auto& t : trees_) n += t.edge_count();
  return n;
}

std::string Forest::str() const {
  if (trees_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < trees_.size(); ++i) {
    if (i) s += ' ';
    s += trees_[i].str();
  }
  return s;
}

Forest operator*(const Forest& a, const Forest& b) {
  std::vector<RootedTree> merged;
  merged.reserve(a.trees_.size() + b.trees_.size());
  std::merge(a.trees_.begin(), a.trees_.end(), b.trees_.begin(), b.trees_.end(), std::back_inserter(merged));
  Forest f;
  f.trees_ = std::move(merged);
  return f;
}

std::strong_ordering operator<=>(const Forest& a, const Forest& b) {
  return std::lexicographical_compare_three_way(a.trees_.begin(), a.trees_.end(), b.trees_.begin(),
                                                b.trees_.end());
}

RootedTree canonical_form(const PlaneTree& t) {
  std::vector<RootedTree> children;
  children.reserve(t.children.size());
  for (const auto& c : t.children) children.push_back(canonical_form(c));
  return RootedTree(std::move(children), t.color);
}

RootedTree canonical_form(const RootedTree& t) { return t; }

PlaneTree to_plane(const RootedTree& t) {
  PlaneTree p{t.color(), {}};
  for (const auto& c : t.children()) p.children.push_back(to_plane(c));
  return p;
}

RootedTree b_plus(const Forest& f, int root_color) { return RootedTree(f.trees(), root_color); }

namespace {

struct EnumerationCache {
  std::mutex mutex;
  std::map<std::pair<std::size_t, int>, std::vector<RootedTree>> trees;
  std::map<std::pair<std::size_t, int>, std::vector<Forest>> forests;
};

EnumerationCache& cache() {
  static EnumerationCache c;
  return c;
}

std::vector<RootedTree> trees_locked(std::size_t n, int colors);

// Multisets of trees with total size `n`, using trees no larger (in the
// enumeration order) than `bound` to avoid duplicates.
void forests_rec(const std::vector<RootedTree>& pool, std::size_t bound, std::size_t remaining,
                 std::vector<RootedTree>& current, std::vector<Forest>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (std::size_t i = 0; i < bound; ++i) {
    const auto& t = pool[i];
    if (t.vertex_count() > remaining) continue;
    current.push_back(t);
    forests_rec(pool, i + 1, remaining - t.vertex_count(), current, out);
    current.pop_back();
  }
}

std::vector<Forest> forests_locked(std::size_t n, int colors) {
  auto key = std::make_pair(n, colors);
  auto& c = cache();
  if (auto it = c.forests.find(key); it != c.forests.end()) return it->second;
  std::vector<RootedTree> pool;
  for (std::size_t k = 1; k <= n; ++k) {
    auto tk = trees_locked(k, colors);
    pool.insert(pool.end(), tk.begin(), tk.end());
  }
  std::vector<Forest> out;
  std::vector<RootedTree> current;
  forests_rec(pool, pool.size(), n, current, out);
  std::sort(out.begin(), out.end());
  c.forests.emplace(key, out);
  return out;
}

std::vector<RootedTree> trees_locked(std::size_t n, int colors) {
  if (n == 0) return {};
  auto key = std::make_pair(n, colors);
  auto& c = cache();
  if (auto it = c.trees.find(key); it != c.trees.end()) return it->second;
  std::vector<RootedTree> out;
  for (const auto& f : forests_locked(n - 1, colors)) {
    for (int color = 0; color < colors; ++color) out.push_back(b_plus(f, color));
  }
  std::sort(out.begin(), out.end());
  c.trees.emplace(key, out);
  return out;
}

}  // namespace

std::vector<RootedTree> enumerate_trees(std::size_t n, int colors) {
  if (colors < 1) throw PreconditionError("at least one color is required");
  std::lock_guard lock(cache().mutex);
  return trees_locked(n, colors);
}

std::vector<Forest> enumerate_forests(std::size_t n, int colors) {
  if (colors < 1) throw PreconditionError("at least one color is required");
  std::lock_guard lock(cache().mutex);
  return forests_locked(n, colors);
}

std::vector<Forest> forests_up_to(std::size_t n, int colors) {
  std::vector<Forest> out;
  for (std::size_t k = 0; k <= n; ++k) {
    auto fk = enumerate_forests(k, colors);
    out.insert(out.end(), fk.begin(), fk.end());
  }
  return out;
}

std::uint64_t symmetry_factor(const RootedTree& t) {
  // sigma(B+(t1^m1 ... tk^mk)) = prod m_i! sigma(t_i)^m_i
  std::uint64_t result = 1;
  const auto& ch = t.children();
  for (std::size_t i = 0; i < ch.size();) {
    std::size_t j = i;
    while (j < ch.size() && ch[j] == ch[i]) ++j;
    std::uint64_t s = symmetry_factor(ch[i]);
    for (std::size_t m = 1; m <= j - i; ++m) result *= m * s;
    i = j;
  }
  return result;
}

std::uint64_t symmetry_factor(const Forest& f) {
  std::uint64_t result = 1;
  const auto& ts = f.trees();
  for (std::size_t i = 0; i < ts.size();) {
    std::size_t j = i;
    while (j < ts.size() && ts[j] == ts[i]) ++j;
    std::uint64_t s = symmetry_factor(ts[i]);
    for (std::size_t m = 1; m <= j - i; ++m) result *= m * s;
    i = j;
  }
  return result;
}

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  PlaneTree tree() {
    if (peek() != '[') fail("expected '['");
    ++pos_;
    PlaneTree t;
    if (peek() == ':') {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected color digits after ':'");
      if (pos_ - start > 6) fail("color too large");
      t.color = std::stoi(std::string(text_.substr(start, pos_ - start)));
    }
    while (peek() == '[') t.children.push_back(tree());
    if (peek() != ']') fail("expected ']'");
    ++pos_;
    return t;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PlaneTree parse_plane_tree(std::string_view text) {
  TreeParser p(text);
  PlaneTree t = p.tree();
  if (!p.at_end()) p.fail("trailing input");
  return t;
}

RootedTree parse_tree(std::string_view text) { return canonical_form(parse_plane_tree(text)); }

Forest parse_forest(std::string_view text) {
  TreeParser p(text);
  if (p.peek() == '1') {
    std::string_view rest = text.substr(text.find('1') + 1);
    TreeParser tail(rest);
    if (!tail.at_end()) p.fail("trailing input after unit");
    return Forest{};
  }
  std::vector<RootedTree> trees;
  while (!p.at_end()) trees.push_back(canonical_form(p.tree()));
  if (trees.empty()) p.fail("empty forest must be written as '1'");
  return Forest(std::move(trees));
}

namespace {

void flatten_into(const RootedTree& t, int parent, FlatForest& out) {
  int me = static_cast<int>(out.parent.size());
  out.parent.push_back(parent);
  out.color.push_back(t.color());
  for (const auto& c : t.children()) flatten_into(c, me, out);
}

RootedTree build_component(const FlatForest& flat, std::uint64_t mask, int root,
                           const std::vector<std::vector<int>>& kids) {
  std::vector<RootedTree> children;
  for (int k : kids[root]) {
    if (mask >> k & 1) children.push_back(build_component(flat, mask, k, kids));
  }
  return RootedTree(std::move(children), flat.color[root]);
}

}  // namespace

FlatForest flatten(const Forest& f) {
  FlatForest out;
  for (const auto& t : f.trees()) flatten_into(t, -1, out);
  if (out.size() > 63) throw PreconditionError("forest too large to flatten");
  return out;
}

FlatForest flatten(const RootedTree& t) { return flatten(Forest(t)); }

Forest induced_subforest(const FlatForest& flat, std::uint64_t mask) {
  const int n = static_cast<int>(flat.size());
  std::vector<std::vector<int>> kids(n);
  for (int v = 0; v < n; ++v) {
    if (flat.parent[v] >= 0) kids[flat.parent[v]].push_back(v);
  }
  std::vector<RootedTree> comps;
  for (int v = 0; v < n; ++v) {
    if (!(mask >> v & 1)) continue;
    int p = flat.parent[v];
    if (p >= 0 && (mask >> p & 1)) continue;
    comps.push_back(build_component(flat, mask, v, kids));
  }
  return Forest(std::move(comps));
}

bool is_downward_closed(const FlatForest& flat, std::uint64_t mask) {
  for (std::size_t v = 0; v < flat.size(); ++v) {
    if (!(mask >> v & 1)) continue;
    int p = flat.parent[v];
    if (p >= 0 && !(mask >> p & 1)) return false;
  }
  return true;
}

}  // namespace forestcalc

#include "forestcalc/prelie.hpp"

#include <mutex>

#include "forestcalc/ck_hopf.hpp"

namespace forestcalc {

namespace {

std::vector<RootedTree> graft_trees(const RootedTree& s, const RootedTree& t) {
  std::vector<RootedTree> out;
  std::vector<RootedTree> at_root = t.children();
  at_root.push_back(s);
  out.emplace_back(std::move(at_root), t.color());
  const auto& ch = t.children();
  for (std::size_t i = 0; i < ch.size(); ++i) {
    if (i > 0 && ch[i] == ch[i - 1]) {
      // isomorphic sibling: reuse the previous result once more
      continue;
    }
    std::size_t multiplicity = 1;
    while (i + multiplicity < ch.size() && ch[i + multiplicity] == ch[i]) ++multiplicity;
    for (const auto& g : graft_trees(s, ch[i])) {
      std::vector<RootedTree> branches = ch;
      branches[i] = g;
      RootedTree r(std::move(branches), t.color());
      for (std::size_t m = 0; m < multiplicity; ++m) out.push_back(r);
    }
  }
  return out;
}

}  // namespace

TreeSum graft(const RootedTree& s, const RootedTree& t) {
  static std::mutex mutex;
  static std::map<std::pair<RootedTree, RootedTree>, TreeSum> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({s, t}); it != cache.end()) return it->second;
  }
  TreeSum out;
  for (const auto& g : graft_trees(s, t)) out.add(g, Rational(1));
  std::lock_guard lock(mutex);
  cache.emplace(std::make_pair(s, t), out);
  return out;
}

TreeSum graft(const TreeSum& s, const TreeSum& t) {
  return bilinear(s, t, [](const RootedTree& a, const RootedTree& b) { return graft(a, b); });
}

TreeSum prelie_bracket(const TreeSum& a, const TreeSum& b) { return graft(a, b) - graft(b, a); }

TreeSum generator(int color) { return TreeSum(RootedTree({}, color)); }

GraftingCounts grafting_counts(const RootedTree& t, const RootedTree& u, const RootedTree& v) {
  Rational n = coproduct(Forest(v)).coefficient({Forest(t), Forest(u)});
  Rational m = n * Rational(static_cast<unsigned long>(symmetry_factor(t))) *
               Rational(static_cast<unsigned long>(symmetry_factor(u))) /
               Rational(static_cast<unsigned long>(symmetry_factor(v)));
  return {static_cast<std::uint64_t>(n.get_num().get_ui()), m};
}

MagmaSum magma_generator(const std::string& name) { return MagmaSum(name); }

MagmaSum magma_product(const MagmaSum& x, const MagmaSum& y) {
  auto wrap = [](const std::string& m) { return m.find('>') == std::string::npos ? m : "(" + m + ")"; };
  return bilinear(x, y, [&](const std::string& a, const std::string& b) { return MagmaSum(wrap(a) + ">" + wrap(b)); });
}

Rational bernoulli(unsigned n) {
  static std::mutex mutex;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard lock(mutex);
  while (table.size() <= n) {
    // sum_{k=0}^{m} C(m+1, k) B_k = 0
    const unsigned m = static_cast<unsigned>(table.size());
    Rational s = 0;
    mpz_class binom = 1;  // C(m+1, k)
    for (unsigned k = 0; k < m; ++k) {
      s += Rational(binom) * table[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    table.push_back(-s / Rational(m + 1));
  }
  return table[n];
}

namespace {

TreeSum left_mult(const TreeSum& y, const TreeSum& x, std::size_t order) {
  return truncate(graft(truncate(y, order), truncate(x, order)), order);
}

}  // namespace

TreeSum exp_left_action(const TreeSum& y, const TreeSum& x, std::size_t order) {
  TreeSum out = truncate(x, order);
  TreeSum term = out;
  for (std::size_t n = 1; n <= order && !term.empty(); ++n) {
    term = left_mult(y, term, order);
    term *= Rational(1, static_cast<unsigned long>(n));
    out += term;
  }
  return out;
}

TreeSum w_map(const TreeSum& x, std::size_t order) {
  // e^{L_x} 1 - 1, where L_x 1 = x
  TreeSum out;
  TreeSum term = truncate(x, order);
  for (std::size_t n = 1; n <= order && !term.empty(); ++n) {
    out += Rational(1) / factorial(static_cast<unsigned>(n)) * term;
    term = left_mult(x, term, order);
  }
  return out;
}

TreeSum magnus_omega(const TreeSum& x, std::size_t order) {
  if (order == 0) throw PreconditionError("order must be positive");
  TreeSum omega = truncate(x, order);
  // each pass fixes one more degree of the fixed point
  for (std::size_t pass = 1; pass < order; ++pass) {
    TreeSum next = truncate(x, order);
    TreeSum term = next;
    for (std::size_t i = 1; i < order && !term.empty(); ++i) {
      term = left_mult(omega, term, order);
      next += bernoulli(static_cast<unsigned>(i)) / factorial(static_cast<unsigned>(i)) * term;
    }
    omega = std::move(next);
  }
  return omega;
}

TreeSum magnus_omega(std::size_t order) { return magnus_omega(generator(0), order); }

TreeSum sharp_product(const TreeSum& a, const TreeSum& b, std::size_t order) {
  return truncate(a, order) + exp_left_action(magnus_omega(a, order), b, order);
}

TreeSum sharp_inverse(const TreeSum& a, std::size_t order) { return w_map(-magnus_omega(a, order), order); }

TreeSum bch(const TreeSum& a, const TreeSum& b, std::size_t order) {
  return magnus_omega(sharp_product(w_map(a, order), w_map(b, order), order), order);
}

RootedTree forget_colors(const RootedTree& t) {
  std::vector<RootedTree> ch;
  for (const auto& c : t.children()) ch.push_back(forget_colors(c));
  return RootedTree(std::move(ch), 0);
}

TreeSum forget_colors(const TreeSum& x) {
  return x.mapped([](const RootedTree& t) { return forget_colors(t); });
}

ForestSum m_action(const TreeSum& a, const ForestSum& u, std::size_t order) {
  ForestSum out = truncate(multiply(as_forest_sum(a), u), order);
  for (const auto& [f, c] : u) {
    const auto& trees = f.trees();
    for (std::size_t i = 0; i < trees.size(); ++i) {
      std::vector<RootedTree> others;
      for (std::size_t j = 0; j < trees.size(); ++j) {
        if (j != i) others.push_back(trees[j]);
      }
      Forest rest(std::move(others));
      if (rest.vertex_count() + trees[i].vertex_count() + 1 > order) continue;
      for (const auto& [g, d] : graft(a, TreeSum(trees[i]))) {
        if (rest.vertex_count() + g.vertex_count() > order) continue;
        out.add(rest * Forest(g), c * d);
      }
    }
  }
  return out;
}

ForestSum star_exp_applied(const TreeSum& a, const ForestSum& u, std::size_t order) {
  ForestSum out = truncate(u, order);
  ForestSum term = out;
  for (std::size_t n = 1; n <= order && !term.empty(); ++n) {
    term = m_action(a, term, order);
    term *= Rational(1, static_cast<unsigned long>(n));
    out += term;
  }
  return out;
}

ForestSum star_exp(const TreeSum& a, std::size_t order) { return star_exp_applied(a, unit_sum(), order); }

ForestSum star_exp_product(const TreeSum& a, const TreeSum& b, std::size_t order) {
  return star_exp_applied(a, star_exp(b, order), order);
}

}  // namespace forestcalc

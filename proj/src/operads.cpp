#include "forestcalc/operads.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <tuple>

#include "forestcalc/errors.hpp"

namespace forestcalc {

Permutation Permutation::identity(int n) {
  Permutation p;
  p.w.resize(n);
  std::iota(p.w.begin(), p.w.end(), 1);
  return p;
}

Permutation operator*(const Permutation& s, const Permutation& t) {
  if (s.size() != t.size()) throw MismatchError("permutations of different sizes");
  Permutation p;
  for (int k = 1; k <= t.size(); ++k) p.w.push_back(s(t(k)));
  return p;
}

Permutation inverse(const Permutation& s) {
  Permutation p;
  p.w.resize(s.size());
  for (int k = 1; k <= s.size(); ++k) p.w[s(k) - 1] = k;
  return p;
}

bool is_permutation(const std::vector<int>& w) {
  std::vector<bool> seen(w.size(), false);
  for (int v : w) {
    if (v < 1 || v > static_cast<int>(w.size()) || seen[v - 1]) return false;
    seen[v - 1] = true;
  }
  return true;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  Permutation p = Permutation::identity(n);
  do out.push_back(p);
  while (std::next_permutation(p.w.begin(), p.w.end()));
  return out;
}

std::string to_string(const Permutation& s) {
  std::string r = "(";
  for (int k = 0; k < s.size(); ++k) r += (k ? " " : "") + std::to_string(s.w[k]);
  return r + ")";
}

Permutation assoc_compose(const Permutation& s, int i, const Permutation& t) {
  const int k = s.size(), l = t.size();
  if (i < 1 || i > k) throw PreconditionError("composition slot " + std::to_string(i) + " out of range");
  // inputs are multiplied in the order given by the inverse words
  const Permutation order_s = inverse(s), order_t = inverse(t);
  Permutation order;
  for (int p : order_s.w) {
    if (p < i) {
      order.w.push_back(p);
    } else if (p == i) {
      for (int q : order_t.w) order.w.push_back(i - 1 + q);
    } else {
      order.w.push_back(p + l - 1);
    }
  }
  return inverse(order);
}

PermutationSum assoc_compose(const PermutationSum& s, int i, const PermutationSum& t) {
  PermutationSum out;
  for (const auto& [a, ca] : s) {
    for (const auto& [b, cb] : t) out.add(assoc_compose(a, i, b), ca * cb);
  }
  return out;
}

void validate(const LabelledTree& t) {
  const int n = t.size();
  if (n == 0) throw PreconditionError("a labelled tree needs at least one vertex");
  int roots = 0;
  for (int v = 0; v < n; ++v) {
    int p = t.parent[v];
    if (p == -1) {
      ++roots;
    } else if (p < 0 || p >= n || p == v) {
      throw PreconditionError("invalid parent in labelled tree");
    }
  }
  if (roots != 1) throw PreconditionError("a labelled tree needs exactly one root");
  for (int v = 0; v < n; ++v) {
    int steps = 0;
    for (int u = v; u != -1; u = t.parent[u]) {
      if (++steps > n) throw PreconditionError("labelled tree has a cycle");
    }
  }
}

std::vector<LabelledTree> labelled_trees(int n) {
  std::vector<LabelledTree> out;
  if (n <= 0) return out;
  LabelledTree t{std::vector<int>(n, -1)};
  // each vertex picks a parent in {-1, 0..n-1}; keep the valid trees
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      try {
        validate(t);
        out.push_back(t);
      } catch (const PreconditionError&) {
      }
      return;
    }
    for (int p = -1; p < n; ++p) {
      if (p == v) continue;
      t.parent[v] = p;
      rec(v + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<std::vector<int>> children_of(const LabelledTree& t) {
  std::vector<std::vector<int>> kids(t.size());
  for (int v = 0; v < t.size(); ++v) {
    if (t.parent[v] >= 0) kids[t.parent[v]].push_back(v);
  }
  return kids;
}

int root_of(const LabelledTree& t) {
  return static_cast<int>(std::find(t.parent.begin(), t.parent.end(), -1) - t.parent.begin());
}

RootedTree build(const std::vector<std::vector<int>>& kids, int v) {
  std::vector<RootedTree> c;
  for (int w : kids[v]) c.push_back(build(kids, w));
  return RootedTree(std::move(c));
}

void render(const std::vector<std::vector<int>>& kids, int v, std::string& out) {
  out += std::to_string(v + 1);
  if (kids[v].empty()) return;
  out += "(";
  for (std::size_t k = 0; k < kids[v].size(); ++k) {
    if (k) out += ",";
    render(kids, kids[v][k], out);
  }
  out += ")";
}

}  // namespace

RootedTree forget_labels(const LabelledTree& t) {
  validate(t);
  return build(children_of(t), root_of(t));
}

LabelledTree some_labelling(const RootedTree& t) { return LabelledTree{flatten(t).parent}; }

std::string to_string(const LabelledTree& t) {
  validate(t);
  std::string out;
  render(children_of(t), root_of(t), out);
  return out;
}

LabelledTreeSum prelie_insert(const LabelledTree& s, int i, const LabelledTree& t) {
  validate(s);
  validate(t);
  const int n = s.size(), l = t.size();
  if (i < 1 || i > n) throw PreconditionError("no vertex labelled " + std::to_string(i));
  const int x = i - 1;
  auto relabel_s = [&](int v) { return v < x ? v : v + l - 1; };
  const int t_root = root_of(t);
  std::vector<int> kids;
  for (int v = 0; v < n; ++v) {
    if (s.parent[v] == x) kids.push_back(v);
  }
  LabelledTreeSum out;
  std::vector<int> target(kids.size(), 0);
  while (true) {
    LabelledTree r{std::vector<int>(n + l - 1, -1)};
    for (int v = 0; v < n; ++v) {
      if (v == x) continue;
      const int p = s.parent[v];
      int np = -1;
      if (p == x) {
        np = x + target[std::find(kids.begin(), kids.end(), v) - kids.begin()];
      } else if (p >= 0) {
        np = relabel_s(p);
      }
      r.parent[relabel_s(v)] = np;
    }
    for (int u = 0; u < l; ++u) {
      if (u == t_root) {
        r.parent[x + u] = s.parent[x] < 0 ? -1 : relabel_s(s.parent[x]);
      } else {
        r.parent[x + u] = x + t.parent[u];
      }
    }
    out.add(r, Rational(1));
    std::size_t k = 0;
    while (k < target.size() && ++target[k] == l) target[k++] = 0;
    if (k == target.size()) break;
  }
  return out;
}

LabelledTree act(const LabelledTree& t, const Permutation& s) {
  validate(t);
  if (s.size() != t.size()) throw MismatchError("permutation size differs from the tree size");
  const Permutation inv = inverse(s);
  LabelledTree r{std::vector<int>(t.size(), -1)};
  for (int m = 1; m <= t.size(); ++m) {
    const int old_parent = t.parent[s(m) - 1];
    r.parent[m - 1] = old_parent < 0 ? -1 : inv(old_parent + 1) - 1;
  }
  return r;
}

TreeSum insertion_product(const RootedTree& s, const RootedTree& t) {
  const LabelledTree ls = some_labelling(s), lt = some_labelling(t);
  TreeSum out;
  for (int i = 1; i <= ls.size(); ++i) {
    for (const auto& [r, c] : prelie_insert(ls, i, lt)) out.add(forget_labels(r), c);
  }
  return out;
}

OperadSum Operad::compose(const OperadSum& a, int i, const OperadSum& b) const {
  OperadSum out;
  for (const auto& [x, cx] : a) {
    for (const auto& [y, cy] : b) {
      for (const auto& [z, cz] : compose(x, i, y)) out.add(z, cx * cy * cz);
    }
  }
  return out;
}

OperadSum Operad::act(const OperadSum& a, const Permutation& s) const {
  OperadSum out;
  for (const auto& [x, c] : a) out.add(act(x, s), c);
  return out;
}

namespace {

void check_slot(const OperadElement& a, int i) {
  if (i < 1 || i > a.arity) throw PreconditionError("composition slot " + std::to_string(i) + " out of range");
}

void check_action(const OperadElement& a, const Permutation& s) {
  if (s.size() != a.arity) throw MismatchError("permutation size differs from the arity");
}

class AssocOperad : public Operad {
 public:
  std::string name() const override { return "assoc"; }
  std::vector<OperadElement> basis(int arity) const override {
    std::vector<OperadElement> out;
    if (arity < 1) return out;
    for (const auto& p : all_permutations(arity)) out.push_back({arity, p.w});
    return out;
  }
  using Operad::act;
  using Operad::compose;
  OperadSum compose(const OperadElement& a, int i, const OperadElement& b) const override {
    check_slot(a, i);
    const Permutation c = assoc_compose(Permutation{a.data}, i, Permutation{b.data});
    return OperadSum(OperadElement{c.size(), c.w});
  }
  OperadElement act(const OperadElement& a, const Permutation& s) const override {
    check_action(a, s);
    return {a.arity, (Permutation{a.data} * s).w};
  }
  OperadElement unit() const override { return {1, {1}}; }
  std::string render(const OperadElement& a) const override { return to_string(Permutation{a.data}); }
};

class ComOperad : public Operad {
 public:
  std::string name() const override { return "com"; }
  std::vector<OperadElement> basis(int arity) const override {
    if (arity < 1) return {};
    return {OperadElement{arity, {}}};
  }
  using Operad::act;
  using Operad::compose;
  OperadSum compose(const OperadElement& a, int i, const OperadElement& b) const override {
    check_slot(a, i);
    return OperadSum(OperadElement{a.arity + b.arity - 1, {}});
  }
  OperadElement act(const OperadElement& a, const Permutation& s) const override {
    check_action(a, s);
    return a;
  }
  OperadElement unit() const override { return {1, {}}; }
  std::string render(const OperadElement& a) const override { return "e" + std::to_string(a.arity); }
};

class PreLieOperad : public Operad {
 public:
  std::string name() const override { return "prelie"; }
  std::vector<OperadElement> basis(int arity) const override {
    std::vector<OperadElement> out;
    for (const auto& t : labelled_trees(arity)) out.push_back({arity, t.parent});
    return out;
  }
  using Operad::act;
  using Operad::compose;
  OperadSum compose(const OperadElement& a, int i, const OperadElement& b) const override {
    check_slot(a, i);
    OperadSum out;
    for (const auto& [t, c] : prelie_insert(LabelledTree{a.data}, i, LabelledTree{b.data})) {
      out.add(OperadElement{t.size(), t.parent}, c);
    }
    return out;
  }
  OperadElement act(const OperadElement& a, const Permutation& s) const override {
    check_action(a, s);
    return {a.arity, forestcalc::act(LabelledTree{a.data}, s).parent};
  }
  OperadElement unit() const override { return {1, {-1}}; }
  std::string render(const OperadElement& a) const override { return to_string(LabelledTree{a.data}); }
};

std::string render_sum(const Operad& op, const OperadSum& s) {
  if (s.empty()) return "0";
  std::string out;
  for (const auto& [x, c] : s) {
    if (!out.empty()) out += " + ";
    out += to_short_string(c) + "*" + op.render(x);
  }
  return out;
}

}  // namespace

std::unique_ptr<Operad> assoc_operad() { return std::make_unique<AssocOperad>(); }
std::unique_ptr<Operad> com_operad() { return std::make_unique<ComOperad>(); }
std::unique_ptr<Operad> prelie_operad() { return std::make_unique<PreLieOperad>(); }

std::unique_ptr<Operad> make_operad(const std::string& which) {
  if (which == "assoc") return assoc_operad();
  if (which == "com") return com_operad();
  if (which == "prelie") return prelie_operad();
  throw PreconditionError("unknown operad '" + which + "' (expected assoc, com or prelie)");
}

AxiomReport check_operad_axioms(const Operad& op, int max_arity) {
  AxiomReport report{op.name(), max_arity, {}, {}};
  std::vector<OperadElement> elems;
  for (int n = 1; n <= max_arity; ++n) {
    auto b = op.basis(n);
    elems.insert(elems.end(), b.begin(), b.end());
  }
  std::map<std::tuple<OperadElement, int, OperadElement>, OperadSum> memo;
  auto comp = [&](const OperadElement& a, int i, const OperadElement& b) -> const OperadSum& {
    auto key = std::make_tuple(a, i, b);
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, op.compose(a, i, b)).first;
    return it->second;
  };
  auto comp_sum = [&](const OperadSum& a, int i, const OperadElement& b) {
    OperadSum out;
    for (const auto& [x, c] : a) {
      for (const auto& [z, cz] : comp(x, i, b)) out.add(z, c * cz);
    }
    return out;
  };
  auto comp_into = [&](const OperadElement& a, int i, const OperadSum& b) {
    OperadSum out;
    for (const auto& [y, c] : b) {
      for (const auto& [z, cz] : comp(a, i, y)) out.add(z, c * cz);
    }
    return out;
  };
  auto fail = [&](const std::string& axiom, const std::string& detail, const OperadSum& lhs, const OperadSum& rhs) {
    report.violations.push_back(axiom + ": " + detail + ": " + render_sum(op, lhs) + " != " + render_sum(op, rhs));
  };

  for (const auto& a : elems) {
    const int k = a.arity;
    for (const auto& b : elems) {
      const int l = b.arity;
      for (const auto& c : elems) {
        for (int i = 1; i <= k; ++i) {
          const OperadSum& ab = comp(a, i, b);
          for (int j = 1; j <= l; ++j) {
            OperadSum lhs = comp_sum(ab, i + j - 1, c);
            OperadSum rhs = comp_into(a, i, comp(b, j, c));
            ++report.checked["nested"];
            if (!(lhs == rhs)) {
              fail("nested", op.render(a) + " o" + std::to_string(i) + " " + op.render(b) + " o" +
                                 std::to_string(j) + " " + op.render(c),
                   lhs, rhs);
            }
          }
          for (int j = i + 1; j <= k; ++j) {
            OperadSum lhs = comp_sum(ab, l + j - 1, c);
            OperadSum rhs = comp_sum(comp(a, j, c), i, b);
            ++report.checked["disjoint"];
            if (!(lhs == rhs)) {
              fail("disjoint", op.render(a) + " slots " + std::to_string(i) + "," + std::to_string(j) + " with " +
                                   op.render(b) + ", " + op.render(c),
                   lhs, rhs);
            }
          }
        }
      }
    }
  }

  const OperadElement e = op.unit();
  for (const auto& a : elems) {
    ++report.checked["left unit"];
    if (!(comp(e, 1, a) == OperadSum(a))) fail("left unit", op.render(a), comp(e, 1, a), OperadSum(a));
    for (int i = 1; i <= a.arity; ++i) {
      ++report.checked["right unit"];
      if (!(comp(a, i, e) == OperadSum(a))) {
        fail("right unit", op.render(a) + " slot " + std::to_string(i), comp(a, i, e), OperadSum(a));
      }
    }
  }

  std::map<int, std::vector<Permutation>> perms;
  for (int n = 1; n <= max_arity; ++n) perms[n] = all_permutations(n);
  for (const auto& a : elems) {
    for (const auto& b : elems) {
      for (const auto& s : perms[a.arity]) {
        const OperadElement as = op.act(a, s);
        for (const auto& t : perms[b.arity]) {
          const OperadElement bt = op.act(b, t);
          for (int i = 1; i <= a.arity; ++i) {
            const OperadSum& lhs = comp(as, i, bt);
            OperadSum rhs = op.act(comp(a, s(i), b), assoc_compose(s, i, t));
            ++report.checked["equivariance"];
            if (!(lhs == rhs)) {
              fail("equivariance", op.render(a) + "." + to_string(s) + " o" + std::to_string(i) + " " +
                                       op.render(b) + "." + to_string(t),
                   lhs, rhs);
            }
          }
        }
      }
    }
  }
  return report;
}

std::string to_string(const AxiomReport& r) {
  std::string out = "operad " + r.operad + ", arity <= " + std::to_string(r.max_arity) + "\n";
  for (const auto& [axiom, n] : r.checked) out += "  " + axiom + ": " + std::to_string(n) + " checked\n";
  out += "  violations: " + std::to_string(r.violations.size()) + "\n";
  for (const auto& v : r.violations) out += "    " + v + "\n";
  out += r.passed() ? "PASS\n" : "FAIL\n";
  return out;
}

}  // namespace forestcalc

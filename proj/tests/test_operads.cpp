#include <random>
#include <string>

#include "doctest.h"
#include "forestcalc/errors.hpp"
#include "forestcalc/operads.hpp"
#include "forestcalc/prelie.hpp"

using namespace forestcalc;

namespace {

RootedTree T(const char* s) { return parse_tree(s); }
Permutation P(std::vector<int> w) { return Permutation{std::move(w)}; }

// σ as the operation on words sending (v_1..v_k) to v_{σ⁻¹(1)}...v_{σ⁻¹(k)}.
std::string apply_word(const Permutation& s, const std::vector<std::string>& v) {
  std::string out;
  const Permutation inv = inverse(s);
  for (int k = 1; k <= s.size(); ++k) out += v[inv(k) - 1];
  return out;
}

// Oracle for σ ∘_i τ: substitute the operation τ into input i of σ and read
// off which permutation the composite operation is.
std::string composite_on_letters(const Permutation& s, int i, const Permutation& t) {
  const int k = s.size(), l = t.size();
  std::vector<std::string> letters;
  for (int m = 0; m < k + l - 1; ++m) letters.push_back(std::string(1, static_cast<char>('a' + m)));
  std::vector<std::string> inner(letters.begin() + (i - 1), letters.begin() + (i - 1 + l));
  std::vector<std::string> outer(letters.begin(), letters.begin() + (i - 1));
  outer.push_back(apply_word(t, inner));
  outer.insert(outer.end(), letters.begin() + (i - 1 + l), letters.end());
  return apply_word(s, outer);
}

std::string on_letters(const Permutation& s) {
  std::vector<std::string> letters;
  for (int m = 0; m < s.size(); ++m) letters.push_back(std::string(1, static_cast<char>('a' + m)));
  return apply_word(s, letters);
}

std::vector<RootedTree> trees_up_to(std::size_t n) {
  std::vector<RootedTree> out;
  for (std::size_t k = 1; k <= n; ++k) {
    auto tk = enumerate_trees(k);
    out.insert(out.end(), tk.begin(), tk.end());
  }
  return out;
}

TreeSum insertion(const TreeSum& a, const TreeSum& b) {
  TreeSum out;
  for (const auto& [s, cs] : a) {
    for (const auto& [t, ct] : b) out += (cs * ct) * insertion_product(s, t);
  }
  return out;
}

// Assoc with the two blocks of ι swapped: not an operad.
class BrokenAssoc : public Operad {
 public:
  std::string name() const override { return "broken"; }
  std::vector<OperadElement> basis(int arity) const override { return assoc_operad()->basis(arity); }
  using Operad::act;
  using Operad::compose;
  OperadSum compose(const OperadElement& a, int i, const OperadElement& b) const override {
    const Permutation c = assoc_compose(Permutation{a.data}, i, inverse(Permutation{b.data}));
    return OperadSum(OperadElement{c.size(), c.w});
  }
  OperadElement act(const OperadElement& a, const Permutation& s) const override {
    return assoc_operad()->act(a, s);
  }
  OperadElement unit() const override { return {1, {1}}; }
  std::string render(const OperadElement& a) const override { return to_string(Permutation{a.data}); }
};

}  // namespace

TEST_CASE("permutation basics") {
  CHECK(P({2, 3, 1}) * P({2, 1, 3}) == P({3, 2, 1}));
  CHECK(inverse(P({2, 3, 1})) == P({3, 1, 2}));
  CHECK(all_permutations(3).size() == 6);
  CHECK(is_permutation({3, 1, 2}));
  CHECK(!is_permutation({1, 1}));
  CHECK(to_string(P({2, 1})) == "(2 1)");
}

TEST_CASE("identity permutations compose to identities") {
  const auto e = [](int n) { return Permutation::identity(n); };
  CHECK(assoc_compose(e(2), 1, e(2)) == e(3));
  CHECK(assoc_compose(e(2), 2, e(2)) == e(3));
  for (int k = 1; k <= 3; ++k) {
    for (int l = 1; l <= 3; ++l) {
      for (int i = 1; i <= k; ++i) CHECK(assoc_compose(e(k), i, e(l)) == e(k + l - 1));
    }
  }
  CHECK_THROWS_AS(assoc_compose(e(2), 3, e(2)), PreconditionError);
}

TEST_CASE("block substitution matches composition of word operations") {
  // (21) o1 (21): (v1 v2) -> v2 v1 with v1 = c b  gives  c ( b a )... read off directly
  CHECK(on_letters(assoc_compose(P({2, 1}), 1, P({2, 1}))) == composite_on_letters(P({2, 1}), 1, P({2, 1})));
  CHECK(composite_on_letters(P({2, 1}), 1, P({2, 1})) == "cba");
  CHECK(assoc_compose(P({2, 1}), 1, P({2, 1})) == P({3, 2, 1}));
  CHECK(assoc_compose(P({2, 1}), 2, P({1, 2})) == P({3, 1, 2}));
  for (int k = 1; k <= 3; ++k) {
    for (int l = 1; l <= 3; ++l) {
      for (const auto& s : all_permutations(k)) {
        for (const auto& t : all_permutations(l)) {
          for (int i = 1; i <= k; ++i) CHECK(on_letters(assoc_compose(s, i, t)) == composite_on_letters(s, i, t));
        }
      }
    }
  }
}

TEST_CASE("Assoc equivariance identity") {
  for (int k = 1; k <= 3; ++k) {
    for (int l = 1; l <= 3; ++l) {
      for (const auto& s : all_permutations(k)) {
        for (const auto& s2 : all_permutations(k)) {
          for (const auto& t : all_permutations(l)) {
            for (const auto& t2 : all_permutations(l)) {
              for (int i = 1; i <= k; ++i) {
                CHECK(assoc_compose(s * s2, i, t * t2) == assoc_compose(s, s2(i), t) * assoc_compose(s2, i, t2));
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("labelled trees") {
  CHECK(labelled_trees(1).size() == 1);
  CHECK(labelled_trees(2).size() == 2);
  CHECK(labelled_trees(3).size() == 9);
  CHECK(labelled_trees(4).size() == 64);
  for (int n = 1; n <= 5; ++n) {
    Rational expected = 0;
    for (const auto& t : enumerate_trees(n)) expected += factorial(n) / Rational(static_cast<unsigned long>(symmetry_factor(t)));
    CHECK(Rational(static_cast<unsigned long>(labelled_trees(n).size())) == expected);
  }
  CHECK(to_string(LabelledTree{{-1, 0, 0, 2}}) == "1(2,3(4))");
  CHECK(forget_labels(LabelledTree{{-1, 0, 0, 2}}) == T("[[][[]]]"));
  CHECK_THROWS_AS(validate(LabelledTree{{-1, -1}}), PreconditionError);
  CHECK_THROWS_AS(validate(LabelledTree{{1, 0}}), PreconditionError);
}

TEST_CASE("insertion examples") {
  const LabelledTree dot{{-1}}, chain{{-1, 0}};
  // unit behaviour
  CHECK(prelie_insert(dot, 1, chain) == LabelledTreeSum(chain));
  CHECK(prelie_insert(chain, 2, dot) == LabelledTreeSum(chain));
  // at the leaf: a single term, the 3-chain 1 -> 2 -> 3
  auto leaf = prelie_insert(chain, 2, chain);
  CHECK(leaf.size() == 1);
  CHECK(leaf == LabelledTreeSum(LabelledTree{{-1, 0, 1}}));
  // at the root: the child 2 (now 3) lands on either vertex of t
  auto root = prelie_insert(chain, 1, chain);
  CHECK(root.size() == 2);
  CHECK(root == LabelledTreeSum(LabelledTree{{-1, 0, 0}}) + LabelledTreeSum(LabelledTree{{-1, 0, 1}}));
  CHECK_THROWS_AS(prelie_insert(chain, 3, dot), PreconditionError);
}

TEST_CASE("operad axiom suites") {
  auto assoc = check_operad_axioms(*assoc_operad(), 3);
  CHECK_MESSAGE(assoc.passed(), to_string(assoc));
  CHECK(assoc.checked["equivariance"] > 0);
  auto com = check_operad_axioms(*com_operad(), 4);
  CHECK_MESSAGE(com.passed(), to_string(com));
  auto prelie = check_operad_axioms(*prelie_operad(), 3);
  CHECK_MESSAGE(prelie.passed(), to_string(prelie));
  CHECK(prelie.checked["nested"] > 1000);
}

TEST_CASE("the axiom suite detects a broken composition") {
  auto r = check_operad_axioms(BrokenAssoc(), 3);
  CHECK(!r.passed());
  CHECK(r.violations.size() > 1);
  CHECK(to_string(r).find("FAIL") != std::string::npos);
}

TEST_CASE("the insertion product does not depend on the labelling") {
  auto op = prelie_operad();
  std::mt19937 rng(3);
  for (const auto& s : trees_up_to(3)) {
    for (const auto& t : trees_up_to(3)) {
      const LabelledTree ls = some_labelling(s), lt = some_labelling(t);
      auto ps = all_permutations(ls.size());
      auto pt = all_permutations(lt.size());
      const auto& sigma = ps[rng() % ps.size()];
      const auto& tau = pt[rng() % pt.size()];
      const LabelledTree ls2 = act(ls, sigma), lt2 = act(lt, tau);
      TreeSum other;
      for (int i = 1; i <= ls2.size(); ++i) {
        for (const auto& [r, c] : prelie_insert(ls2, i, lt2)) other.add(forget_labels(r), c);
      }
      CHECK(other == insertion_product(s, t));
    }
  }
}

TEST_CASE("insertion is a derivation of grafting") {
  const auto trees = trees_up_to(3);
  for (const auto& s : trees) {
    for (const auto& t : trees) {
      for (const auto& u : trees) {
        const TreeSum S(s), Tt(t), U(u);
        CHECK(insertion(graft(S, Tt), U) == graft(insertion(S, U), Tt) + graft(S, insertion(Tt, U)));
      }
    }
  }
}

TEST_CASE("the one-generator free algebra of the operad is grafting") {
  // x ▷ y is the binary tree with root 2 and leaf 1
  const LabelledTree e{{1, -1}};
  for (const auto& a : trees_up_to(3)) {
    for (const auto& b : trees_up_to(3)) {
      if (a.vertex_count() + b.vertex_count() > 4) continue;
      TreeSum out;
      for (const auto& [x, cx] : prelie_insert(e, 2, some_labelling(b))) {
        // label 1 is still the leaf carrying the first input
        for (const auto& [y, cy] : prelie_insert(x, 1, some_labelling(a))) out.add(forget_labels(y), cx * cy);
      }
      CHECK(out == graft(a, b));
    }
  }
}

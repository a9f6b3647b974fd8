#include <random>

#include "doctest.h"
#include "forestcalc/ck_hopf.hpp"
#include "forestcalc/errors.hpp"
#include "forestcalc/substitution.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace forestcalc;

namespace {

Forest F(const char* s) { return parse_forest(s); }
RootedTree T(const char* s) { return parse_tree(s); }

TensorSum tensor(std::initializer_list<std::tuple<const char*, const char*, int>> terms) {
  TensorSum out;
  for (auto [l, r, c] : terms) out.add({parse_forest(l), parse_forest(r)}, Rational(c));
  return out;
}

std::vector<Forest> edge_forests_up_to(std::size_t e) {
  std::vector<Forest> out;
  for (std::size_t k = 0; k <= e; ++k) {
    auto f = enumerate_edge_forests(k);
    out.insert(out.end(), f.begin(), f.end());
  }
  return out;
}

MultiTensorSum apply_h_coproduct_to_slot(const MultiTensorSum& x, std::size_t slot) {
  MultiTensorSum out;
  for (const auto& [key, c] : x) {
    for (const auto& [pair, d] : contraction_coproduct(key.at(slot))) {
      std::vector<Forest> k2(key.begin(), key.begin() + static_cast<long>(slot));
      k2.push_back(pair.first);
      k2.push_back(pair.second);
      k2.insert(k2.end(), key.begin() + static_cast<long>(slot) + 1, key.end());
      out.add(k2, c * d);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("contraction coproduct examples") {
  CHECK(contraction_coproduct(T("[[]]")) == tensor({{"1", "[[]]", 1}, {"[[]]", "1", 1}}));
  CHECK(contraction_coproduct(T("[[[]]]")) == tensor({{"1", "[[[]]]", 1}, {"[[]]", "[[]]", 2}, {"[[[]]]", "1", 1}}));
  CHECK(contraction_coproduct(T("[[][]]")) == tensor({{"1", "[[][]]", 1}, {"[[]]", "[[]]", 2}, {"[[][]]", "1", 1}}));
  CHECK(contraction_coproduct(Forest{}) == tensor({{"1", "1", 1}}));
  CHECK_THROWS_AS(contraction_coproduct(F("[]")), PreconditionError);
}

TEST_CASE("contraction keeps the color of the component root") {
  auto terms = contraction_terms(T("[:1[:2]]"));
  CHECK(terms == tensor({{"1", "[:1[:2]]", 1}, {"[:1[:2]]", "[:1]", 1}}));
}

TEST_CASE("edge subsets match disjoint subtree collections") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& t : enumerate_trees(n)) CHECK(contraction_terms(t) == oracle::disjoint_subtree_coaction(t));
  }
  for (const auto& t : enumerate_trees(4, 2)) CHECK(contraction_terms(t) == oracle::disjoint_subtree_coaction(t));
}

TEST_CASE("H is a graded Hopf algebra up to four edges") {
  for (const auto& f : edge_forests_up_to(4)) {
    auto d = contraction_coproduct(f);
    std::size_t terms = 0;
    for (const auto& [k, c] : d) {
      CHECK(k.first.edge_count() + k.second.edge_count() == f.edge_count());
      CHECK(is_edge_forest(k.first));
      CHECK(is_edge_forest(k.second));
      terms += static_cast<std::size_t>(c.get_num().get_ui());
    }
    if (f.is_tree()) CHECK(terms == (1u << f.edge_count()));
    auto m = as_multi(d);
    CHECK(apply_h_coproduct_to_slot(m, 0) == apply_h_coproduct_to_slot(m, 1));
    auto s = h_antipode(f, HAntipodeMethod::crown_recursion);
    CHECK(h_antipode(f, HAntipodeMethod::trunk_recursion) == s);
    ForestSum left, right;
    for (const auto& [k, c] : d) {
      left += c * multiply(h_antipode(k.first), ForestSum(k.second));
      right += c * multiply(ForestSum(k.first), h_antipode(k.second));
    }
    ForestSum expected = f.empty() ? unit_sum() : ForestSum{};
    CHECK(left == expected);
    CHECK(right == expected);
  }
}

TEST_CASE("H antipode examples") {
  CHECK(h_antipode(F("[[]]")) == parse_forest_sum("-1/1 * [[]]"));
  CHECK(h_antipode(F("[[[]]]")) == parse_forest_sum("-1/1 * [[[]]] + 2/1 * [[]] [[]]"));
  CHECK(h_antipode(Forest{}) == unit_sum());
}

TEST_CASE("coaction") {
  CHECK(coaction(Forest{}) == tensor({{"1", "1", 1}}));
  CHECK(coaction(F("[]")) == tensor({{"1", "[]", 1}}));
  CHECK(coaction(F("[[]]")) == tensor({{"1", "[[]]", 1}, {"[[]]", "[]", 1}}));
}

TEST_CASE("comodule coalgebra diagram up to four edges") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& u : enumerate_trees(n)) {
      Forest uf(u);
      MultiTensorSum lhs;
      for (const auto& [k, c] : coproduct(uf)) {
        for (const auto& [a, ca] : coaction(k.first)) {
          for (const auto& [b, cb] : coaction(k.second)) {
            lhs.add({a.first * b.first, a.second, b.second}, c * ca * cb);
          }
        }
      }
      MultiTensorSum rhs;
      for (const auto& [a, ca] : coaction(uf)) {
        for (const auto& [b, cb] : coproduct(a.second)) rhs.add({a.first, b.first, b.second}, ca * cb);
      }
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("substitution star") {
  std::mt19937 rng(3);
  const std::size_t d = 4;
  auto beta = gen::general(rng, d, Rational(1));
  // counit of H: 1 on the unit, 0 on trees with edges
  std::map<RootedTree, Rational> counit_values;
  for (std::size_t n = 1; n <= d; ++n) {
    for (const auto& t : enumerate_trees(n)) counit_values[t] = n == 1 ? 1 : 0;
  }
  auto counit_h = character_from_tree_values(counit_values, d);
  CHECK(equal_functionals(substitution_star(counit_h, beta), beta));

  auto alpha = gen::character(rng, d);
  alpha.set(T("[]"), Rational(1));
  auto delta = dual_basis(T("[]"), false, d);
  CHECK(substitution_star(alpha, delta)(F("[[]]")) == alpha(T("[[]]")));
  CHECK(substitution_star(alpha, beta)(F("[]")) == beta(F("[]")));
  for (int trial = 0; trial < 5; ++trial) {
    auto chi = gen::character(rng, d);
    CHECK(is_character(substitution_star(alpha, chi)));
  }
}

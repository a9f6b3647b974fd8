#include <numeric>
#include <random>

#include "doctest.h"
#include "forestcalc/errors.hpp"
#include "forestcalc/tree.hpp"
#include "oracles.hpp"

using namespace forestcalc;

TEST_CASE("canonical form ignores child order") {
  auto a = parse_tree("[[[][]][]]");
  auto b = parse_tree("[[][[][]]]");
  CHECK(a == b);
  CHECK(a.str() == "[[[][]][]]");
  CHECK(parse_tree("[]").str() == "[]");
  CHECK(canonical_form(a) == a);
}

namespace {

// Every plane tree obtained by permuting child lists at every vertex.
std::vector<PlaneTree> all_orderings(const PlaneTree& t) {
  std::vector<std::vector<PlaneTree>> child_options;
  for (const auto& c : t.children) child_options.push_back(all_orderings(c));
  std::vector<PlaneTree> out;
  std::vector<std::size_t> idx(t.children.size());
  std::iota(idx.begin(), idx.end(), 0);
  do {
    std::vector<PlaneTree> partial{PlaneTree{t.color, {}}};
    for (std::size_t k : idx) {
      std::vector<PlaneTree> next;
      for (const auto& p : partial) {
        for (const auto& opt : child_options[k]) {
          PlaneTree q = p;
          q.children.push_back(opt);
          next.push_back(q);
        }
      }
      partial = std::move(next);
    }
    out.insert(out.end(), partial.begin(), partial.end());
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

}  // namespace

TEST_CASE("every child ordering of every five-vertex tree collapses") {
  for (const auto& t : enumerate_trees(5)) {
    auto orderings = all_orderings(to_plane(t));
    CHECK(orderings.size() >= 1);
    for (const auto& p : orderings) CHECK(canonical_form(p) == t);
  }
  // the bushy tree [[[]][][]] has 3! orderings of its root's branches
  CHECK(all_orderings(to_plane(parse_tree("[[[]][][]]"))).size() == 6);
}

TEST_CASE("random shuffles canonicalize idempotently") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + trial % 9;
    auto p = oracle::random_plane_tree(rng, n, 2);
    auto t = canonical_form(p);
    CHECK(canonical_form(to_plane(t)) == t);
    CHECK(t.vertex_count() == static_cast<std::size_t>(n));
    CHECK(t.edge_count() == static_cast<std::size_t>(n - 1));
    CHECK(parse_tree(t.str()) == t);
  }
}

TEST_CASE("tree counts") {
  std::vector<std::size_t> expected = {0, 1, 1, 2, 4, 9, 20, 48, 115};
  for (std::size_t n = 0; n < expected.size(); ++n) CHECK(enumerate_trees(n).size() == expected[n]);
  CHECK(enumerate_trees(2, 2).size() == 4);
  CHECK_THROWS_AS(enumerate_trees(3, 0), PreconditionError);
}

TEST_CASE("enumeration matches parent-array brute force") {
  for (int n = 1; n <= 7; ++n) {
    std::set<std::string> mine;
    for (const auto& t : enumerate_trees(n)) mine.insert(t.str());
    CHECK(mine == oracle::trees_by_parent_arrays(n));
  }
  for (int n = 1; n <= 4; ++n) {
    std::set<std::string> mine;
    for (const auto& t : enumerate_trees(n, 2)) mine.insert(t.str());
    CHECK(mine == oracle::trees_by_parent_arrays(n, 2));
  }
}

TEST_CASE("enumeration is deterministic and duplicate free") {
  auto a = enumerate_trees(6);
  auto b = enumerate_trees(6);
  CHECK(a == b);
  CHECK(std::adjacent_find(a.begin(), a.end()) == a.end());
  CHECK(enumerate_forests(0).size() == 1);
  CHECK(enumerate_forests(3).size() == 4);  // [[[]]] [[][]] [[]][] [][][]
}

TEST_CASE("symmetry factors") {
  CHECK(symmetry_factor(parse_tree("[]")) == 1);
  CHECK(symmetry_factor(parse_tree("[[][]]")) == 2);
  CHECK(symmetry_factor(parse_tree("[[][][]]")) == 6);
  CHECK(symmetry_factor(parse_forest("[] []")) == 2);
  CHECK(symmetry_factor(parse_tree("[:1[][:2]]")) == 1);
}

TEST_CASE("symmetry factor equals automorphism count") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& t : enumerate_trees(n)) CHECK(symmetry_factor(t) == oracle::automorphisms(t));
  }
  for (int n = 1; n <= 4; ++n) {
    for (const auto& t : enumerate_trees(n, 2)) CHECK(symmetry_factor(t) == oracle::automorphisms(t));
  }
}

TEST_CASE("b_plus") {
  CHECK(b_plus(Forest{}) == parse_tree("[]"));
  CHECK(b_plus(parse_forest("[] []")) == parse_tree("[[][]]"));
  CHECK(b_plus(parse_forest("[[]]")) == parse_tree("[[[]]]"));
  CHECK(b_plus(Forest{}, 3).str() == "[:3]");
}

TEST_CASE("grammar") {
  CHECK(parse_tree("[:1[:0]]").str() == "[:1[]]");
  CHECK(parse_forest("1").empty());
  CHECK(parse_forest("[[]] []").str() == "[[]] []");
  CHECK(parse_forest("[] [[]]").str() == "[[]] []");
  CHECK(Forest{}.str() == "1");
  CHECK_THROWS_AS(parse_tree("[["), ParseError);
  CHECK_THROWS_AS(parse_tree("[]x"), ParseError);
  CHECK_THROWS_AS(parse_tree("[:]"), ParseError);
  CHECK_THROWS_AS(parse_forest(""), ParseError);
  CHECK_THROWS_AS(parse_forest("1 []"), ParseError);
  for (int n = 1; n <= 6; ++n) {
    for (const auto& f : enumerate_forests(n)) CHECK(parse_forest(f.str()) == f);
  }
}

TEST_CASE("induced subforests and downward closure") {
  auto flat = flatten(parse_tree("[[[]][]]"));
  REQUIRE(flat.size() == 4);
  CHECK(is_downward_closed(flat, 0b0001));
  CHECK_FALSE(is_downward_closed(flat, 0b0010));
  CHECK(induced_subforest(flat, 0b1111).str() == "[[[]][]]");
  CHECK(induced_subforest(flat, 0b1110).str() == "[[]] []");
}

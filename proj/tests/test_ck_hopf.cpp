#include <random>

#include "doctest.h"
#include "forestcalc/ck_hopf.hpp"
#include "forestcalc/errors.hpp"
#include "oracles.hpp"

using namespace forestcalc;

namespace {

TensorSum tensor(std::initializer_list<std::tuple<const char*, const char*, int>> terms) {
  TensorSum out;
  for (auto [l, r, c] : terms) out.add({parse_forest(l), parse_forest(r)}, Rational(c));
  return out;
}

ForestSum sum(const char* text) { return parse_forest_sum(text); }

}  // namespace

TEST_CASE("coproduct of small trees") {
  CHECK(coproduct(parse_forest("[]")) == tensor({{"[]", "1", 1}, {"1", "[]", 1}}));
  CHECK(coproduct(parse_forest("[[]]")) == tensor({{"[[]]", "1", 1}, {"1", "[[]]", 1}, {"[]", "[]", 1}}));
  CHECK(coproduct(parse_forest("[[][]]")) ==
        tensor({{"[[][]]", "1", 1}, {"1", "[[][]]", 1}, {"[]", "[[]]", 2}, {"[] []", "[]", 1}}));
  CHECK(coproduct(Forest{}) == tensor({{"1", "1", 1}}));
}

TEST_CASE("reduced and iterated coproducts") {
  CHECK(reduced_coproduct(parse_forest("[[]]")) == tensor({{"[]", "[]", 1}}));
  CHECK(reduced_coproduct(parse_forest("[[]]"), 2).empty());
  MultiTensorSum three;
  three.add({parse_forest("[]"), parse_forest("[]"), parse_forest("[]")}, Rational(1));
  CHECK(reduced_coproduct(parse_forest("[[[]]]"), 2) == three);
  CHECK_THROWS_AS(reduced_coproduct(Forest{}), PreconditionError);
  CHECK_THROWS_AS(reduced_coproduct(Forest{}, 2), PreconditionError);
}

TEST_CASE("iterated reduced coproduct matches ordered partition oracle") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& f : enumerate_forests(n)) {
      for (int k = 1; k <= 3; ++k) CHECK(reduced_coproduct(f, k) == oracle::iterated_reduced_coproduct(f, k));
    }
  }
}

TEST_CASE("antipode values") {
  for (auto m : {AntipodeMethod::left_recursion, AntipodeMethod::right_recursion, AntipodeMethod::geometric}) {
    CHECK(antipode(parse_forest("[]"), m) == sum("-1/1 * []"));
    CHECK(antipode(parse_forest("[[]]"), m) == sum("-1/1 * [[]] + 1/1 * [] []"));
    CHECK(antipode(parse_forest("[[][]]"), m) == sum("-1/1 * [[][]] + 2/1 * [[]] [] + -1/1 * [] [] []"));
    CHECK(antipode(Forest{}, m) == unit_sum());
  }
}

TEST_CASE("coassociativity, grading and Hopf identity up to six vertices") {
  for (const auto& f : forests_up_to(6)) {
    auto d = as_multi(coproduct(f));
    CHECK(apply_coproduct_to_slot(d, 0) == apply_coproduct_to_slot(d, 1));
    for (const auto& [k, c] : coproduct(f)) CHECK(k.first.vertex_count() + k.second.vertex_count() == f.vertex_count());
    ForestSum expected = f.empty() ? unit_sum() : ForestSum{};
    CHECK(hopf_convolution_check(f, true) == expected);
    CHECK(hopf_convolution_check(f, false) == expected);
    auto s = antipode(f);
    for (const auto& [g, c] : s) CHECK(g.vertex_count() == f.vertex_count());
    CHECK(antipode(f, AntipodeMethod::right_recursion) == s);
    CHECK(antipode(f, AntipodeMethod::geometric) == s);
  }
}

TEST_CASE("multiplicativity on random pairs") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = enumerate_forests(1 + trial % 5);
    auto b = enumerate_forests(1 + (trial * 7) % 5);
    Forest u = a[rng() % a.size()], v = b[rng() % b.size()];
    CHECK(coproduct(u * v) == multiply(coproduct(u), coproduct(v)));
    CHECK(antipode(u * v) == multiply(antipode(u), antipode(v)));
  }
}

TEST_CASE("counit") {
  CHECK(counit(unit_sum()) == 1);
  CHECK(counit(sum("1/1 * [] + 3/1 * 1")) == 3);
  CHECK(counit(sum("[[]]")) == 0);
}

TEST_CASE("text round trip") {
  auto s = antipode(parse_forest("[[][]]"));
  CHECK(parse_forest_sum(to_string(s)) == s);
  CHECK(to_string(ForestSum{}) == "0");
  CHECK(to_string(coproduct(parse_forest("[]"))) == "1/1 * 1 | [] + 1/1 * [] | 1");
}

#include <random>

#include "doctest.h"
#include "forestcalc/ck_hopf.hpp"
#include "forestcalc/conv.hpp"
#include "forestcalc/errors.hpp"
#include "generators.hpp"

using namespace forestcalc;

namespace {

Forest F(const char* s) { return parse_forest(s); }
RootedTree T(const char* s) { return parse_tree(s); }

}  // namespace

TEST_CASE("unit of convolution") {
  std::mt19937 rng(1);
  auto e = unit_functional<Rational>(5);
  auto phi = gen::general(rng, 5, Rational(1));
  CHECK(equal_functionals(convolve(e, phi), phi));
  CHECK(equal_functionals(convolve(phi, e), phi));
  CHECK(equal_functionals(conv_inverse(e), e));
  CHECK(equal_functionals(conv_exp(RationalFunctional(FunctionalKind::general, 5)), e));
}

TEST_CASE("small convolutions of dual basis elements") {
  auto d = dual_basis(T("[]"), false, 3);
  CHECK(convolve(d, d)(F("[[]]")) == 1);
  CHECK(convolve(d, d)(F("[] []")) == 2);
  // delta_t * delta_u - delta_u * delta_t for t = u vanishes, as does the graft difference
  CHECK(equal_functionals(conv_bracket(d, d), RationalFunctional(FunctionalKind::general, 3)));
  CHECK(dual_basis(T("[]"), false, 3)(F("[]")) == 1);
  CHECK(dual_basis(T("[]"), false, 3)(F("[[]]")) == 0);
  auto cherry = T("[[][]]");
  CHECK(dual_basis(cherry, true, 3)(Forest(cherry)) == 2 * dual_basis(cherry, false, 3)(Forest(cherry)));
}

TEST_CASE("bracket of dual basis elements matches grafting differences") {
  // [] -> [[]] - [[]] -> [] = [[][]], and delta picks up the two cuts of the cherry
  auto a = dual_basis(T("[]"), false, 3);
  auto b = dual_basis(T("[[]]"), false, 3);
  auto br = conv_bracket(a, b);
  // [[[]]] has one cut each way, so the bracket cancels there
  CHECK(br(F("[[[]]]")) == 0);
  // cuts of [[][]] with crown [] and trunk [[]]: two
  CHECK(br(F("[[][]]")) == 2);
  CHECK(br(F("[[]] []")) == 0);
}

TEST_CASE("inverse, exp and log on simple inputs") {
  auto e = unit_functional<Rational>(3);
  auto phi = add(e.to_general(), dual_basis(T("[]"), false, 3));
  CHECK(conv_inverse(phi)(F("[]")) == -1);
  auto ex = conv_exp(dual_basis(T("[]"), false, 3));
  CHECK(ex(F("[] []")) == Rational(1, 2) * 2);  // the two cuts of [] [] into [] | []
  RationalFunctional inf(FunctionalKind::infinitesimal, 3);
  inf.set(T("[]"), Rational(1));
  CHECK(conv_exp(inf)(F("[] []")) == 1);
  CHECK_THROWS_AS(conv_exp(e), PreconditionError);
  CHECK_THROWS_AS(conv_log(RationalFunctional(FunctionalKind::general, 3)), PreconditionError);
  CHECK_THROWS_AS(conv_inverse(RationalFunctional(FunctionalKind::general, 3)), PreconditionError);
}

TEST_CASE("convolution is associative and filtered") {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = gen::general(rng, 5, gen::rational(rng));
    auto b = gen::general(rng, 5, gen::rational(rng));
    auto c = gen::general(rng, 5, gen::rational(rng));
    CHECK(equal_functionals(convolve(convolve(a, b), c), convolve(a, convolve(b, c))));
  }
  // L^p * L^q lands in L^{p+q}
  for (std::size_t p = 1; p <= 3; ++p) {
    for (std::size_t q = 1; q + p <= 5; ++q) {
      auto a = gen::general(rng, 5, Rational(0));
      auto b = gen::general(rng, 5, Rational(0));
      for (const auto& f : forests_up_to(5)) {
        if (f.vertex_count() < p) a.set(f, Rational(0));
        if (f.vertex_count() < q) b.set(f, Rational(0));
      }
      auto ab = convolve(a, b);
      for (const auto& f : forests_up_to(p + q - 1)) CHECK(ab(f) == 0);
    }
  }
}

TEST_CASE("group law, exp and log, characters") {
  std::mt19937 rng(3);
  auto e = unit_functional<Rational>(5);
  for (int trial = 0; trial < 5; ++trial) {
    auto phi = gen::general(rng, 5, Rational(1));
    auto inv = conv_inverse(phi);
    CHECK(equal_functionals(convolve(phi, inv), e));
    CHECK(equal_functionals(convolve(inv, phi), e));
    CHECK(equal_functionals(conv_exp(conv_log(phi)), phi));
    auto alpha = gen::general(rng, 5, Rational(0));
    CHECK(equal_functionals(conv_log(conv_exp(alpha)), alpha));

    auto chi = gen::character(rng, 5);
    auto psi = gen::character(rng, 5);
    CHECK(is_character(chi));
    CHECK(is_character(convolve(chi, psi)));
    CHECK(equal_functionals(conv_inverse(chi), compose_with_antipode(chi)));
    CHECK(is_character(conv_inverse(chi)));

    auto a = gen::infinitesimal(rng, 5);
    auto b = gen::infinitesimal(rng, 5);
    CHECK(is_character(conv_exp(a)));
    CHECK(is_infinitesimal_character(conv_bracket(a, b)));
    CHECK(is_infinitesimal_character(conv_log(chi)));
  }
}

TEST_CASE("character construction") {
  std::map<RootedTree, Rational> vals;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& t : enumerate_trees(n)) vals[t] = 0;
  }
  CHECK(equal_functionals(character_from_tree_values(vals, 3), unit_functional<Rational>(3)));
  vals[T("[]")] = Rational(3, 2);
  CHECK(character_from_tree_values(vals, 3)(F("[] []")) == Rational(9, 4));
  vals.erase(T("[[]]"));
  CHECK_THROWS_AS(character_from_tree_values(vals, 3), PreconditionError);
}

TEST_CASE("truncation is enforced and propagated") {
  std::mt19937 rng(4);
  auto a = gen::general(rng, 3, Rational(1));
  auto b = gen::general(rng, 5, Rational(1));
  auto c = convolve(a, b);
  CHECK(c.truncation() == 3);
  CHECK_THROWS_AS(c(F("[[[[]]]]")), TruncationError);
  CHECK_THROWS_AS(a.set(F("[[[[]]]]"), Rational(1)), TruncationError);
  RationalFunctional chi(FunctionalKind::character, 3);
  CHECK_THROWS_AS(chi.set(F("[] []"), Rational(1)), PreconditionError);
}

TEST_CASE("Laurent-valued functionals need matching windows") {
  LaurentFunctional a(FunctionalKind::general, 2, LaurentSeries(-4, 4));
  LaurentFunctional b(FunctionalKind::general, 2, LaurentSeries(-3, 3));
  CHECK_THROWS_AS(convolve(a, b), MismatchError);
  RationalFunctional two_colors(FunctionalKind::general, 2, Rational(0), 2);
  CHECK_THROWS_AS(convolve(two_colors, RationalFunctional(FunctionalKind::general, 2)), MismatchError);
}

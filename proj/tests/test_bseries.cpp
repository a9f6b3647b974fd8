#include <random>

#include "doctest.h"
#include "forestcalc/bseries.hpp"
#include "forestcalc/errors.hpp"
#include "generators.hpp"

using namespace forestcalc;

namespace {

RootedTree T(const char* s) { return parse_tree(s); }
PolyVectorField V(const char* s) { return parse_vector_field(s); }

BSeries random_bseries(std::mt19937& rng, std::size_t order, const Rational& empty = 1) {
  BSeries b{empty, {}, order};
  for (std::size_t n = 1; n <= order; ++n) {
    for (const auto& t : enumerate_trees(n)) b.tree_coeffs[t] = gen::rational(rng);
  }
  return b;
}

Polynomial h_poly(int n) { return Polynomial::variable(n, n, 1); }

// Taylor expansion of the exact flow: x(h) = Σ h^k/k! D^k(x), D = Σ f_i ∂_i.
HSeriesMap exact_flow_oracle(const PolyVectorField& f, std::size_t order) {
  const int n = f.dimension();
  const PolyVectorField fh = f.with_params(1);
  HSeriesMap m = HSeriesMap::identity(n, order);
  for (int i = 0; i < n; ++i) {
    Polynomial g = Polynomial::variable(i, n, 1);
    Polynomial scale = Polynomial::constant(Rational(1), n, 1);
    for (std::size_t k = 1; k <= order; ++k) {
      Polynomial dg(n, 1);
      for (int j = 0; j < n; ++j) dg += fh[j] * g.derivative(j);
      g = dg;
      scale = scale * h_poly(n) * Rational(1, static_cast<unsigned long>(k));
      m.components[i] += scale * g;
    }
  }
  return m;
}

// One Runge-Kutta step expanded in h by fixed-point iteration on the stages
// K_i = f(x + h Σ_j a_ij K_j); each sweep fixes one more power of h.
HSeriesMap rk_taylor_oracle(const ButcherTableau& tab, const PolyVectorField& f, std::size_t order) {
  const int n = f.dimension();
  const int cut = static_cast<int>(order);
  const std::size_t s = tab.stages();
  const PolyVectorField fh = f.with_params(1);
  const Polynomial h = h_poly(n);
  std::vector<std::vector<Polynomial>> k(s, std::vector<Polynomial>(n, Polynomial(n, 1)));
  for (std::size_t sweep = 0; sweep <= order; ++sweep) {
    std::vector<std::vector<Polynomial>> next;
    for (std::size_t i = 0; i < s; ++i) {
      std::vector<Polynomial> arg;
      for (int c = 0; c < n; ++c) {
        Polynomial v = Polynomial::variable(c, n, 1);
        for (std::size_t j = 0; j < s; ++j) v += tab.a[i][j] * (h * k[j][c]);
        arg.push_back(v.truncate_param(cut));
      }
      std::vector<Polynomial> ki;
      for (int c = 0; c < n; ++c) ki.push_back(fh[c].compose(arg, cut));
      next.push_back(std::move(ki));
    }
    k = std::move(next);
  }
  HSeriesMap m = HSeriesMap::identity(n, order);
  for (int c = 0; c < n; ++c) {
    for (std::size_t i = 0; i < s; ++i) m.components[c] += (tab.b[i] * (h * k[i][c])).truncate_param(cut);
  }
  return m;
}

}  // namespace

TEST_CASE("tree factorial and exact flow") {
  CHECK(tree_factorial(T("[]")) == 1);
  CHECK(tree_factorial(T("[[]]")) == 2);
  CHECK(tree_factorial(T("[[][]]")) == 3);
  CHECK(tree_factorial(T("[[[]]]")) == 6);
  std::mt19937 rng(5);
  for (int n : {1, 2}) {
    const PolyVectorField f = gen::field(rng, n);
    CHECK(bseries_eval(exact_flow_bseries(4), f) == exact_flow_oracle(f, 4));
  }
}

TEST_CASE("B-series evaluation examples") {
  const PolyVectorField f = V("x1^2 + 1");
  const Polynomial fx = f[0].with_params(1);
  const Polynomial x = Polynomial::variable(0, 1, 1), h = h_poly(1);
  BSeries id{1, {}, 3};
  CHECK(bseries_eval(id, f) == HSeriesMap::identity(1, 3));
  BSeries euler{1, {{T("[]"), 1}}, 3};
  CHECK(bseries_eval(euler, f).components[0] == x + h * fx);
  BSeries two{1, {{T("[]"), 1}, {T("[[]]"), 1}}, 3};
  CHECK(bseries_eval(two, f).coefficient(2, 0) == fx * fx.derivative(0));
  // σ([[][]]) = 2
  BSeries cherry{0, {{T("[[][]]"), 1}}, 3};
  CHECK(bseries_eval(cherry, f).coefficient(3, 0) == Rational(1, 2) * fx * fx * fx.derivative(0).derivative(0));
  CHECK_THROWS_AS(bseries_eval(BSeries{1, {}, 7}, f), PreconditionError);
  CHECK_THROWS_AS(euler(T("[[[[]]]]")), TruncationError);
}

TEST_CASE("composition: unit, first coefficient, associativity") {
  std::mt19937 rng(7);
  const BSeries e{1, {}, 5};
  for (int i = 0; i < 5; ++i) {
    BSeries a = random_bseries(rng, 5), b = random_bseries(rng, 5), c = random_bseries(rng, 5);
    CHECK(bseries_compose(e, a) == a);
    CHECK(bseries_compose(a, e) == a);
    CHECK(bseries_compose(a, b)(T("[]")) == a(T("[]")) + b(T("[]")));
    CHECK(bseries_compose(bseries_compose(a, b), c) == bseries_compose(a, bseries_compose(b, c)));
  }
  CHECK_THROWS_AS(bseries_compose(BSeries{0, {}, 2}, e), PreconditionError);
}

TEST_CASE("Hairer-Wanner: B(beta) o B(alpha) = B(alpha * beta) through h^4") {
  std::mt19937 rng(8);
  for (int n : {1, 2}) {
    for (int i = 0; i < 3; ++i) {
      const PolyVectorField f = gen::field(rng, n);
      BSeries a = random_bseries(rng, 4), b = random_bseries(rng, 4);
      CHECK(compose(bseries_eval(b, f), bseries_eval(a, f)) == bseries_eval(bseries_compose(a, b), f));
    }
  }
}

TEST_CASE("composition order is not symmetric") {
  // pins the convention: swapping the factors must break the identity
  std::mt19937 rng(9);
  const PolyVectorField f = gen::field(rng, 2);
  BSeries a = random_bseries(rng, 3), b = random_bseries(rng, 3);
  REQUIRE(bseries_compose(a, b) != bseries_compose(b, a));
  CHECK(compose(bseries_eval(b, f), bseries_eval(a, f)) != bseries_eval(bseries_compose(b, a), f));
}

TEST_CASE("substitution examples") {
  std::mt19937 rng(10);
  const PolyVectorField f = V("x1^2 - 1/2");
  const BSeries identity{0, {{T("[]"), 1}}, 4};
  CHECK(modified_field(identity, f) == f.with_params(1));
  for (int i = 0; i < 3; ++i) {
    BSeries beta = random_bseries(rng, 4, gen::rational(rng));
    CHECK(bseries_substitute(identity, beta) == beta);
    BSeries alpha = random_bseries(rng, 4, 0);
    alpha.tree_coeffs[T("[]")] = 1;
    CHECK(bseries_substitute(alpha, beta)(T("[]")) == beta(T("[]")));
  }
  BSeries bad = random_bseries(rng, 3, 0);
  bad.tree_coeffs[T("[]")] = 2;
  CHECK_THROWS_AS(bseries_substitute(bad, identity), PreconditionError);
  CHECK_THROWS_AS(bseries_substitute(random_bseries(rng, 3, 1), identity), PreconditionError);
}

TEST_CASE("substitution identity through h^3 in one dimension") {
  std::mt19937 rng(11);
  for (int i = 0; i < 5; ++i) {
    const PolyVectorField f = gen::field(rng, 1);
    BSeries alpha = random_bseries(rng, 3, 0);
    alpha.tree_coeffs[T("[]")] = 1;
    BSeries beta = random_bseries(rng, 3, gen::rational(rng));
    CHECK(bseries_eval(beta, modified_field(alpha, f)) == bseries_eval(bseries_substitute(alpha, beta), f));
  }
}

TEST_CASE("normalized dual basis route agrees with direct evaluation") {
  std::mt19937 rng(12);
  for (int n : {1, 2}) {
    const PolyVectorField f = gen::field(rng, n);
    BSeries a = random_bseries(rng, 4, gen::rational(rng));
    const TreeSum p = bseries_to_prelie(a);
    CHECK(p.coefficient(T("[[][]]")) == a(T("[[][]]")) / 2);
    CHECK(eval_prelie(p, a.empty_coeff, f, 4) == bseries_eval(a, f));
  }
}

TEST_CASE("Runge-Kutta elementary weights") {
  const ButcherTableau euler{{{0}}, {1}};
  BSeries e = rk_to_bseries(euler, 3);
  CHECK(e.empty_coeff == 1);
  CHECK(e(T("[]")) == 1);
  CHECK(e(T("[[]]")) == 0);
  const ButcherTableau midpoint{{{0, 0}, {Rational(1, 2), 0}}, {0, 1}};
  BSeries m = rk_to_bseries(midpoint, 3);
  CHECK(m(T("[[]]")) == Rational(1, 2));
  CHECK(m(T("[[][]]")) == Rational(1, 4));
  CHECK(m(T("[[[]]]")) == 0);
  // classical RK4 has order 4: weights equal 1/γ up to four vertices
  const ButcherTableau rk4{{{0, 0, 0, 0}, {Rational(1, 2), 0, 0, 0}, {0, Rational(1, 2), 0, 0}, {0, 0, 1, 0}},
                           {Rational(1, 6), Rational(1, 3), Rational(1, 3), Rational(1, 6)}};
  CHECK(rk_to_bseries(rk4, 4) == exact_flow_bseries(4));
  CHECK(!(rk_to_bseries(rk4, 5) == exact_flow_bseries(5)));
  CHECK_THROWS_AS(rk_to_bseries(ButcherTableau{{{0, 0}}, {1, 0}}, 2), MismatchError);
}

TEST_CASE("Runge-Kutta B-series match the Taylor expansion of the step") {
  std::mt19937 rng(13);
  const std::vector<ButcherTableau> tableaux{
      {{{0}}, {1}},
      {{{0, 0}, {Rational(1, 2), 0}}, {0, 1}},
      {{{Rational(1, 2)}}, {1}},  // implicit midpoint
      {{{Rational(1, 4), Rational(1, 4) - Rational(1, 6)}, {Rational(1, 4) + Rational(1, 6), Rational(1, 4)}},
       {Rational(1, 2), Rational(1, 2)}},
  };
  for (const auto& tab : tableaux) {
    for (int n : {1, 2}) {
      const PolyVectorField f = gen::field(rng, n);
      CHECK(bseries_eval(rk_to_bseries(tab, 3), f) == rk_taylor_oracle(tab, f, 3));
    }
  }
}

TEST_CASE("tableau text format") {
  ButcherTableau t = parse_tableau("# midpoint\nA = [[0, 0],\n     [1/2, 0]]\nb = [0, 1]\n");
  CHECK(t.a == std::vector<std::vector<Rational>>{{0, 0}, {Rational(1, 2), 0}});
  CHECK(t.b == std::vector<Rational>{0, 1});
  CHECK_THROWS_AS(parse_tableau("A = [[0]]"), ParseError);
  CHECK_THROWS_AS(parse_tableau("A = [[0, 1]]\nb = [1]"), ParseError);
  CHECK_THROWS_AS(parse_tableau("A = [[x]]\nb = [1]"), ParseError);
  CHECK_THROWS_AS(parse_tableau("C = [1]"), ParseError);
  CHECK_THROWS_AS(read_tableau_file("/nonexistent.tab"), IoError);
}

#include "forestcalc/bseries.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "forestcalc/errors.hpp"
#include "forestcalc/prelie.hpp"
#include "forestcalc/substitution.hpp"

namespace forestcalc {

Rational BSeries::operator()(const RootedTree& t) const {
  if (t.vertex_count() > order) {
    throw TruncationError("tree " + t.str() + " is beyond the B-series order " + std::to_string(order));
  }
  auto it = tree_coeffs.find(t);
  return it == tree_coeffs.end() ? Rational(0) : it->second;
}

bool operator==(const BSeries& a, const BSeries& b) {
  if (a.order != b.order || a.empty_coeff != b.empty_coeff) return false;
  for (std::size_t n = 1; n <= a.order; ++n) {
    for (const auto& t : enumerate_trees(n)) {
      if (a(t) != b(t)) return false;
    }
  }
  return true;
}

namespace {

Rational tree_factorial_rec(const RootedTree& t) {
  Rational g(static_cast<unsigned long>(t.vertex_count()));
  for (const auto& c : t.children()) g *= tree_factorial_rec(c);
  return g;
}

std::map<RootedTree, Rational> nonzero_trees(const BSeries& alpha) {
  std::map<RootedTree, Rational> out;
  for (const auto& [t, c] : alpha.tree_coeffs) {
    if (t.vertex_count() <= alpha.order && c != 0) out.emplace(t, c);
  }
  return out;
}

std::map<RootedTree, Rational> all_trees(const BSeries& alpha) {
  std::map<RootedTree, Rational> out;
  for (std::size_t n = 1; n <= alpha.order; ++n) {
    for (const auto& t : enumerate_trees(n)) out.emplace(t, alpha(t));
  }
  return out;
}

Polynomial h_power(std::size_t k, int n) {
  Polynomial::Exponents e(n + 1, 0);
  e[n] = static_cast<int>(k);
  Polynomial p(n, 1);
  p.add_term(e, Rational(1));
  return p;
}

PolyVectorField truncate_field(const PolyVectorField& x, int max_power) {
  std::vector<Polynomial> c;
  for (const auto& p : x.components()) c.push_back(p.truncate_param(max_power));
  return PolyVectorField(std::move(c));
}

PolyVectorField with_h(const PolyVectorField& x) {
  if (x.params() == 0) return x.with_params(1);
  if (x.params() == 1) return x;
  throw MismatchError("a B-series field may depend on one parameter h only");
}

void check_order(std::size_t order) {
  if (order > kMaxBSeriesOrder) {
    throw PreconditionError("B-series order " + std::to_string(order) + " exceeds " +
                            std::to_string(kMaxBSeriesOrder));
  }
}

}  // namespace

Rational tree_factorial(const RootedTree& t) { return tree_factorial_rec(t); }

BSeries exact_flow_bseries(std::size_t order) {
  BSeries b{Rational(1), {}, order};
  for (std::size_t n = 1; n <= order; ++n) {
    for (const auto& t : enumerate_trees(n)) b.tree_coeffs[t] = 1 / tree_factorial(t);
  }
  return b;
}

RationalFunctional to_character(const BSeries& alpha) {
  if (alpha.empty_coeff != 1) throw PreconditionError("a character needs the empty coefficient 1");
  return character_from_tree_values(all_trees(alpha), alpha.order, Rational(0));
}

RationalFunctional to_infinitesimal(const BSeries& alpha) {
  if (alpha.empty_coeff != 0) throw PreconditionError("an infinitesimal character needs the empty coefficient 0");
  RationalFunctional f(FunctionalKind::infinitesimal, alpha.order);
  for (const auto& [t, c] : nonzero_trees(alpha)) f.set(t, c);
  return f;
}

BSeries from_functional(const RationalFunctional& f) {
  if (f.colors() != 1) throw MismatchError("B-series use uncolored trees");
  BSeries b{f(Forest{}), {}, f.truncation()};
  for (std::size_t n = 1; n <= f.truncation(); ++n) {
    for (const auto& t : enumerate_trees(n)) {
      Rational v = f(t);
      if (v != 0) b.tree_coeffs.emplace(t, v);
    }
  }
  return b;
}

HSeriesMap HSeriesMap::identity(int n, std::size_t order) {
  HSeriesMap m{order, {}};
  for (int i = 0; i < n; ++i) m.components.push_back(Polynomial::variable(i, n, 1));
  return m;
}

Polynomial HSeriesMap::coefficient(std::size_t k, int i) const {
  return components.at(i).param_coefficient(static_cast<int>(k));
}

HSeriesMap compose(const HSeriesMap& outer, const HSeriesMap& inner) {
  if (outer.dimension() != inner.dimension()) throw MismatchError("h-series maps of different dimension");
  HSeriesMap m{std::min(outer.order, inner.order), {}};
  const int cut = static_cast<int>(m.order);
  for (const auto& p : outer.components) m.components.push_back(p.compose(inner.components, cut));
  return m;
}

std::string to_string(const HSeriesMap& m) {
  std::string s;
  for (std::size_t k = 0; k <= m.order; ++k) {
    s += "h^" + std::to_string(k) + ":";
    for (int i = 0; i < m.dimension(); ++i) s += (i ? " ; " : " ") + to_string(m.coefficient(k, i));
    s += "\n";
  }
  return s;
}

HSeriesMap bseries_eval(const BSeries& alpha, const PolyVectorField& x) {
  check_order(alpha.order);
  const PolyVectorField xh = with_h(x);
  const int n = xh.dimension();
  const int order = static_cast<int>(alpha.order);
  HSeriesMap m = HSeriesMap::identity(n, alpha.order);
  for (auto& c : m.components) c *= alpha.empty_coeff;
  std::map<std::size_t, std::vector<PolyVectorField>> fields;
  for (const auto& [t, c] : nonzero_trees(alpha)) {
    const std::size_t k = t.vertex_count();
    auto& f = fields[k];
    if (f.empty()) f.push_back(truncate_field(xh, order - static_cast<int>(k)));
    PolyVectorField y = cayley(t, f, CayleyMethod::recursive, kNoDegreeCap);
    const Polynomial scale = (c / Rational(static_cast<unsigned long>(symmetry_factor(t)))) * h_power(k, n);
    for (int i = 0; i < n; ++i) m.components[i] += (scale * y[i]).truncate_param(order);
  }
  return m;
}

BSeries bseries_compose(const BSeries& alpha, const BSeries& beta) {
  if (alpha.empty_coeff != 1 || beta.empty_coeff != 1) {
    throw PreconditionError("composition needs B-series with empty coefficient 1");
  }
  return from_functional(convolve(to_character(alpha), to_character(beta)));
}

PolyVectorField modified_field(const BSeries& alpha, const PolyVectorField& x) {
  if (alpha.empty_coeff != 0) throw PreconditionError("h^-1 B(alpha; x) needs alpha(1) = 0");
  if (x.params() != 0) throw MismatchError("the substituted field must not depend on h");
  check_order(alpha.order);
  const int n = x.dimension();
  PolyVectorField out = PolyVectorField::zero(n, 1);
  const std::vector<PolyVectorField> fx{x};
  for (const auto& [t, c] : nonzero_trees(alpha)) {
    const std::size_t k = t.vertex_count();
    PolyVectorField y = cayley(t, fx, CayleyMethod::recursive, kNoDegreeCap).with_params(1);
    const Polynomial scale = (c / Rational(static_cast<unsigned long>(symmetry_factor(t)))) * h_power(k - 1, n);
    out += scale * y;
  }
  return out;
}

BSeries bseries_substitute(const BSeries& alpha, const BSeries& beta) {
  if (alpha.empty_coeff != 0) throw PreconditionError("substitution needs alpha(1) = 0");
  if (alpha.order < 1 || alpha(RootedTree()) != 1) throw PreconditionError("substitution needs alpha(*) = 1");
  // α read as a character of H on trees; β as an infinitesimal character
  const RationalFunctional a = character_from_tree_values(all_trees(alpha), alpha.order, Rational(0));
  BSeries b = beta;
  b.empty_coeff = 0;
  BSeries out = from_functional(substitution_star(a, to_infinitesimal(b)));
  out.empty_coeff = beta.empty_coeff;
  return out;
}

TreeSum bseries_to_prelie(const BSeries& alpha) {
  TreeSum out;
  for (const auto& [t, c] : nonzero_trees(alpha)) {
    const RationalFunctional d = dual_basis(t, true, alpha.order);
    out.add(t, c / d(t));
  }
  return out;
}

HSeriesMap eval_prelie(const TreeSum& element, const Rational& empty, const PolyVectorField& x, std::size_t order) {
  check_order(order);
  const int n = x.dimension();
  const PolyVectorField hx = h_power(1, n) * with_h(x);
  FreeMorphismF<PolyVectorField> F({hx}, [&](const PolyVectorField& a, const PolyVectorField& b) {
    return truncate_field(vf_prelie(a, b, kNoDegreeCap), static_cast<int>(order));
  });
  HSeriesMap m = HSeriesMap::identity(n, order);
  for (auto& c : m.components) c *= empty;
  for (const auto& [t, c] : element) {
    if (t.vertex_count() > order) continue;
    const PolyVectorField y = c * F(t);
    for (int i = 0; i < n; ++i) m.components[i] += y[i].truncate_param(static_cast<int>(order));
  }
  return m;
}

BSeries rk_to_bseries(const ButcherTableau& tableau, std::size_t order) {
  const std::size_t s = tableau.stages();
  if (s == 0) throw PreconditionError("a tableau needs at least one stage");
  if (tableau.a.size() != s) throw MismatchError("A must have one row per stage");
  for (const auto& row : tableau.a) {
    if (row.size() != s) throw MismatchError("A must be square");
  }
  std::map<RootedTree, std::vector<Rational>> stage_weights;
  BSeries out{Rational(1), {}, order};
  for (std::size_t n = 1; n <= order; ++n) {
    for (const auto& t : enumerate_trees(n)) {
      std::vector<Rational> g(s, Rational(1));
      for (const auto& c : t.children()) {
        const auto& gc = stage_weights.at(c);
        for (std::size_t i = 0; i < s; ++i) {
          Rational inner = 0;
          for (std::size_t j = 0; j < s; ++j) inner += tableau.a[i][j] * gc[j];
          g[i] *= inner;
        }
      }
      Rational phi = 0;
      for (std::size_t i = 0; i < s; ++i) phi += tableau.b[i] * g[i];
      if (phi != 0) out.tree_coeffs.emplace(t, phi);
      stage_weights.emplace(t, std::move(g));
    }
  }
  return out;
}

namespace {

// Nested bracketed lists of rationals, e.g. [[0, 0], [1/2, 0]].
class ListParser {
 public:
  explicit ListParser(std::string_view text) : text_(text) {}

  struct Node {
    bool is_list = false;
    Rational value;
    std::vector<Node> items;
  };

  Node parse() {
    Node n = node();
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    return n;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) { throw ParseError("tableau '" + std::string(text_) + "': " + what); }

  Node node() {
    skip();
    Node n;
    if (pos_ < text_.size() && text_[pos_] == '[') {
      ++pos_;
      n.is_list = true;
      skip();
      if (pos_ < text_.size() && text_[pos_] == ']') {
        ++pos_;
        return n;
      }
      while (true) {
        n.items.push_back(node());
        skip();
        if (pos_ >= text_.size()) fail("unterminated list");
        if (text_[pos_] == ']') {
          ++pos_;
          return n;
        }
        if (text_[pos_] != ',') fail("expected ',' or ']'");
        ++pos_;
      }
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ']' && text_[pos_] != '[') ++pos_;
    try {
      n.value = parse_rational(text_.substr(start, pos_ - start));
    } catch (const ParseError& e) {
      fail(e.what());
    }
    return n;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<Rational> as_vector(const ListParser::Node& n, const char* what) {
  if (!n.is_list) throw ParseError(std::string(what) + " must be a list");
  std::vector<Rational> v;
  for (const auto& item : n.items) {
    if (item.is_list) throw ParseError(std::string(what) + " must be a flat list of rationals");
    v.push_back(item.value);
  }
  return v;
}

}  // namespace

ButcherTableau parse_tableau(std::string_view text) {
  std::map<std::string, std::string> assignments;
  std::string key;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    auto eq = line.find('=');
    if (eq != std::string::npos) {
      std::string name = line.substr(0, eq);
      name.erase(0, name.find_first_not_of(" \t"));
      name.erase(name.find_last_not_of(" \t\r") + 1);
      if (name != "A" && name != "b") throw ParseError("unknown tableau entry '" + name + "'");
      if (assignments.count(name)) throw ParseError("tableau entry '" + name + "' given twice");
      key = name;
      assignments[key] = line.substr(eq + 1);
    } else if (line.find_first_not_of(" \t\r") != std::string::npos) {
      if (key.empty()) throw ParseError("tableau line outside an assignment: '" + line + "'");
      assignments[key] += line;  // continuation of a multi-line matrix
    }
  }
  if (!assignments.count("A") || !assignments.count("b")) throw ParseError("tableau needs both A and b");
  ButcherTableau t;
  const auto a = ListParser(assignments["A"]).parse();
  if (!a.is_list) throw ParseError("A must be a list of rows");
  for (const auto& row : a.items) t.a.push_back(as_vector(row, "each row of A"));
  t.b = as_vector(ListParser(assignments["b"]).parse(), "b");
  if (t.a.size() != t.b.size()) throw ParseError("A and b describe different stage counts");
  for (const auto& row : t.a) {
    if (row.size() != t.b.size()) throw ParseError("A must be square");
  }
  return t;
}

ButcherTableau read_tableau_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open tableau file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_tableau(buf.str());
}

}  // namespace forestcalc

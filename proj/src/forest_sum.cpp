#include "forestcalc/forest_sum.hpp"

#include "forestcalc/errors.hpp"

namespace forestcalc {

ForestSum multiply(const ForestSum& a, const ForestSum& b) {
  ForestSum out;
  for (const auto& [fa, ca] : a) {
    for (const auto& [fb, cb] : b) out.add(fa * fb, ca * cb);
  }
  return out;
}

TensorSum multiply(const TensorSum& a, const TensorSum& b) {
  TensorSum out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) out.add({ka.first * kb.first, ka.second * kb.second}, ca * cb);
  }
  return out;
}

ForestSum truncate(const ForestSum& x, std::size_t max_vertices) {
  return x.filtered([&](const Forest& f) { return f.vertex_count() <= max_vertices; });
}

TreeSum project_trees(const ForestSum& x) {
  TreeSum out;
  for (const auto& [f, c] : x) {
    if (f.is_tree()) out.add(f.trees().front(), c);
  }
  return out;
}

ForestSum as_forest_sum(const TreeSum& x) {
  ForestSum out;
  for (const auto& [t, c] : x) out.add(Forest(t), c);
  return out;
}

TreeSum truncate(const TreeSum& x, std::size_t max_vertices) {
  return x.filtered([&](const RootedTree& t) { return t.vertex_count() <= max_vertices; });
}

namespace {

template <class Sum, class KeyFormat>
std::string join_terms(const Sum& x, KeyFormat&& fmt) {
  if (x.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : x) {
    if (!first) s += " + ";
    first = false;
    s += to_string(c) + " * " + fmt(k);
  }
  return s;
}

}  // namespace

std::string to_string(const LinearCombination<std::string>& x) {
  if (x.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : x) {
    if (!s.empty()) s += " + ";
    s += to_short_string(c) + " " + m;
  }
  return s;
}

std::string to_string(const ForestSum& x) {
  return join_terms(x, [](const Forest& f) { return f.str(); });
}

std::string to_string(const TreeSum& x) {
  return join_terms(x, [](const RootedTree& t) { return t.str(); });
}

std::string to_string(const TensorSum& x) {
  return join_terms(x, [](const std::pair<Forest, Forest>& k) { return k.first.str() + " | " + k.second.str(); });
}

std::string to_string(const MultiTensorSum& x) {
  return join_terms(x, [](const std::vector<Forest>& k) {
    std::string s;
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (i) s += " | ";
      s += k[i].str();
    }
    return s;
  });
}

ForestSum parse_forest_sum(std::string_view text) {
  ForestSum out;
  std::string_view rest = text;
  while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
  if (rest == "0") return out;
  while (true) {
    std::size_t plus = rest.find(" + ");
    std::string_view term = rest.substr(0, plus);
    std::size_t star = term.find(" * ");
    if (star == std::string_view::npos) {
      out.add(parse_forest(term), Rational(1));
    } else {
      out.add(parse_forest(term.substr(star + 3)), parse_rational(term.substr(0, star)));
    }
    if (plus == std::string_view::npos) break;
    rest = rest.substr(plus + 3);
  }
  return out;
}

}  // namespace forestcalc

namespace forestcalc {

TreeSum parse_tree_sum(std::string_view text) {
  TreeSum out;
  for (const auto& [f, c] : parse_forest_sum(text)) {
    if (!f.is_tree()) throw ParseError("expected a combination of single trees, got forest '" + f.str() + "'");
    out.add(f.trees().front(), c);
  }
  return out;
}

}  // namespace forestcalc

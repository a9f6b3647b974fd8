#include "forestcalc/io.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "forestcalc/errors.hpp"

namespace forestcalc {

namespace {

std::string_view trim(std::string_view v) {
  while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
  while (!v.empty() && (v.back() == ' ' || v.back() == '\t' || v.back() == '\r')) v.remove_suffix(1);
  return v;
}

struct RawFile {
  std::optional<std::size_t> truncation;
  std::optional<bool> laurent;
  std::optional<std::pair<int, int>> window;
  std::optional<FunctionalKind> kind;
  std::optional<int> colors;
  std::optional<Rational> empty;
  struct Term {
    Forest forest;
    std::string coeff;
    std::size_t line;
  };
  std::vector<Term> terms;
};

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ParseError("coefficient file line " + std::to_string(line) + ": " + what);
}

long parse_long(std::string_view s, std::size_t line) {
  std::string text(trim(s));
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(text, &used);
  } catch (const std::exception&) {
    fail(line, "expected an integer, got '" + text + "'");
  }
  if (used != text.size()) fail(line, "expected an integer, got '" + text + "'");
  return v;
}

FunctionalKind parse_kind(std::string_view s, std::size_t line) {
  if (s == "general") return FunctionalKind::general;
  if (s == "character") return FunctionalKind::character;
  if (s == "infinitesimal") return FunctionalKind::infinitesimal;
  fail(line, "unknown kind '" + std::string(s) + "'");
}

std::string kind_name(FunctionalKind k) {
  switch (k) {
    case FunctionalKind::general:
      return "general";
    case FunctionalKind::character:
      return "character";
    case FunctionalKind::infinitesimal:
      return "infinitesimal";
  }
  return "general";
}

void parse_header(RawFile& out, std::string_view body, std::size_t line) {
  std::size_t sp = body.find_first_of(" \t");
  std::string_view key = body.substr(0, sp);
  std::string_view value = sp == std::string_view::npos ? std::string_view{} : trim(body.substr(sp));
  if (key == "truncation") {
    long n = parse_long(value, line);
    if (n < 0) fail(line, "negative truncation");
    out.truncation = static_cast<std::size_t>(n);
  } else if (key == "target") {
    if (value == "rational") {
      out.laurent = false;
    } else if (value == "laurent") {
      out.laurent = true;
    } else {
      fail(line, "unknown target '" + std::string(value) + "'");
    }
  } else if (key == "window") {
    std::size_t mid = value.find_first_of(" \t");
    if (mid == std::string_view::npos) fail(line, "#window needs two exponents");
    long lo = parse_long(value.substr(0, mid), line);
    long hi = parse_long(value.substr(mid), line);
    if (lo > hi) fail(line, "empty window");
    out.window = {static_cast<int>(lo), static_cast<int>(hi)};
  } else if (key == "kind") {
    out.kind = parse_kind(value, line);
  } else if (key == "colors") {
    long c = parse_long(value, line);
    if (c < 1) fail(line, "#colors must be positive");
    out.colors = static_cast<int>(c);
  } else if (key == "empty") {
    try {
      out.empty = parse_rational(value);
    } catch (const ParseError& e) {
      fail(line, e.what());
    }
  }
  // anything else is a comment
}

RawFile scan(std::string_view text) {
  RawFile out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty()) continue;
    if (line.front() == '#') {
      parse_header(out, line.substr(1), line_no);
      continue;
    }
    std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos) fail(line_no, "expected '<forest>\\t<coefficient>'");
    RawFile::Term term;
    try {
      term.forest = parse_forest(trim(line.substr(0, tab)));
    } catch (const ParseError& e) {
      fail(line_no, e.what());
    }
    term.coeff = std::string(trim(line.substr(tab + 1)));
    if (term.coeff.empty()) fail(line_no, "missing coefficient");
    term.line = line_no;
    out.terms.push_back(std::move(term));
  }
  std::vector<Forest> seen;
  for (const auto& t : out.terms) seen.push_back(t.forest);
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 1; i < seen.size(); ++i) {
    if (seen[i] == seen[i - 1]) throw ParseError("coefficient file: duplicate term for '" + seen[i].str() + "'");
  }
  return out;
}

int max_color(const Forest& f) {
  int c = 0;
  std::vector<RootedTree> stack(f.trees().begin(), f.trees().end());
  while (!stack.empty()) {
    RootedTree t = stack.back();
    stack.pop_back();
    c = std::max(c, t.color());
    for (const auto& child : t.children()) stack.push_back(child);
  }
  return c;
}

template <class Scalar>
Functional<Scalar> build(const RawFile& raw, const Scalar& zero, const std::vector<Scalar>& values) {
  std::size_t truncation = 0;
  int colors = 1;
  bool trees_only = true;
  for (const auto& t : raw.terms) {
    truncation = std::max(truncation, t.forest.vertex_count());
    colors = std::max(colors, max_color(t.forest) + 1);
    if (!t.forest.is_tree()) trees_only = false;
  }
  if (raw.truncation) truncation = *raw.truncation;
  if (raw.colors) colors = *raw.colors;
  const FunctionalKind kind = raw.kind ? *raw.kind : (trees_only ? FunctionalKind::character : FunctionalKind::general);

  for (const auto& t : raw.terms) {
    if (t.forest.vertex_count() > truncation) fail(t.line, "term beyond the #truncation header");
    if (max_color(t.forest) >= colors) fail(t.line, "color outside the #colors palette");
    if (kind != FunctionalKind::general && !t.forest.is_tree()) {
      fail(t.line, "a " + kind_name(kind) + " file may only list single trees");
    }
  }

  if (kind == FunctionalKind::character) {
    std::map<RootedTree, Scalar> tree_values;
    for (std::size_t n = 1; n <= truncation; ++n) {
      for (const auto& t : enumerate_trees(n, colors)) tree_values.emplace(t, zero);
    }
    for (std::size_t i = 0; i < raw.terms.size(); ++i) tree_values[raw.terms[i].forest.trees().front()] = values[i];
    return character_from_tree_values(tree_values, truncation, zero, colors);
  }
  Functional<Scalar> out(kind, truncation, zero, colors);
  for (std::size_t i = 0; i < raw.terms.size(); ++i) out.set(raw.terms[i].forest, values[i]);
  return out;
}

// Rows are written by vertex count, then in canonical order.
template <class Row>
bool by_size(const Row& a, const Row& b) {
  return a.first.vertex_count() < b.first.vertex_count();
}

template <class Scalar, class Render>
std::string render(const Functional<Scalar>& phi, const std::string& extra_headers, Render&& value_text) {
  std::ostringstream os;
  os << "#truncation " << phi.truncation() << "\n" << extra_headers;
  os << "#kind " << kind_name(phi.kind()) << "\n";
  if (phi.colors() > 1) os << "#colors " << phi.colors() << "\n";
  std::vector<std::pair<Forest, Scalar>> rows;
  for (const auto& [f, v] : phi.stored()) {
    if (v != phi.zero()) rows.emplace_back(f, v);
  }
  std::stable_sort(rows.begin(), rows.end(), by_size<std::pair<Forest, Scalar>>);
  for (const auto& [f, v] : rows) os << f.str() << '\t' << value_text(v) << '\n';
  return os.str();
}

// Exponents in the Laurent terms of a file; used to pick a default window.
std::pair<int, int> exponent_range(const std::vector<LaurentSeries>& values) {
  int lo = 0;
  int hi = 0;
  for (const auto& v : values) {
    for (const auto& [k, c] : v.terms()) {
      lo = std::min(lo, k);
      hi = std::max(hi, k);
    }
  }
  return {lo, hi};
}

}  // namespace

AnyFunctional parse_coefficient_file(std::string_view text) {
  RawFile raw = scan(text);
  if (raw.empty) throw ParseError("coefficient file: #empty belongs to B-series files");
  bool laurent = false;
  if (raw.laurent) {
    laurent = *raw.laurent;
  } else {
    for (const auto& t : raw.terms) laurent = laurent || t.coeff.find('z') != std::string::npos;
  }
  if (!laurent) {
    if (raw.window) throw ParseError("coefficient file: #window needs a Laurent target");
    std::vector<Rational> values;
    for (const auto& t : raw.terms) {
      try {
        values.push_back(parse_rational(t.coeff));
      } catch (const ParseError& e) {
        fail(t.line, e.what());
      }
    }
    return build(raw, Rational(0), values);
  }
  // Parse once in a wide window to find the exponents, then settle the window.
  std::vector<LaurentSeries> wide;
  constexpr int kWide = 1 << 20;
  for (const auto& t : raw.terms) {
    try {
      wide.push_back(parse_laurent(t.coeff, -kWide, kWide));
    } catch (const ParseError& e) {
      fail(t.line, e.what());
    }
  }
  std::pair<int, int> window{LaurentSeries::default_min, LaurentSeries::default_max};
  if (raw.window) {
    window = *raw.window;
  } else {
    // A pole of order p per vertex needs [-p d, p d] once products are taken.
    int pole = 0;
    std::size_t degree = 1;
    for (std::size_t i = 0; i < raw.terms.size(); ++i) {
      const std::size_t n = std::max<std::size_t>(1, raw.terms[i].forest.vertex_count());
      degree = std::max(degree, n);
      for (const auto& [k, c] : wide[i].terms()) {
        if (k < 0) pole = std::max(pole, static_cast<int>((-k + n - 1) / n));
      }
    }
    if (raw.truncation) degree = std::max<std::size_t>(degree, *raw.truncation);
    const int need = pole * static_cast<int>(degree);
    const auto [lo, hi] = exponent_range(wide);
    window = {std::min({window.first, -need, lo}), std::max({window.second, need, hi})};
  }
  std::vector<LaurentSeries> values;
  for (std::size_t i = 0; i < raw.terms.size(); ++i) {
    try {
      values.push_back(parse_laurent(raw.terms[i].coeff, window.first, window.second));
    } catch (const ParseError& e) {
      fail(raw.terms[i].line, e.what());
    } catch (const WindowOverflow& e) {
      fail(raw.terms[i].line, e.what());
    }
  }
  return build(raw, LaurentSeries(window.first, window.second), values);
}

std::string to_coefficient_file(const RationalFunctional& phi) {
  return render(phi, "", [](const Rational& v) { return to_string(v); });
}

std::string to_coefficient_file(const LaurentFunctional& phi) {
  const std::string headers = "#target laurent\n#window " + std::to_string(phi.zero().min_exp()) + " " +
                              std::to_string(phi.zero().max_exp()) + "\n";
  return render(phi, headers, [](const LaurentSeries& v) { return to_string(v); });
}

RationalFunctional parse_rational_functional(std::string_view text) {
  AnyFunctional any = parse_coefficient_file(text);
  if (auto* r = std::get_if<RationalFunctional>(&any)) return std::move(*r);
  throw MismatchError("expected rational coefficients, found Laurent series");
}

LaurentFunctional parse_laurent_functional(std::string_view text) {
  AnyFunctional any = parse_coefficient_file(text);
  if (auto* l = std::get_if<LaurentFunctional>(&any)) return std::move(*l);
  // Rational data is promoted: every rational is a Laurent series.
  const RawFile raw = scan(text);
  std::vector<LaurentSeries> values;
  for (const auto& t : raw.terms) values.emplace_back(parse_rational(t.coeff));
  return build(raw, LaurentSeries(), values);
}

BSeries parse_bseries_file(std::string_view text) {
  RawFile raw = scan(text);
  if (raw.laurent.value_or(false)) throw ParseError("B-series files take rational coefficients");
  BSeries out;
  out.empty_coeff = raw.empty.value_or(Rational(1));
  std::size_t order = 0;
  for (const auto& t : raw.terms) {
    if (!t.forest.is_tree()) fail(t.line, "B-series files list single trees only");
    order = std::max(order, t.forest.vertex_count());
  }
  if (raw.truncation) {
    if (*raw.truncation < order) throw ParseError("B-series file: term beyond the #truncation header");
    order = *raw.truncation;
  }
  out.order = order;
  for (const auto& t : raw.terms) {
    try {
      Rational c = parse_rational(t.coeff);
      if (c != 0) out.tree_coeffs[t.forest.trees().front()] = c;
    } catch (const ParseError& e) {
      fail(t.line, e.what());
    }
  }
  return out;
}

std::string to_bseries_file(const BSeries& alpha) {
  std::ostringstream os;
  os << "#truncation " << alpha.order << "\n#empty " << to_string(alpha.empty_coeff) << "\n";
  std::vector<std::pair<RootedTree, Rational>> rows;
  for (const auto& [t, c] : alpha.tree_coeffs) {
    if (c != 0 && t.vertex_count() <= alpha.order) rows.emplace_back(t, c);
  }
  std::stable_sort(rows.begin(), rows.end(), by_size<std::pair<RootedTree, Rational>>);
  for (const auto& [t, c] : rows) os << t.str() << '\t' << to_string(c) << '\n';
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw IoError("cannot read '" + path + "'");
  return os.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("cannot write '" + path + "'");
}

}  // namespace forestcalc

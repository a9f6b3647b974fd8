#include "forestcalc/vector_fields.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "forestcalc/errors.hpp"

namespace forestcalc {

PolyVectorField::PolyVectorField(std::vector<Polynomial> components) : components_(std::move(components)) {
  const int n = dimension();
  if (n == 0) throw PreconditionError("a vector field needs at least one component");
  const int p = components_.front().params();
  for (const auto& c : components_) {
    if (c.nvars() != n) throw MismatchError("component count differs from the number of variables");
    if (c.params() != p) throw MismatchError("components use different parameter sets");
  }
}

PolyVectorField PolyVectorField::zero(int n, int params) {
  return PolyVectorField(std::vector<Polynomial>(n, Polynomial(n, params)));
}

PolyVectorField PolyVectorField::partial(int i, int n, int params) {
  std::vector<Polynomial> c(n, Polynomial(n, params));
  c.at(i) = Polynomial::constant(Rational(1), n, params);
  return PolyVectorField(std::move(c));
}

bool PolyVectorField::is_zero() const {
  for (const auto& c : components_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

int PolyVectorField::x_degree() const {
  int d = 0;
  for (const auto& c : components_) d = std::max(d, c.x_degree());
  return d;
}

PolyVectorField PolyVectorField::evaluate(const std::vector<Rational>& point) const {
  std::vector<Polynomial> c;
  for (const auto& p : components_) c.push_back(p.evaluate(point));
  return PolyVectorField(std::move(c));
}

PolyVectorField PolyVectorField::with_params(int params) const {
  std::vector<Polynomial> c;
  for (const auto& p : components_) c.push_back(p.with_params(params));
  return PolyVectorField(std::move(c));
}

PolyVectorField& PolyVectorField::operator+=(const PolyVectorField& o) {
  require_same_dimension(*this, o);
  for (int i = 0; i < dimension(); ++i) components_[i] += o.components_[i];
  return *this;
}

PolyVectorField& PolyVectorField::operator-=(const PolyVectorField& o) {
  require_same_dimension(*this, o);
  for (int i = 0; i < dimension(); ++i) components_[i] -= o.components_[i];
  return *this;
}

PolyVectorField operator*(const Rational& s, PolyVectorField a) {
  for (auto& c : a.components_) c *= s;
  return a;
}

PolyVectorField operator*(const Polynomial& s, PolyVectorField a) {
  for (auto& c : a.components_) c = s * c;
  return a;
}

void require_same_dimension(const PolyVectorField& a, const PolyVectorField& b) {
  if (a.dimension() != b.dimension()) {
    throw MismatchError("vector fields of dimension " + std::to_string(a.dimension()) + " and " +
                        std::to_string(b.dimension()));
  }
  if (a.params() != b.params()) throw MismatchError("vector fields with different parameter sets");
}

void check_degree_cap(const PolyVectorField& x, int cap) {
  if (cap == kNoDegreeCap) return;
  if (x.x_degree() > cap) {
    throw PreconditionError("vector field degree " + std::to_string(x.x_degree()) + " exceeds the cap " +
                            std::to_string(cap));
  }
}

std::string to_string(const PolyVectorField& x) {
  std::string s;
  for (int i = 0; i < x.dimension(); ++i) {
    if (i) s += " ; ";
    s += to_string(x[i]);
  }
  return s;
}

PolyVectorField parse_vector_field(std::string_view text, int params) {
  std::vector<std::string> pieces;
  std::string current;
  bool comment = false;
  auto flush = [&] {
    if (current.find_first_not_of(" \t\r") != std::string::npos) pieces.push_back(current);
    current.clear();
  };
  for (char c : text) {
    if (c == '\n') {
      comment = false;
      flush();
    } else if (comment) {
      continue;
    } else if (c == '#') {
      comment = true;
    } else if (c == ';') {
      flush();
    } else {
      current += c;
    }
  }
  flush();
  if (pieces.empty()) throw ParseError("vector field has no components");
  const int n = static_cast<int>(pieces.size());
  std::vector<Polynomial> comps;
  for (const auto& p : pieces) comps.push_back(parse_polynomial(p, n, params));
  PolyVectorField x(std::move(comps));
  if (x.x_degree() > kDegreeCap) {
    throw ParseError("vector field degree " + std::to_string(x.x_degree()) + " exceeds the cap " +
                     std::to_string(kDegreeCap));
  }
  return x;
}

PolyVectorField read_vector_field_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open vector field file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_vector_field(buf.str());
}

PolyVectorField vf_prelie(const PolyVectorField& x, const PolyVectorField& y, int cap) {
  require_same_dimension(x, y);
  const int n = x.dimension();
  std::vector<Polynomial> out;
  for (int j = 0; j < n; ++j) {
    Polynomial g(n, x.params());
    for (int i = 0; i < n; ++i) {
      if (!x[i].is_zero()) g += x[i] * y[j].derivative(i);
    }
    out.push_back(std::move(g));
  }
  PolyVectorField r(std::move(out));
  check_degree_cap(r, cap);
  return r;
}

namespace {

void require_point(const PolyVectorField& x, const std::vector<Rational>& o) {
  if (static_cast<int>(o.size()) != x.dimension()) throw MismatchError("point dimension differs from the field");
}

}  // namespace

PolyVectorField vf_frozen_nap(const PolyVectorField& x, const PolyVectorField& y, const std::vector<Rational>& o,
                              int cap) {
  require_same_dimension(x, y);
  require_point(x, o);
  return vf_prelie(x.evaluate(o), y, cap);
}

PolyVectorField translate(const PolyVectorField& x, const std::vector<Rational>& v) {
  require_point(x, v);
  const int n = x.dimension();
  std::vector<Polynomial> shift;
  for (int i = 0; i < n; ++i) {
    shift.push_back(Polynomial::variable(i, n, x.params()) - Polynomial::constant(v[i], n, x.params()));
  }
  std::vector<Polynomial> out;
  for (const auto& c : x.components()) out.push_back(c.compose(shift));
  return PolyVectorField(std::move(out));
}

namespace {

Polynomial differential_from(const Polynomial& f, const std::vector<const PolyVectorField*>& args, std::size_t k) {
  if (f.is_zero() || k == args.size()) return f;
  const PolyVectorField& v = *args[k];
  Polynomial out(f.nvars(), f.params());
  for (int j = 0; j < v.dimension(); ++j) {
    if (v[j].is_zero()) continue;
    Polynomial d = differential_from(f.derivative(j), args, k + 1);
    if (!d.is_zero()) out += v[j] * d;
  }
  return out;
}

void check_decorations(const RootedTree& t, const std::vector<PolyVectorField>& fields) {
  if (fields.empty()) throw PreconditionError("no decorating vector fields");
  for (const auto& f : fields) require_same_dimension(fields.front(), f);
  std::function<void(const RootedTree&)> walk = [&](const RootedTree& s) {
    if (s.color() >= static_cast<int>(fields.size())) {
      throw PreconditionError("tree color " + std::to_string(s.color()) + " has no vector field");
    }
    for (const auto& c : s.children()) walk(c);
  };
  walk(t);
}

PolyVectorField cayley_recursive(const RootedTree& t, const std::vector<PolyVectorField>& fields,
                                 const std::vector<Rational>* o) {
  const PolyVectorField& x = fields[t.color()];
  if (t.is_single_vertex()) return x;
  std::vector<PolyVectorField> branches;
  for (const auto& c : t.children()) {
    PolyVectorField y = cayley_recursive(c, fields, o);
    branches.push_back(o ? y.evaluate(*o) : y);
  }
  std::vector<const PolyVectorField*> args;
  for (const auto& b : branches) args.push_back(&b);
  std::vector<Polynomial> out;
  for (const auto& f : x.components()) out.push_back(multilinear_differential(f, args));
  return PolyVectorField(std::move(out));
}

// Sum over all maps F from vertices to coordinates: the product of the
// vertex factors ∂_{I(v)} X_v^{F(v)}, landing in component F(root).
PolyVectorField cayley_closed(const RootedTree& t, const std::vector<PolyVectorField>& fields,
                              const std::vector<Rational>* o) {
  const FlatForest flat = flatten(t);
  const int size = static_cast<int>(flat.size());
  const int n = fields.front().dimension();
  const int params = fields.front().params();
  std::vector<std::vector<int>> kids(size);
  for (int v = 1; v < size; ++v) kids[flat.parent[v]].push_back(v);

  std::vector<int> assign(size, 0);
  std::vector<Polynomial> out(n, Polynomial(n, params));
  while (true) {
    Polynomial term = Polynomial::constant(Rational(1), n, params);
    for (int v = size - 1; v >= 0 && !term.is_zero(); --v) {
      Polynomial f = fields[flat.color[v]][assign[v]];
      for (int w : kids[v]) f = f.derivative(assign[w]);
      if (v != 0 && o) f = f.evaluate(*o);
      term = term * f;
    }
    out[assign[0]] += term;
    int v = 0;
    while (v < size && ++assign[v] == n) assign[v++] = 0;
    if (v == size) break;
  }
  return PolyVectorField(std::move(out));
}

PolyVectorField cayley_impl(const RootedTree& t, const std::vector<PolyVectorField>& fields,
                            const std::vector<Rational>* o, CayleyMethod method, int cap) {
  check_decorations(t, fields);
  if (o) require_point(fields.front(), *o);
  PolyVectorField r =
      method == CayleyMethod::recursive ? cayley_recursive(t, fields, o) : cayley_closed(t, fields, o);
  check_degree_cap(r, cap);
  return r;
}

}  // namespace

Polynomial multilinear_differential(const Polynomial& f, const std::vector<const PolyVectorField*>& args) {
  for (const auto* a : args) {
    if (a->dimension() != f.nvars() || a->params() != f.params()) {
      throw MismatchError("differential argument lives in a different space");
    }
  }
  return differential_from(f, args, 0);
}

PolyVectorField cayley(const RootedTree& t, const std::vector<PolyVectorField>& fields, CayleyMethod method,
                       int cap) {
  return cayley_impl(t, fields, nullptr, method, cap);
}

PolyVectorField frozen_cayley(const RootedTree& t, const std::vector<PolyVectorField>& fields,
                              const std::vector<Rational>& o, CayleyMethod method, int cap) {
  return cayley_impl(t, fields, &o, method, cap);
}

CayleyMethod parse_cayley_method(std::string_view name) {
  if (name == "recursive") return CayleyMethod::recursive;
  if (name == "closed") return CayleyMethod::closed;
  throw ParseError("unknown Cayley method '" + std::string(name) + "'");
}

}  // namespace forestcalc

#include "forestcalc/structures.hpp"

#include <algorithm>
#include <cstdint>

#include "forestcalc/errors.hpp"

namespace forestcalc {

Identity parse_identity(const std::string& name) {
  if (name == "associative") return Identity::associative;
  if (name == "left_prelie") return Identity::left_prelie;
  if (name == "right_prelie") return Identity::right_prelie;
  if (name == "left_nap") return Identity::left_nap;
  if (name == "novikov") return Identity::novikov;
  if (name == "assosymmetric") return Identity::assosymmetric;
  throw PreconditionError("unknown identity '" + name + "'");
}

std::string identity_name(Identity which) {
  switch (which) {
    case Identity::associative:
      return "associative";
    case Identity::left_prelie:
      return "left_prelie";
    case Identity::right_prelie:
      return "right_prelie";
    case Identity::left_nap:
      return "left_nap";
    case Identity::novikov:
      return "novikov";
    case Identity::assosymmetric:
      return "assosymmetric";
  }
  return "?";
}

std::string to_string(const StructureReport& r) {
  std::string out = r.name + "\n";
  for (const auto& [axiom, n] : r.checked) out += "  " + axiom + ": " + std::to_string(n) + " checked\n";
  out += "  violations: " + std::to_string(r.violations.size()) + "\n";
  for (const auto& v : r.violations) out += "    " + v + "\n";
  out += r.passed() ? "PASS\n" : "FAIL\n";
  return out;
}

std::string to_string(const TableElement& x) {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [i, c] : x) {
    if (!out.empty()) out += " + ";
    out += to_short_string(c) + "*e" + std::to_string(i);
  }
  return out;
}

Carrier<TableElement> table_carrier(const ProductTable& t) {
  Carrier<TableElement> c;
  for (int i = 0; i < t.dimension(); ++i) c.basis.push_back(t.basis(i));
  c.product = [t](const TableElement& a, const TableElement& b) { return t.product(a, b); };
  c.render = [](const TableElement& x) { return to_string(x); };
  return c;
}

DendriformCarrier<TableElement> table_dendriform(const ProductTable& prec, const ProductTable& succ) {
  if (prec.dimension() != succ.dimension()) throw MismatchError("dendriform tables of different dimension");
  DendriformCarrier<TableElement> c;
  for (int i = 0; i < prec.dimension(); ++i) c.basis.push_back(prec.basis(i));
  c.prec = [prec](const TableElement& a, const TableElement& b) { return prec.product(a, b); };
  c.succ = [succ](const TableElement& a, const TableElement& b) { return succ.product(a, b); };
  c.render = [](const TableElement& x) { return to_string(x); };
  return c;
}

namespace {

std::vector<Rational> monomial(int k, const Rational& c, int n) {
  std::vector<Rational> v(n, Rational(0));
  if (k < n) v[k] = c;
  return v;
}

}  // namespace

Carrier<TableElement> novikov_prototype(int max_degree) {
  if (max_degree < 1) throw PreconditionError("the prototype needs degree >= 1");
  const int n = 3 * max_degree - 1;
  ProductTable t(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // D(x^i) x^j = i x^{i+j-1}
      t.set(i, j, i == 0 ? monomial(0, Rational(0), n) : monomial(i + j - 1, Rational(i), n));
    }
  }
  Carrier<TableElement> c = table_carrier(t);
  c.basis.resize(max_degree + 1);
  return c;
}

std::pair<ProductTable, ProductTable> integral_dendriform(int n) {
  ProductTable prec(n), succ(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      prec.set(i, j, monomial(i + j + 1, Rational(1, j + 1), n));
      succ.set(i, j, monomial(i + j + 1, Rational(1, i + 1), n));
    }
  }
  return {prec, succ};
}

namespace {

void shuffle_words(const std::string& u, const std::string& v, std::string& prefix, const Rational& c, WordSum& out) {
  if (u.empty() || v.empty()) {
    out.add(prefix + u + v, c);
    return;
  }
  prefix.push_back(u[0]);
  shuffle_words(u.substr(1), v, prefix, c, out);
  prefix.back() = v[0];
  shuffle_words(u, v.substr(1), prefix, c, out);
  prefix.pop_back();
}

void require_nonempty(const WordSum& x) {
  for (const auto& [w, c] : x) {
    if (w.empty()) throw PreconditionError("half-shuffles are not defined on the empty word");
  }
}

}  // namespace

WordSum shuffle(const WordSum& u, const WordSum& v) {
  WordSum out;
  std::string prefix;
  for (const auto& [a, ca] : u) {
    for (const auto& [b, cb] : v) shuffle_words(a, b, prefix, ca * cb, out);
  }
  return out;
}

std::pair<WordSum, WordSum> half_shuffles(const WordSum& u, const WordSum& v) {
  require_nonempty(u);
  require_nonempty(v);
  WordSum lt, gt;
  std::string prefix;
  for (const auto& [a, ca] : u) {
    for (const auto& [b, cb] : v) {
      prefix.assign(1, a[0]);
      shuffle_words(a.substr(1), b, prefix, ca * cb, lt);
      prefix.assign(1, b[0]);
      shuffle_words(a, b.substr(1), prefix, ca * cb, gt);
    }
  }
  return {lt, gt};
}

std::vector<std::string> words_up_to(int max_length, int alphabet) {
  if (alphabet < 1 || alphabet > 26) throw PreconditionError("alphabet size must be in 1..26");
  std::vector<std::string> out;
  std::vector<std::string> layer{""};
  for (int len = 1; len <= max_length; ++len) {
    std::vector<std::string> next;
    for (const auto& w : layer) {
      for (int a = 0; a < alphabet; ++a) next.push_back(w + static_cast<char>('a' + a));
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

DendriformCarrier<WordSum> shuffle_carrier(int max_length, int alphabet) {
  DendriformCarrier<WordSum> c;
  for (const auto& w : words_up_to(max_length, alphabet)) c.basis.emplace_back(w);
  c.prec = [](const WordSum& a, const WordSum& b) { return half_shuffles(a, b).first; };
  c.succ = [](const WordSum& a, const WordSum& b) { return half_shuffles(a, b).second; };
  c.render = [](const WordSum& x) { return to_string(x); };
  return c;
}

namespace {

// Words packed as 4-bit letters (1..15) above a 4-bit length; sums are sorted
// vectors of (word, integer coefficient). Shuffle coefficients stay integral.
using Packed = std::uint64_t;
using PackedSum = std::vector<std::pair<Packed, std::int64_t>>;

int length(Packed w) { return static_cast<int>(w & 15); }
Packed letters(Packed w) { return w >> 4; }
Packed pack(Packed bits, int len) { return bits << 4 | static_cast<Packed>(len); }
Packed concat(Packed bits, int len, Packed w) { return pack(bits << (4 * length(w)) | letters(w), len + length(w)); }
Packed first(Packed w) { return letters(w) >> (4 * (length(w) - 1)); }
Packed rest(Packed w) { return pack(letters(w) & ((Packed(1) << (4 * (length(w) - 1))) - 1), length(w) - 1); }

void shuffle_packed(Packed u, Packed v, Packed pbits, int plen, std::int64_t c, PackedSum& out) {
  if (length(u) == 0) {
    out.emplace_back(concat(pbits, plen, v), c);
    return;
  }
  if (length(v) == 0) {
    out.emplace_back(concat(pbits, plen, u), c);
    return;
  }
  shuffle_packed(rest(u), v, pbits << 4 | first(u), plen + 1, c, out);
  shuffle_packed(u, rest(v), pbits << 4 | first(v), plen + 1, c, out);
}

void normalize(PackedSum& s) {
  std::sort(s.begin(), s.end());
  std::size_t k = 0;
  for (std::size_t i = 0; i < s.size();) {
    std::int64_t c = 0;
    std::size_t j = i;
    while (j < s.size() && s[j].first == s[i].first) c += s[j++].second;
    if (c != 0) s[k++] = {s[i].first, c};
    i = j;
  }
  s.resize(k);
}

enum class Op { prec, succ, shuffle };

PackedSum apply(Op op, const PackedSum& a, const PackedSum& b) {
  PackedSum out;
  for (const auto& [u, cu] : a) {
    for (const auto& [v, cv] : b) {
      const std::int64_t c = cu * cv;
      switch (op) {
        case Op::prec:
          shuffle_packed(rest(u), v, first(u), 1, c, out);
          break;
        case Op::succ:
          shuffle_packed(u, rest(v), first(v), 1, c, out);
          break;
        case Op::shuffle:
          shuffle_packed(u, v, 0, 0, c, out);
          break;
      }
    }
  }
  normalize(out);
  return out;
}

PackedSum minus(PackedSum a, const PackedSum& b) {
  for (const auto& [w, c] : b) a.emplace_back(w, -c);
  normalize(a);
  return a;
}

std::string render(const PackedSum& s) {
  if (s.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : s) {
    if (!out.empty()) out += " + ";
    std::string word;
    for (int k = length(w) - 1; k >= 0; --k) word += static_cast<char>('a' + ((letters(w) >> (4 * k)) & 15) - 1);
    out += std::to_string(c) + "*" + word;
  }
  return out;
}

}  // namespace

StructureReport check_shuffle_suite(int max_length, int alphabet) {
  if (max_length < 1 || max_length > 4) throw PreconditionError("shuffle suite word length must be in 1..4");
  if (alphabet < 1 || alphabet > 15) throw PreconditionError("shuffle suite alphabet must be in 1..15");
  StructureReport r{"shuffle", {}, {}};
  std::vector<PackedSum> words;
  for (const auto& w : words_up_to(max_length, alphabet)) {
    Packed bits = 0;
    for (char ch : w) bits = bits << 4 | static_cast<Packed>(ch - 'a' + 1);
    words.push_back({{pack(bits, static_cast<int>(w.size())), 1}});
  }
  auto check = [&](const std::string& axiom, const std::vector<const PackedSum*>& args, const PackedSum& lhs,
                   const PackedSum& rhs) {
    ++r.checked[axiom];
    if (lhs == rhs) return;
    std::string where;
    for (const auto* a : args) where += (where.empty() ? "" : ", ") + render(*a);
    r.violations.push_back(axiom + " at (" + where + "): " + render(lhs) + " != " + render(rhs));
  };
  auto prelie = [](const PackedSum& a, const PackedSum& b) {
    return minus(apply(Op::succ, a, b), apply(Op::prec, b, a));
  };
  const PackedSum zero;
  for (const auto& a : words) {
    for (const auto& b : words) {
      const PackedSum a_lt_b = apply(Op::prec, a, b), a_gt_b = apply(Op::succ, a, b);
      const PackedSum a_sh_b = apply(Op::shuffle, a, b);
      check("commutativity", {&a, &b}, a_gt_b, apply(Op::prec, b, a));
      check("derived product vanishes", {&a, &b}, prelie(a, b), zero);
      PackedSum split = a_lt_b;
      split.insert(split.end(), a_gt_b.begin(), a_gt_b.end());
      normalize(split);
      check("half-shuffles split the shuffle", {&a, &b}, split, a_sh_b);
      for (const auto& c : words) {
        const PackedSum b_gt_c = apply(Op::succ, b, c);
        const PackedSum b_sh_c = apply(Op::shuffle, b, c);
        const PackedSum a_gt_bc = apply(Op::succ, a, b_gt_c);
        check("A1", {&a, &b, &c}, apply(Op::prec, a_lt_b, c), apply(Op::prec, a, b_sh_c));
        check("A2", {&a, &b, &c}, apply(Op::prec, a_gt_b, c), apply(Op::succ, a, apply(Op::prec, b, c)));
        check("A3", {&a, &b, &c}, a_gt_bc, apply(Op::succ, a_sh_b, c));
        check("shuffle associativity", {&a, &b, &c}, apply(Op::shuffle, a_sh_b, c), apply(Op::shuffle, a, b_sh_c));
        check("left NAP of the right half-shuffle", {&a, &b, &c}, a_gt_bc,
              apply(Op::succ, b, apply(Op::succ, a, c)));
        const PackedSum ab = prelie(a, b), ba = prelie(b, a);
        check("derived left pre-Lie", {&a, &b, &c}, minus(prelie(ab, c), prelie(a, prelie(b, c))),
              minus(prelie(ba, c), prelie(b, prelie(a, c))));
      }
    }
  }
  return r;
}

}  // namespace forestcalc

#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "forestcalc/forest_sum.hpp"
#include "forestcalc/linear_combination.hpp"
#include "forestcalc/product_table.hpp"

namespace forestcalc {

enum class Identity {
  associative,    ///< (ab)c = a(bc)
  left_prelie,    ///< (ab)c - a(bc) symmetric in a, b
  right_prelie,   ///< a(bc) - (ab)c = a(cb) - (ac)b
  left_nap,       ///< a(bc) = b(ac)
  novikov,        ///< right pre-Lie and left NAP
  assosymmetric,  ///< left and right pre-Lie
};

Identity parse_identity(const std::string& name);
std::string identity_name(Identity which);

struct StructureReport {
  std::string name;
  /// Triples (or pairs) checked per axiom.
  std::map<std::string, std::size_t> checked;
  /// Every violation, not only the first.
  std::vector<std::string> violations;
  bool passed() const { return violations.empty(); }
};

std::string to_string(const StructureReport& r);

/// A vector space given by spanning elements and a bilinear product. T needs
/// +, - and ==.
template <class T>
struct Carrier {
  std::vector<T> basis;
  std::function<T(const T&, const T&)> product;
  std::function<std::string(const T&)> render;
};

template <class T>
struct DendriformCarrier {
  std::vector<T> basis;
  std::function<T(const T&, const T&)> prec;
  std::function<T(const T&, const T&)> succ;
  std::function<std::string(const T&)> render;
};

namespace detail {

template <class T>
void record(StructureReport& r, const std::string& axiom, const Carrier<T>& c, const T& a, const T& b, const T& d,
            const T& lhs, const T& rhs) {
  ++r.checked[axiom];
  if (lhs == rhs) return;
  r.violations.push_back(axiom + " at (" + c.render(a) + ", " + c.render(b) + ", " + c.render(d) +
                         "): " + c.render(lhs) + " != " + c.render(rhs));
}

}  // namespace detail

/// Exhaustive check of the identity on all triples of basis elements.
template <class T>
StructureReport check_structure(Identity which, const Carrier<T>& c) {
  StructureReport r{identity_name(which), {}, {}};
  const auto& m = c.product;
  for (const auto& a : c.basis) {
    for (const auto& b : c.basis) {
      const T ab = m(a, b), ba = m(b, a);
      for (const auto& d : c.basis) {
        const T bd = m(b, d);
        const T a_bd = m(a, bd), ab_d = m(ab, d);
        auto left_prelie = [&] {
          const T ad = m(a, d);
          detail::record(r, "left pre-Lie", c, a, b, d, ab_d - a_bd, m(ba, d) - m(b, ad));
        };
        auto right_prelie = [&] {
          const T ad = m(a, d), db = m(d, b);
          detail::record(r, "right pre-Lie", c, a, b, d, a_bd - ab_d, m(a, db) - m(ad, b));
        };
        auto left_nap = [&] { detail::record(r, "left NAP", c, a, b, d, a_bd, m(b, m(a, d))); };
        switch (which) {
          case Identity::associative:
            detail::record(r, "associativity", c, a, b, d, ab_d, a_bd);
            break;
          case Identity::left_prelie:
            left_prelie();
            break;
          case Identity::right_prelie:
            right_prelie();
            break;
          case Identity::left_nap:
            left_nap();
            break;
          case Identity::novikov:
            right_prelie();
            left_nap();
            break;
          case Identity::assosymmetric:
            left_prelie();
            right_prelie();
            break;
        }
      }
    }
  }
  return r;
}

/// a ▷ b = a ≻ b - b ≺ a.
template <class T>
Carrier<T> derived_prelie(const DendriformCarrier<T>& d) {
  return {d.basis, [d](const T& a, const T& b) { return d.succ(a, b) - d.prec(b, a); }, d.render};
}

/// a * b = a ≺ b + a ≻ b.
template <class T>
Carrier<T> dendriform_sum(const DendriformCarrier<T>& d) {
  return {d.basis, [d](const T& a, const T& b) { return d.prec(a, b) + d.succ(a, b); }, d.render};
}

/// (A1)-(A3), associativity of ≺ + ≻, and the left pre-Lie identity for the
/// derived ▷, each reported separately.
template <class T>
StructureReport check_dendriform(const DendriformCarrier<T>& d) {
  StructureReport r{"dendriform", {}, {}};
  const Carrier<T> as_prec{d.basis, d.prec, d.render};
  const auto& lt = d.prec;
  const auto& gt = d.succ;
  auto star = [&](const T& a, const T& b) { return lt(a, b) + gt(a, b); };
  for (const auto& a : d.basis) {
    for (const auto& b : d.basis) {
      for (const auto& c : d.basis) {
        detail::record(r, "A1", as_prec, a, b, c, lt(lt(a, b), c), lt(a, star(b, c)));
        detail::record(r, "A2", as_prec, a, b, c, lt(gt(a, b), c), gt(a, lt(b, c)));
        detail::record(r, "A3", as_prec, a, b, c, gt(a, gt(b, c)), gt(star(a, b), c));
      }
    }
  }
  for (auto* sub : {"associative", "left_prelie"}) {
    const bool assoc = std::string(sub) == "associative";
    StructureReport s = check_structure(assoc ? Identity::associative : Identity::left_prelie,
                                        assoc ? dendriform_sum(d) : derived_prelie(d));
    for (const auto& [k, n] : s.checked) r.checked[(assoc ? "sum " : "derived ") + k] += n;
    for (auto& v : s.violations) r.violations.push_back((assoc ? "sum " : "derived ") + v);
  }
  return r;
}

/// Commutativity a ≻ b = b ≺ a and the left NAP identity for ≻.
template <class T>
StructureReport check_zinbiel_nap(const DendriformCarrier<T>& d) {
  StructureReport r{"zinbiel_nap", {}, {}};
  const Carrier<T> as_succ{d.basis, d.succ, d.render};
  for (const auto& a : d.basis) {
    for (const auto& b : d.basis) {
      ++r.checked["commutativity"];
      const T lhs = d.succ(a, b), rhs = d.prec(b, a);
      if (!(lhs == rhs)) {
        r.violations.push_back("commutativity at (" + d.render(a) + ", " + d.render(b) + "): " + d.render(lhs) +
                               " != " + d.render(rhs));
      }
    }
  }
  StructureReport nap = check_structure(Identity::left_nap, as_succ);
  for (const auto& [k, n] : nap.checked) r.checked[k] += n;
  r.violations.insert(r.violations.end(), nap.violations.begin(), nap.violations.end());
  return r;
}

// ---- finite-dimensional tables ----

std::string to_string(const TableElement& x);
Carrier<TableElement> table_carrier(const ProductTable& t);
DendriformCarrier<TableElement> table_dendriform(const ProductTable& prec, const ProductTable& succ);

/// Polynomials of degree <= max_degree with a*b = (Da)b, D = d/dx. The
/// products are exact: the table spans degrees up to 3*max_degree - 2, which
/// every triple product of the basis stays within.
Carrier<TableElement> novikov_prototype(int max_degree);
/// Truncated polynomials with I(x^k) = x^{k+1}/(k+1): a ≺ b = a I(b), a ≻ b = I(a) b.
std::pair<ProductTable, ProductTable> integral_dendriform(int n);

// ---- words and half-shuffles ----

using WordSum = LinearCombination<std::string>;

WordSum shuffle(const WordSum& u, const WordSum& v);
/// (u ≺ v, u ≻ v) for sums of nonempty words; the empty word is rejected.
std::pair<WordSum, WordSum> half_shuffles(const WordSum& u, const WordSum& v);
/// Nonempty words of length <= max_length over the first `alphabet` letters a, b, c, ...
std::vector<std::string> words_up_to(int max_length, int alphabet);
DendriformCarrier<WordSum> shuffle_carrier(int max_length, int alphabet);

/// The exhaustive shuffle suite on packed words: (A1)-(A3), associativity of
/// the shuffle, commutativity, left NAP of ≻, vanishing of ▷ and its left
/// pre-Lie identity. Words of length <= max_length (at most 4), alphabet <= 15.
StructureReport check_shuffle_suite(int max_length, int alphabet);

}  // namespace forestcalc

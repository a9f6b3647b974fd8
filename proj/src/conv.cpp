#include "forestcalc/conv.hpp"

#include "forestcalc/ck_hopf.hpp"
#include "forestcalc/errors.hpp"

namespace forestcalc {

template <class Scalar>
Functional<Scalar>::Functional(FunctionalKind kind, std::size_t truncation, Scalar zero, int colors)
    : kind_(kind), truncation_(truncation), colors_(colors), zero_(std::move(zero)) {
  if (colors < 1) throw PreconditionError("at least one color is required");
  if (!is_zero(zero_)) throw PreconditionError("zero prototype must be zero");
}

template <class Scalar>
void Functional<Scalar>::check_degree(const Forest& f) const {
  if (f.vertex_count() > truncation_) {
    throw TruncationError("functional known up to " + std::to_string(truncation_) + " vertices, queried on " +
                          f.str());
  }
}

template <class Scalar>
void Functional<Scalar>::set(const Forest& f, const Scalar& v) {
  check_degree(f);
  if (kind_ != FunctionalKind::general && !f.is_tree()) {
    throw PreconditionError("characters and infinitesimal characters are set on trees only");
  }
  if (is_zero(v)) {
    values_.erase(f);
  } else {
    values_.insert_or_assign(f, v);
  }
}

template <class Scalar>
Scalar Functional<Scalar>::operator()(const Forest& f) const {
  check_degree(f);
  auto lookup = [&](const Forest& g) -> Scalar {
    auto it = values_.find(g);
    return it == values_.end() ? zero_ : it->second;
  };
  switch (kind_) {
    case FunctionalKind::general:
      return lookup(f);
    case FunctionalKind::infinitesimal:
      return f.is_tree() ? lookup(f) : zero_;
    case FunctionalKind::character: {
      Scalar v = one_like(zero_);
      for (const auto& t : f.trees()) {
        auto it = values_.find(Forest(t));
        if (it == values_.end()) return zero_;
        v = v * it->second;
      }
      return v;
    }
  }
  return zero_;
}

template <class Scalar>
Scalar Functional<Scalar>::operator()(const ForestSum& x) const {
  Scalar v = zero_;
  for (const auto& [f, c] : x) v += (*this)(f) * c;
  return v;
}

template <class Scalar>
Functional<Scalar> Functional<Scalar>::to_general() const {
  Functional<Scalar> out(FunctionalKind::general, truncation_, zero_, colors_);
  for (const auto& f : forests_up_to(truncation_, colors_)) out.set(f, (*this)(f));
  return out;
}

template class Functional<Rational>;
template class Functional<LaurentSeries>;

namespace {

template <class Scalar>
void require_compatible(const Functional<Scalar>& a, const Functional<Scalar>& b) {
  if (a.colors() != b.colors()) throw MismatchError("functionals over different color palettes");
  if constexpr (std::is_same_v<Scalar, LaurentSeries>) {
    if (a.zero().min_exp() != b.zero().min_exp() || a.zero().max_exp() != b.zero().max_exp()) {
      throw MismatchError("functionals valued in Laurent series with different windows");
    }
  }
}

template <class Scalar, class F>
Functional<Scalar> tabulate(std::size_t truncation, const Scalar& zero, int colors, F&& value) {
  Functional<Scalar> out(FunctionalKind::general, truncation, zero, colors);
  for (const auto& f : forests_up_to(truncation, colors)) out.set(f, value(f));
  return out;
}

}  // namespace

template <class Scalar>
Functional<Scalar> unit_functional(std::size_t truncation, const Scalar& zero, int colors) {
  return Functional<Scalar>(FunctionalKind::character, truncation, zero, colors);
}

template <class Scalar>
Functional<Scalar> convolve(const Functional<Scalar>& phi, const Functional<Scalar>& psi) {
  require_compatible(phi, psi);
  std::size_t d = std::min(phi.truncation(), psi.truncation());
  return tabulate(d, phi.zero(), phi.colors(), [&](const Forest& x) -> Scalar {
    Scalar v = phi.zero();
    for (const auto& [k, c] : coproduct(x)) {
      Scalar a = phi(k.first);
      if (is_zero(a)) continue;
      v += a * psi(k.second) * c;
    }
    return v;
  });
}

template <class Scalar>
Functional<Scalar> add(const Functional<Scalar>& phi, const Functional<Scalar>& psi) {
  require_compatible(phi, psi);
  std::size_t d = std::min(phi.truncation(), psi.truncation());
  return tabulate(d, phi.zero(), phi.colors(), [&](const Forest& x) -> Scalar { return phi(x) + psi(x); });
}

template <class Scalar>
Functional<Scalar> subtract(const Functional<Scalar>& phi, const Functional<Scalar>& psi) {
  require_compatible(phi, psi);
  std::size_t d = std::min(phi.truncation(), psi.truncation());
  return tabulate(d, phi.zero(), phi.colors(), [&](const Forest& x) -> Scalar { return phi(x) - psi(x); });
}

template <class Scalar>
Functional<Scalar> scale(const Functional<Scalar>& phi, const Rational& s) {
  return tabulate(phi.truncation(), phi.zero(), phi.colors(), [&](const Forest& x) -> Scalar {
    Scalar v = phi(x) * s;
    return v;
  });
}

template <class Scalar>
Functional<Scalar> conv_inverse(const Functional<Scalar>& phi) {
  if (phi(Forest{}) != one_like(phi.zero())) throw PreconditionError("convolution inverse needs phi(1) = 1");
  auto e = unit_functional(phi.truncation(), phi.zero(), phi.colors());
  auto gamma = subtract(e, phi);  // vanishes on 1, so gamma^{*k} vanishes below k vertices
  auto result = e.to_general();
  auto power = e.to_general();
  for (std::size_t k = 1; k <= phi.truncation(); ++k) {
    power = convolve(power, gamma);
    result = add(result, power);
  }
  return result;
}

template <class Scalar>
Functional<Scalar> conv_exp(const Functional<Scalar>& alpha) {
  if (!is_zero(alpha(Forest{}))) throw PreconditionError("exponential needs alpha(1) = 0");
  auto e = unit_functional(alpha.truncation(), alpha.zero(), alpha.colors());
  auto result = e.to_general();
  auto power = e.to_general();
  for (std::size_t k = 1; k <= alpha.truncation(); ++k) {
    power = convolve(power, alpha);
    result = add(result, scale(power, Rational(1) / factorial(static_cast<unsigned>(k))));
  }
  return result;
}

template <class Scalar>
Functional<Scalar> conv_log(const Functional<Scalar>& phi) {
  if (phi(Forest{}) != one_like(phi.zero())) throw PreconditionError("logarithm needs phi(1) = 1");
  auto e = unit_functional(phi.truncation(), phi.zero(), phi.colors());
  auto gamma = subtract(phi, e);
  auto result = Functional<Scalar>(FunctionalKind::general, phi.truncation(), phi.zero(), phi.colors());
  auto power = e.to_general();
  for (std::size_t k = 1; k <= phi.truncation(); ++k) {
    power = convolve(power, gamma);
    Rational coeff = Rational(k % 2 == 1 ? 1 : -1, static_cast<unsigned long>(k));
    result = add(result, scale(power, coeff));
  }
  return result;
}

template <class Scalar>
Functional<Scalar> conv_bracket(const Functional<Scalar>& phi, const Functional<Scalar>& psi) {
  return subtract(convolve(phi, psi), convolve(psi, phi));
}

template <class Scalar>
Functional<Scalar> compose_with_antipode(const Functional<Scalar>& phi) {
  return tabulate(phi.truncation(), phi.zero(), phi.colors(), [&](const Forest& x) -> Scalar { return phi(antipode(x)); });
}

template <class Scalar>
Functional<Scalar> character_from_tree_values(const std::map<RootedTree, Scalar>& tree_values, std::size_t truncation,
                                              const Scalar& zero, int colors) {
  Functional<Scalar> out(FunctionalKind::character, truncation, zero, colors);
  for (std::size_t n = 1; n <= truncation; ++n) {
    for (const auto& t : enumerate_trees(n, colors)) {
      auto it = tree_values.find(t);
      if (it == tree_values.end()) throw PreconditionError("missing character value for tree " + t.str());
      out.set(t, it->second);
    }
  }
  return out;
}

template <class Scalar>
bool equal_functionals(const Functional<Scalar>& phi, const Functional<Scalar>& psi) {
  if (phi.colors() != psi.colors()) return false;
  std::size_t d = std::min(phi.truncation(), psi.truncation());
  for (const auto& f : forests_up_to(d, phi.colors())) {
    if (!(phi(f) == psi(f))) return false;
  }
  return true;
}

template <class Scalar>
bool is_character(const Functional<Scalar>& phi) {
  if (!(phi(Forest{}) == one_like(phi.zero()))) return false;
  const std::size_t d = phi.truncation();
  for (std::size_t n = 2; n <= d; ++n) {
    for (const auto& f : enumerate_forests(n, phi.colors())) {
      if (f.is_tree()) continue;
      // split off the first tree; induction on the number of components does the rest
      Forest rest(std::vector<RootedTree>(f.trees().begin() + 1, f.trees().end()));
      if (!(phi(f) == phi(f.trees().front()) * phi(rest))) return false;
    }
  }
  return true;
}

template <class Scalar>
bool is_infinitesimal_character(const Functional<Scalar>& phi) {
  for (const auto& f : forests_up_to(phi.truncation(), phi.colors())) {
    if (f.is_tree()) continue;
    if (!is_zero(phi(f))) return false;
  }
  return true;
}

RationalFunctional dual_basis(const RootedTree& t, bool normalized, std::size_t truncation, int colors) {
  RationalFunctional out(FunctionalKind::general, std::max(truncation, t.vertex_count()), Rational(0), colors);
  out.set(Forest(t), normalized ? Rational(static_cast<unsigned long>(symmetry_factor(t))) : Rational(1));
  return out;
}

#define FORESTCALC_INSTANTIATE(S)                                                                                \
  template Functional<S> unit_functional(std::size_t, const S&, int);                                           \
  template Functional<S> convolve(const Functional<S>&, const Functional<S>&);                                   \
  template Functional<S> add(const Functional<S>&, const Functional<S>&);                                        \
  template Functional<S> subtract(const Functional<S>&, const Functional<S>&);                                   \
  template Functional<S> scale(const Functional<S>&, const Rational&);                                           \
  template Functional<S> conv_inverse(const Functional<S>&);                                                     \
  template Functional<S> conv_exp(const Functional<S>&);                                                         \
  template Functional<S> conv_log(const Functional<S>&);                                                         \
  template Functional<S> conv_bracket(const Functional<S>&, const Functional<S>&);                               \
  template Functional<S> compose_with_antipode(const Functional<S>&);                                            \
  template Functional<S> character_from_tree_values(const std::map<RootedTree, S>&, std::size_t, const S&, int); \
  template bool equal_functionals(const Functional<S>&, const Functional<S>&);                                   \
  template bool is_character(const Functional<S>&);                                                              \
  template bool is_infinitesimal_character(const Functional<S>&);

FORESTCALC_INSTANTIATE(Rational)
FORESTCALC_INSTANTIATE(LaurentSeries)

}  // namespace forestcalc

#include "forestcalc/renorm.hpp"

#include <map>

#include "forestcalc/ck_hopf.hpp"
#include "forestcalc/errors.hpp"

namespace forestcalc {

const RenormalizationScheme& minimal_subtraction() {
  static const MinimalSubtraction scheme;
  return scheme;
}

bool rota_baxter_check(const LaurentSeries& a, const LaurentSeries& b, const RenormalizationScheme& scheme) {
  auto pa = scheme.project(a);
  auto pb = scheme.project(b);
  auto lhs = pa * pb;
  auto rhs = scheme.project(pa * b + a * pb) - scheme.project(a * b);
  return lhs == rhs;
}

namespace {

void require_unital(const LaurentFunctional& phi) {
  if (!(phi(Forest{}) == one_like(phi.zero()))) throw PreconditionError("Birkhoff decomposition needs phi(1) = 1");
}

// Recursive Birkhoff factors, computed on every forest in order of size.
struct RecursiveBirkhoff {
  LaurentFunctional prepared;
  LaurentFunctional minus;
  LaurentFunctional plus;

  RecursiveBirkhoff(const LaurentFunctional& phi, const RenormalizationScheme& scheme)
      : prepared(FunctionalKind::general, phi.truncation(), phi.zero(), phi.colors()),
        minus(FunctionalKind::general, phi.truncation(), phi.zero(), phi.colors()),
        plus(FunctionalKind::general, phi.truncation(), phi.zero(), phi.colors()) {
    require_unital(phi);
    const LaurentSeries one = one_like(phi.zero());
    minus.set(Forest{}, one);
    plus.set(Forest{}, one);
    for (std::size_t n = 1; n <= phi.truncation(); ++n) {
      for (const auto& x : enumerate_forests(n, phi.colors())) {
        LaurentSeries b = phi(x);
        for (const auto& [k, c] : reduced_coproduct(x)) b += minus(k.first) * phi(k.second) * c;
        LaurentSeries polar = scheme.project(b);
        prepared.set(x, b);
        minus.set(x, -polar);
        plus.set(x, b - polar);
      }
    }
  }
};

}  // namespace

LaurentFunctional apply_projection(const LaurentFunctional& psi, const RenormalizationScheme& scheme,
                                   bool complement) {
  LaurentFunctional out(FunctionalKind::general, psi.truncation(), psi.zero(), psi.colors());
  for (const auto& f : forests_up_to(psi.truncation(), psi.colors())) {
    LaurentSeries v = psi(f);
    LaurentSeries p = scheme.project(v);
    out.set(f, complement ? v - p : p);
  }
  return out;
}

BirkhoffPair birkhoff(const LaurentFunctional& phi, BirkhoffMethod method, const RenormalizationScheme& scheme) {
  if (method == BirkhoffMethod::recursive) {
    RecursiveBirkhoff r(phi, scheme);
    return {r.minus, r.plus};
  }
  require_unital(phi);
  auto e = unit_functional(phi.truncation(), phi.zero(), phi.colors()).to_general();
  auto alpha = subtract(e, phi);
  auto beta = subtract(e, conv_inverse(phi));
  // Each pass fixes one more degree, since alpha and beta vanish on 1.
  auto minus = e;
  auto plus = e;
  for (std::size_t k = 0; k < phi.truncation(); ++k) {
    minus = add(e, apply_projection(convolve(minus, alpha), scheme));
    plus = add(e, apply_projection(convolve(plus, beta), scheme, true));
  }
  return {minus, plus};
}

LaurentFunctional bogoliubov_prepare(const LaurentFunctional& phi, const RenormalizationScheme& scheme) {
  return RecursiveBirkhoff(phi, scheme).prepared;
}

Rational renormalized_value(const BirkhoffPair& pair, const Forest& x) { return pair.phi_plus(x).coefficient(0); }

LaurentSeries default_window_zero(int pole_order, std::size_t degree) {
  const int w = pole_order * static_cast<int>(degree);
  return LaurentSeries(-w, w);
}

}  // namespace forestcalc

#pragma once

#include <string>

#include "forestcalc/conv.hpp"
#include "forestcalc/laurent.hpp"

namespace forestcalc {

/// A renormalization scheme: an idempotent projector on Laurent series whose
/// image and kernel are both subalgebras.
class RenormalizationScheme {
 public:
  virtual ~RenormalizationScheme() = default;
  virtual LaurentSeries project(const LaurentSeries& a) const = 0;
  virtual std::string name() const = 0;
};

/// Keeps the strictly negative powers of z.
class MinimalSubtraction final : public RenormalizationScheme {
 public:
  LaurentSeries project(const LaurentSeries& a) const override { return a.polar_part(); }
  std::string name() const override { return "ms"; }
};

const RenormalizationScheme& minimal_subtraction();

inline LaurentSeries ms_project(const LaurentSeries& a) { return a.polar_part(); }

/// pi(a) pi(b) == pi(pi(a) b + a pi(b)) - pi(ab). Throws WindowOverflow when a
/// product leaves the shared window.
bool rota_baxter_check(const LaurentSeries& a, const LaurentSeries& b,
                       const RenormalizationScheme& scheme = minimal_subtraction());

struct BirkhoffPair {
  LaurentFunctional phi_minus;
  LaurentFunctional phi_plus;
};

enum class BirkhoffMethod {
  recursive,  ///< phi_- = -pi b(phi), phi_+ = (I - pi) b(phi)
  iterative,  ///< fixed points phi_- = e + P(phi_- * alpha), phi_+ = e + P~(phi_+ * beta)
};

/// phi = phi_-^{*-1} * phi_+ with phi_- polar off the unit and phi_+ regular.
/// Requires phi(1) = 1.
BirkhoffPair birkhoff(const LaurentFunctional& phi, BirkhoffMethod method = BirkhoffMethod::recursive,
                      const RenormalizationScheme& scheme = minimal_subtraction());

/// b(phi)(x) = phi(x) + sum phi_-(x') phi(x'') over the reduced coproduct;
/// zero on the unit.
LaurentFunctional bogoliubov_prepare(const LaurentFunctional& phi,
                                     const RenormalizationScheme& scheme = minimal_subtraction());

/// Applies the scheme to every value off the unit (the operator P), or its
/// complement I - P when `complement` is set. The value on 1 is projected too.
LaurentFunctional apply_projection(const LaurentFunctional& psi, const RenormalizationScheme& scheme,
                                   bool complement = false);

/// Constant term of phi_+(x): the renormalized value.
Rational renormalized_value(const BirkhoffPair& pair, const Forest& x);

/// Suggested window [-p d, p d] for a character with pole order at most p per vertex.
LaurentSeries default_window_zero(int pole_order, std::size_t degree);

}  // namespace forestcalc

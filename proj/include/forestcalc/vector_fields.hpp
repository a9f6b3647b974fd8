#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "forestcalc/polynomial.hpp"
#include "forestcalc/tree.hpp"

namespace forestcalc {

/// Largest x-degree a vector field may have when parsed or produced by the
/// operations below (pass `kNoDegreeCap` to lift it).
inline constexpr int kDegreeCap = 6;
inline constexpr int kNoDegreeCap = -1;

/// Σ_i f_i ∂_i on k^n with polynomial coefficients. Components may carry
/// extra parameter variables (used for the step size h); those are treated as
/// scalars by every operation here.
class PolyVectorField {
 public:
  PolyVectorField() = default;
  explicit PolyVectorField(std::vector<Polynomial> components);
  static PolyVectorField zero(int n, int params = 0);
  /// The constant field ∂_{i+1}.
  static PolyVectorField partial(int i, int n, int params = 0);

  int dimension() const { return static_cast<int>(components_.size()); }
  int params() const { return components_.empty() ? 0 : components_.front().params(); }
  const std::vector<Polynomial>& components() const { return components_; }
  const Polynomial& operator[](int i) const { return components_.at(i); }
  bool is_zero() const;
  int x_degree() const;

  /// Coefficients frozen at the point O.
  PolyVectorField evaluate(const std::vector<Rational>& point) const;
  PolyVectorField with_params(int params) const;

  PolyVectorField& operator+=(const PolyVectorField& o);
  PolyVectorField& operator-=(const PolyVectorField& o);
  friend PolyVectorField operator+(PolyVectorField a, const PolyVectorField& b) { return a += b; }
  friend PolyVectorField operator-(PolyVectorField a, const PolyVectorField& b) { return a -= b; }
  friend PolyVectorField operator*(const Rational& s, PolyVectorField a);
  friend PolyVectorField operator*(const Polynomial& s, PolyVectorField a);
  friend bool operator==(const PolyVectorField& a, const PolyVectorField& b) = default;

 private:
  std::vector<Polynomial> components_;
};

void require_same_dimension(const PolyVectorField& a, const PolyVectorField& b);
/// Throws PreconditionError when the field exceeds `cap` (no-op for kNoDegreeCap).
void check_degree_cap(const PolyVectorField& x, int cap = kDegreeCap);

/// Components joined by " ; ".
std::string to_string(const PolyVectorField& x);
/// Components separated by ';' or newlines, '#' starts a comment. The
/// dimension is the number of components.
PolyVectorField parse_vector_field(std::string_view text, int params = 0);
PolyVectorField read_vector_field_file(const std::string& path);

/// (f_i∂_i)▷(g_j∂_j) = f_i(∂_i g_j)∂_j.
PolyVectorField vf_prelie(const PolyVectorField& x, const PolyVectorField& y, int cap = kDegreeCap);
/// X▷_O Y: the pre-Lie product with the coefficients of X frozen at O.
PolyVectorField vf_frozen_nap(const PolyVectorField& x, const PolyVectorField& y, const std::vector<Rational>& o,
                              int cap = kDegreeCap);
/// (τ_v X)(x) = X(x − v).
PolyVectorField translate(const PolyVectorField& x, const std::vector<Rational>& v);

/// d^k f_i(x)(v_1,...,v_k) with each v_m a full vector field.
Polynomial multilinear_differential(const Polynomial& f, const std::vector<const PolyVectorField*>& args);

enum class CayleyMethod { recursive, closed };

/// Elementary differential of a tree whose vertex colors index `fields`.
PolyVectorField cayley(const RootedTree& t, const std::vector<PolyVectorField>& fields,
                       CayleyMethod method = CayleyMethod::recursive, int cap = kDegreeCap);
/// Frozen variant: the branch values are evaluated at O before insertion.
PolyVectorField frozen_cayley(const RootedTree& t, const std::vector<PolyVectorField>& fields,
                              const std::vector<Rational>& o, CayleyMethod method = CayleyMethod::recursive,
                              int cap = kDegreeCap);

CayleyMethod parse_cayley_method(std::string_view name);

}  // namespace forestcalc

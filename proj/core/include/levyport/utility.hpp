#pragma once

#include "levyport/errors.hpp"

namespace levyport {

enum class UtilityFamily { Logarithmic, PowerMixture };

/// Terminal utility of wealth. Either ln(x), or the two-term power mixture
///   c1/(1-alpha) x^{1-alpha} + c2/(1-beta) x^{1-beta}
/// with c1, c2 >= 0 (not both zero) and alpha, beta > 0, != 1. Both families
/// are strictly increasing and concave on x > 0 with closed-form derivatives
/// up to order 4, which is all the expansion machinery consumes.
class UtilitySpec {
 public:
  static UtilitySpec logarithmic();
  static UtilitySpec power_mixture(double c1, double c2, double alpha, double beta);
  /// Single power term c1/(1-alpha) x^{1-alpha} (the Table-1 family is c1=1, alpha=3).
  static UtilitySpec single_power(double c1, double alpha);

  UtilityFamily family() const { return family_; }
  double c1() const { return c1_; }
  double c2() const { return c2_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

  /// order-th derivative of U_T at x, order in 0..4. Closed form per family.
  double derivative(double x, int order) const;

  double value(double x) const { return derivative(x, 0); }

  bool is_logarithmic() const { return family_ == UtilityFamily::Logarithmic; }
  /// True when the mixture degenerates to a single power c x^{1-alpha}.
  bool is_single_power() const;

 private:
  UtilitySpec() = default;
  UtilityFamily family_ = UtilityFamily::Logarithmic;
  double c1_ = 0.0;
  double c2_ = 0.0;
  double alpha_ = 0.0;
  double beta_ = 0.0;
};

/// The six utility ratios the first- and second-order formulas are written in:
/// r1 = U'/U'', r2 = [U']^2/U'' and their first two derivatives, all via the
/// closed-form identities (no numerical differentiation).
struct RatioBundle {
  double r1;      // U'/U''
  double r2;      // [U']^2 / U''
  double r1_d1;   // (U'/U'')'
  double r1_d2;   // (U'/U'')''
  double r2_d1;   // ([U']^2/U'')'
  double r2_d2;   // ([U']^2/U'')''
};

RatioBundle ratio_terms(const UtilitySpec& u, double x);

/// Growth envelope f(x): 1 for the logarithmic family, x^{1-alpha}+x^{1-beta}
/// for the power mixture. Strictly positive on x > 0.
double growth_f(const UtilitySpec& u, double x);
/// g(x) = U_T(x) + f(x) for the logarithmic family (= ln x + 1), and
/// g = f for the power mixture.
double growth_g(const UtilitySpec& u, double x);

/// First derivative of f, used by the super-/sub-solution partials.
double growth_f_d1(const UtilitySpec& u, double x);
double growth_f_d2(const UtilitySpec& u, double x);

}  // namespace levyport

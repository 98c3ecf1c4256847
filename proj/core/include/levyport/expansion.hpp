#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "levyport/levy.hpp"
#include "levyport/market.hpp"
#include "levyport/utility.hpp"

namespace levyport {

enum class ExpansionMode { FullIntegral, FirstOrderTaylor };

/// Log-spaced x grid over which the envelope sup is taken, plus the safety
/// inflation applied to the grid sup.
struct EnvelopeGrid {
  double x_lo = 1e-2;
  double x_hi = 1e6;
  int points = 241;
  double inflation = 1.10;
};

struct ExpansionConfig {
  ExpansionMode mode = ExpansionMode::FullIntegral;
  EnvelopeGrid envelope;
  std::int64_t inner_budget = 1'000'000;  // nested first-order evaluations per call
};

/// Partial derivatives of the first-order coefficient U^(1)(x, y).
struct U1Partials {
  double x;
  double xx;
  double y;
  double yy;
  double xy;
};

struct TaylorDiagnostic {
  double l_gamma = 0.0;       // L * gamma1_T(zeta)
  double ratio_limit = 0.0;   // |l_gamma| / 3, the geometric ratio of the series
  bool convergent = false;
  double fitted_rate = 0.0;   // empirical consecutive-term ratio (tail average)
  double closed_form = 0.0;   // c x^-2 / (1 + l_gamma/3)^2 when convergent, else NaN
  std::vector<double> terms;
  std::vector<double> partial_sums;
  std::vector<double> ratios;
  std::vector<double> remainder_estimates;
};

/// Small-time value expansion U_hat = U_T + (T-t) U^(1) for one (utility,
/// market, levy) model, plus the second-order machinery used to bound the
/// approximation error: the enumerated U^(2) addends and the envelope constant
/// u2bar = 1 + l * sup |u_i^(2)| / f.
class ValueExpansion {
 public:
  ValueExpansion(UtilitySpec utility, MarketSpec market, LevySpec levy, double horizon,
                 ExpansionConfig cfg = {});

  const UtilitySpec& utility() const { return utility_; }
  const MarketSpec& market() const { return market_; }
  const LevySpec& levy() const { return levy_; }
  double horizon() const { return horizon_; }
  const ExpansionConfig& config() const { return cfg_; }
  /// I = int gamma1_T dnu, cached at construction.
  double jump_moment() const { return moment1_; }

  /// chi_hat = x - [lambda(y) - I] (U'/U'') gamma1_T(zeta)
  double chi_hat(double x, double y, double zeta) const;

  double u1(double x, double y) const { return u1(x, y, cfg_.mode); }
  double u1(double x, double y, ExpansionMode mode) const;

  U1Partials u1_partials(double x, double y) const { return u1_partials(x, y, cfg_.mode); }
  U1Partials u1_partials(double x, double y, ExpansionMode mode) const;

  /// U^(2)(x, y), assembled from the ten enumerated addends (full-integral
  /// forms; the first-order-Taylor mode never enters the error machinery).
  double u2(double x, double y) const;
  /// The ten addends of U^(2) in a fixed order: the first block's three terms,
  /// the second block's two, the third block's four, and the closing L^2 term.
  std::array<double, 10> u2_terms(double x, double y) const;

  /// u2bar(y) = 1 + l * max_i sup_x |u_i^(2)(x,y)| / f(x), sup over the
  /// log-spaced grid, inflated by the configured margin.
  double envelope_constant(double y) const;

  /// U_hat(t,x,y) = U_T(x) + (T-t) U^(1)(x,y).
  double value_hat(double t, double x, double y) const { return value_hat(t, x, y, cfg_.mode); }
  double value_hat(double t, double x, double y, ExpansionMode mode) const;

  /// No-jump reference value U_T - (T-t) (lambda^2/2) [U']^2/U''.
  double value_reference(double t, double x, double y) const;

  /// pi_hat_T = [(-lambda + I)/sigma] U'/U''.
  double optimal_portfolio_terminal(double x, double y) const;

  /// First-order-condition portfolio from candidate partials:
  /// [-lambda V_x - rho a V_xy]/(sigma V_xx) + V_x/(sigma V_xx) int gamma1(t,.) dnu.
  double portfolio_from_value(double v_x, double v_xx, double v_xy, double t, double y) const;

  /// Partial sums, term ratios and remainder estimates of the series expansion
  /// of U_T(chi_hat) for the single-power family U_T = c x^{-2}.
  TaylorDiagnostic taylor_remainder_diagnostic(double x, double y, double zeta, int n_max) const;

  /// Super-/sub-solution values U_hat +/- (T-t)^2 u2bar f(x) with a caller
  /// supplied envelope constant (so a residual grid can reuse one computation).
  double enveloped_value(double t, double x, double y, double u2bar, double sign) const;

 private:
  struct Budget {
    std::int64_t remaining;
  };
  double u1_full(double x, double y, Budget* budget) const;
  std::array<double, 10> u2_terms_impl(double x, double y, Budget* budget) const;

  UtilitySpec utility_;
  MarketSpec market_;
  LevySpec levy_;
  double horizon_;
  ExpansionConfig cfg_;
  double moment1_ = 0.0;        // int gamma1_T dnu
  double moment1_slope_ = 0.0;  // int gamma1^(1) dnu
};

}  // namespace levyport

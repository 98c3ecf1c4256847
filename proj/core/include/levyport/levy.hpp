#pragma once

#include <functional>
#include <limits>
#include <string>

#include "levyport/errors.hpp"
#include "levyport/quadrature.hpp"

namespace levyport {

enum class MeasureKind { Gamma, InverseGaussian, TruncatedCustom };

struct QuadratureConfig {
  enum class Scheme { GaussLaguerreMapped, AdaptiveTruncated };
  Scheme scheme = Scheme::GaussLaguerreMapped;
  int nodes = 64;
  double eps0 = 1e-12;   // lower cut for the adaptive scheme
  double zmax = 60.0;    // upper cut; doubles as a model truncation when set low
  double rel_tol = 1e-9;
};

/// Jump-amplitude rule zeta -> real. The density-matched kinds reproduce the
/// Gamma / inverse-Gaussian constructions whose first moment against the
/// matching measure is exactly one.
class Amplitude {
 public:
  enum class Kind { Zero, GammaDensityMatched, IgDensityMatched, Power, Constant, BoundedLinear, Custom };

  static Amplitude zero();
  static Amplitude gamma_density_matched();
  static Amplitude ig_density_matched();
  /// coeff * zeta^exponent, exponent > 0
  static Amplitude power(double coeff, double exponent);
  static Amplitude constant(double v);
  /// scale * (1 - e^{-zeta}): vanishes linearly at 0, bounded by scale
  static Amplitude bounded_linear(double scale);
  static Amplitude custom(std::function<double(double)> rule);

  Kind kind() const { return kind_; }
  double coeff() const { return coeff_; }
  double exponent() const { return exponent_; }
  const std::function<double(double)>& rule() const { return rule_; }

 private:
  Kind kind_ = Kind::Zero;
  double coeff_ = 0.0;
  double exponent_ = 1.0;
  std::function<double(double)> rule_;
};

/// Levy measure on (0, inf) together with the jump-amplitude families
/// gamma1_T (wealth), gamma2_T (factor) and the first time-expansion
/// coefficient gamma1^(1), all frozen at the terminal time T.
class LevySpec {
 public:
  static LevySpec gamma_measure(double kappa, double theta, double horizon,
                                Amplitude gamma1 = Amplitude::gamma_density_matched(),
                                Amplitude gamma2 = Amplitude::zero(),
                                Amplitude gamma1_slope = Amplitude::zero(),
                                QuadratureConfig quad = {});
  static LevySpec inverse_gaussian_measure(double m, double n, double horizon,
                                           Amplitude gamma1 = Amplitude::ig_density_matched(),
                                           Amplitude gamma2 = Amplitude::zero(),
                                           Amplitude gamma1_slope = Amplitude::zero(),
                                           QuadratureConfig quad = {});
  /// Custom density on [support_lo, support_hi]. The caller must vouch that
  /// either the measure has finite activity or every integrand it supplies
  /// vanishes fast enough at the support edges; the engine does not prove
  /// integrability.
  static LevySpec truncated_custom(std::function<double(double)> density, double support_lo,
                                   double support_hi, bool integrability_certificate,
                                   Amplitude gamma1, Amplitude gamma2 = Amplitude::zero(),
                                   Amplitude gamma1_slope = Amplitude::zero(),
                                   QuadratureConfig quad = {});

  /// Degenerate no-jump spec (zero amplitudes over a unit-mass dummy measure).
  static LevySpec none(double horizon = 1.0);

  MeasureKind measure_kind() const { return kind_; }
  double horizon() const { return horizon_; }
  const QuadratureConfig& quad() const { return quad_; }

  double density(double zeta) const;
  /// zeta * density(zeta); finite at the origin for the named measures' scale.
  double density_times_z(double zeta) const;

  double gamma1(double zeta) const;        // gamma1_T
  double gamma2(double zeta) const;        // gamma2_T
  double gamma1_slope(double zeta) const;  // gamma1^(1)
  /// gamma1 at running time t: gamma1_T + (T - t) gamma1^(1)
  double gamma1_at(double t, double zeta) const;

  bool has_wealth_jumps() const { return gamma1_.kind() != Amplitude::Kind::Zero; }
  bool has_factor_jumps() const { return gamma2_.kind() != Amplitude::Kind::Zero; }
  bool has_gamma1_slope() const { return gamma1_slope_.kind() != Amplitude::Kind::Zero; }

  /// I = int gamma1_T dnu. Exactly 1 for the two density-matched pairs and 0
  /// for the zero amplitude; otherwise evaluated numerically.
  double first_moment() const;
  /// int gamma1(t, .) dnu = I + (T - t) int gamma1^(1) dnu.
  double first_moment_at(double t) const;

  /// int f dnu over the configured support/cuts, to quad.rel_tol. The
  /// Gauss-Laguerre scheme cross-checks two rule sizes and falls back to
  /// adaptive bisection on disagreement.
  double integrate(const std::function<double(double)>& f) const;

  /// int f dnu restricted to (lo, hi], always via the adaptive rule.
  double integrate_range(const std::function<double(double)>& f, double lo, double hi) const;

  double support_lo() const { return support_lo_; }
  double support_hi() const { return support_hi_; }

 private:
  LevySpec() = default;
  void bind_amplitudes();

  MeasureKind kind_ = MeasureKind::TruncatedCustom;
  double horizon_ = 1.0;
  double kappa_ = 0.0, theta_ = 0.0;  // Gamma
  double m_ = 0.0, n_ = 0.0;          // inverse Gaussian
  std::function<double(double)> custom_density_;
  double support_lo_ = 0.0;
  double support_hi_ = std::numeric_limits<double>::infinity();
  Amplitude gamma1_ = Amplitude::zero();
  Amplitude gamma2_ = Amplitude::zero();
  Amplitude gamma1_slope_ = Amplitude::zero();
  std::function<double(double)> gamma1_fn_, gamma2_fn_, gamma1_slope_fn_;
  QuadratureConfig quad_;
  bool degenerate_ = false;
};

}  // namespace levyport

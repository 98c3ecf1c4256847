#include "levyport/levy.hpp"

#include <cmath>
#include <limits>

namespace levyport {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

Amplitude Amplitude::zero() { return Amplitude{}; }

Amplitude Amplitude::gamma_density_matched() {
  Amplitude a;
  a.kind_ = Kind::GammaDensityMatched;
  return a;
}

Amplitude Amplitude::ig_density_matched() {
  Amplitude a;
  a.kind_ = Kind::IgDensityMatched;
  return a;
}

Amplitude Amplitude::power(double coeff, double exponent) {
  if (!(exponent > 0.0)) throw DomainError("amplitude: power exponent must be > 0");
  Amplitude a;
  a.kind_ = Kind::Power;
  a.coeff_ = coeff;
  a.exponent_ = exponent;
  return a;
}

Amplitude Amplitude::constant(double v) {
  Amplitude a;
  a.kind_ = Kind::Constant;
  a.coeff_ = v;
  return a;
}

Amplitude Amplitude::bounded_linear(double scale) {
  Amplitude a;
  a.kind_ = Kind::BoundedLinear;
  a.coeff_ = scale;
  return a;
}

Amplitude Amplitude::custom(std::function<double(double)> rule) {
  Amplitude a;
  a.kind_ = Kind::Custom;
  a.rule_ = std::move(rule);
  return a;
}

LevySpec LevySpec::gamma_measure(double kappa, double theta, double horizon, Amplitude gamma1,
                                 Amplitude gamma2, Amplitude gamma1_slope, QuadratureConfig quad) {
  if (!(kappa > 0.0) || !(theta > 0.0)) throw DomainError("levy: gamma measure needs kappa, theta > 0");
  if (!(horizon > 0.0)) throw DomainError("levy: horizon must be > 0");
  LevySpec l;
  l.kind_ = MeasureKind::Gamma;
  l.kappa_ = kappa;
  l.theta_ = theta;
  l.horizon_ = horizon;
  l.gamma1_ = std::move(gamma1);
  l.gamma2_ = std::move(gamma2);
  l.gamma1_slope_ = std::move(gamma1_slope);
  l.quad_ = quad;
  l.bind_amplitudes();
  return l;
}

LevySpec LevySpec::inverse_gaussian_measure(double m, double n, double horizon, Amplitude gamma1,
                                            Amplitude gamma2, Amplitude gamma1_slope,
                                            QuadratureConfig quad) {
  if (!(m > 0.0) || !(n > 0.0)) throw DomainError("levy: inverse-Gaussian measure needs m, n > 0");
  if (!(horizon > 0.0)) throw DomainError("levy: horizon must be > 0");
  LevySpec l;
  l.kind_ = MeasureKind::InverseGaussian;
  l.m_ = m;
  l.n_ = n;
  l.horizon_ = horizon;
  l.gamma1_ = std::move(gamma1);
  l.gamma2_ = std::move(gamma2);
  l.gamma1_slope_ = std::move(gamma1_slope);
  l.quad_ = quad;
  l.bind_amplitudes();
  return l;
}

LevySpec LevySpec::truncated_custom(std::function<double(double)> density, double support_lo,
                                    double support_hi, bool integrability_certificate,
                                    Amplitude gamma1, Amplitude gamma2, Amplitude gamma1_slope,
                                    QuadratureConfig quad) {
  if (!integrability_certificate)
    throw DomainError("levy: custom measures must declare an integrability certificate");
  if (!(support_hi > support_lo) || support_lo < 0.0)
    throw DomainError("levy: custom support must satisfy 0 <= lo < hi");
  LevySpec l;
  l.kind_ = MeasureKind::TruncatedCustom;
  l.custom_density_ = std::move(density);
  l.support_lo_ = support_lo;
  l.support_hi_ = support_hi;
  l.horizon_ = 1.0;
  l.gamma1_ = std::move(gamma1);
  l.gamma2_ = std::move(gamma2);
  l.gamma1_slope_ = std::move(gamma1_slope);
  l.quad_ = quad;
  l.bind_amplitudes();
  return l;
}

LevySpec LevySpec::none(double horizon) {
  LevySpec l;
  l.kind_ = MeasureKind::TruncatedCustom;
  l.custom_density_ = [](double) { return 0.0; };
  l.support_lo_ = 0.0;
  l.support_hi_ = 1.0;
  l.horizon_ = horizon;
  l.degenerate_ = true;
  l.bind_amplitudes();
  return l;
}

void LevySpec::bind_amplitudes() {
  auto bind = [this](const Amplitude& a) -> std::function<double(double)> {
    switch (a.kind()) {
      case Amplitude::Kind::Zero:
        return [](double) { return 0.0; };
      case Amplitude::Kind::GammaDensityMatched: {
        if (kind_ != MeasureKind::Gamma)
          throw DomainError("levy: gamma-density-matched amplitude requires the gamma measure");
        const double s = horizon_ * kappa_;
        const double c = std::pow(theta_, s) / (kappa_ * std::tgamma(s));
        return [c, s](double z) { return c * std::pow(z, s); };
      }
      case Amplitude::Kind::IgDensityMatched: {
        if (kind_ != MeasureKind::InverseGaussian)
          throw DomainError("levy: ig-density-matched amplitude requires the inverse-Gaussian measure");
        const double c = std::exp(m_ * n_ * horizon_);
        const double h = 0.5 * n_ * n_ * horizon_ * horizon_;
        return [c, h](double z) { return z > 0.0 ? c * std::exp(-h / z) : 0.0; };
      }
      case Amplitude::Kind::Power: {
        const double c = a.coeff(), p = a.exponent();
        return [c, p](double z) { return c * std::pow(z, p); };
      }
      case Amplitude::Kind::Constant: {
        const double c = a.coeff();
        return [c](double) { return c; };
      }
      case Amplitude::Kind::BoundedLinear: {
        const double c = a.coeff();
        return [c](double z) { return c * -std::expm1(-z); };
      }
      case Amplitude::Kind::Custom:
        return a.rule();
    }
    throw DomainError("levy: unknown amplitude kind");
  };
  gamma1_fn_ = bind(gamma1_);
  gamma2_fn_ = bind(gamma2_);
  gamma1_slope_fn_ = bind(gamma1_slope_);
}

double LevySpec::density(double zeta) const {
  if (!(zeta > 0.0)) return 0.0;
  switch (kind_) {
    case MeasureKind::Gamma:
      return kappa_ / zeta * std::exp(-theta_ * zeta);
    case MeasureKind::InverseGaussian:
      return n_ * horizon_ * std::sqrt(1.0 / (kTwoPi * zeta * zeta * zeta)) *
             std::exp(-0.5 * m_ * m_ * zeta);
    case MeasureKind::TruncatedCustom:
      if (zeta <= support_lo_ || zeta >= support_hi_) return 0.0;
      return custom_density_(zeta);
  }
  return 0.0;
}

double LevySpec::density_times_z(double zeta) const {
  switch (kind_) {
    case MeasureKind::Gamma:
      return kappa_ * std::exp(-theta_ * zeta);
    case MeasureKind::InverseGaussian:
      return n_ * horizon_ * std::sqrt(1.0 / (kTwoPi * zeta)) * std::exp(-0.5 * m_ * m_ * zeta);
    case MeasureKind::TruncatedCustom:
      if (zeta <= support_lo_ || zeta >= support_hi_) return 0.0;
      return zeta * custom_density_(zeta);
  }
  return 0.0;
}

double LevySpec::gamma1(double zeta) const { return gamma1_fn_(zeta); }
double LevySpec::gamma2(double zeta) const { return gamma2_fn_(zeta); }
double LevySpec::gamma1_slope(double zeta) const { return gamma1_slope_fn_(zeta); }

double LevySpec::gamma1_at(double t, double zeta) const {
  if (gamma1_slope_.kind() == Amplitude::Kind::Zero) return gamma1_fn_(zeta);
  return gamma1_fn_(zeta) + (horizon_ - t) * gamma1_slope_fn_(zeta);
}

double LevySpec::first_moment() const {
  if (degenerate_ || gamma1_.kind() == Amplitude::Kind::Zero) return 0.0;
  if (gamma1_.kind() == Amplitude::Kind::GammaDensityMatched ||
      gamma1_.kind() == Amplitude::Kind::IgDensityMatched)
    return 1.0;  // the amplitude is the measure's density renormalizer
  return integrate(gamma1_fn_);
}

double LevySpec::first_moment_at(double t) const {
  double moment = first_moment();
  if (gamma1_slope_.kind() != Amplitude::Kind::Zero)
    moment += (horizon_ - t) * integrate(gamma1_slope_fn_);
  return moment;
}

double LevySpec::integrate(const std::function<double(double)>& f) const {
  if (degenerate_) return 0.0;
  if (quad_.scheme == QuadratureConfig::Scheme::GaussLaguerreMapped &&
      kind_ != MeasureKind::TruncatedCustom) {
    // Map the exponential factor of the density onto the Gauss-Laguerre weight:
    // Gamma: u = theta*zeta, int f dnu = kappa sum w_i f(u_i/theta)/u_i
    // IG:    u = m^2 zeta/2, int f dnu = sum w_i nT (2 pi z_i^3)^{-1/2} f(z_i)/s
    auto apply = [this, &f](const GaussLaguerreRule& rule) {
      double acc = 0.0;
      if (kind_ == MeasureKind::Gamma) {
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
          const double u = rule.nodes[i];
          acc += rule.weights[i] * kappa_ * f(u / theta_) / u;
        }
      } else {
        const double s = 0.5 * m_ * m_;
        const double c = n_ * horizon_;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
          const double z = rule.nodes[i] / s;
          acc += rule.weights[i] * c * std::sqrt(1.0 / (kTwoPi * z * z * z)) * f(z) / s;
        }
      }
      return acc;
    };
    const double coarse = apply(gauss_laguerre(quad_.nodes));
    const double fine = apply(gauss_laguerre(2 * quad_.nodes));
    const double scale = std::max({std::abs(coarse), std::abs(fine), 1e-300});
    if (std::isfinite(coarse) && std::isfinite(fine) &&
        std::abs(fine - coarse) <= quad_.rel_tol * scale)
      return fine;
    // Rule sizes disagree: fall back to adaptive bisection.
  }
  return integrate_range(f, support_lo_, support_hi_);
}

double LevySpec::integrate_range(const std::function<double(double)>& f, double lo,
                                 double hi) const {
  if (degenerate_) return 0.0;
  lo = std::max({lo, support_lo_, quad_.eps0});
  hi = std::min({hi, support_hi_, quad_.zmax});
  if (!(hi > lo)) return 0.0;
  // Integrate in v = ln(zeta): zeta * density stays bounded for the named
  // measures, and power-vanishing integrands decay exponentially as v -> -inf.
  AdaptiveOptions opt;
  opt.rel_tol = quad_.rel_tol;
  opt.max_intervals = 4000;
  auto integrand = [this, &f](double v) {
    const double z = std::exp(v);
    return f(z) * density_times_z(z);
  };
  return integrate_adaptive(integrand, std::log(lo), std::log(hi), opt);
}

}  // namespace levyport

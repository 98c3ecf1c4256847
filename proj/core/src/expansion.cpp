#include "levyport/expansion.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace levyport {

namespace {

void require_positive_x(double x) {
  if (!(x > 0.0)) throw DomainError("expansion: x must be > 0");
}

}  // namespace

ValueExpansion::ValueExpansion(UtilitySpec utility, MarketSpec market, LevySpec levy,
                               double horizon, ExpansionConfig cfg)
    : utility_(std::move(utility)),
      market_(std::move(market)),
      levy_(std::move(levy)),
      horizon_(horizon),
      cfg_(cfg) {
  if (!(horizon_ > 0.0)) throw DomainError("expansion: horizon must be > 0");
  moment1_ = levy_.first_moment();
  moment1_slope_ = levy_.has_gamma1_slope()
                       ? levy_.integrate([this](double z) { return levy_.gamma1_slope(z); })
                       : 0.0;
}

double ValueExpansion::chi_hat(double x, double y, double zeta) const {
  require_positive_x(x);
  const double L = market_.lambda(y) - moment1_;
  const RatioBundle r = ratio_terms(utility_, x);
  return x - L * r.r1 * levy_.gamma1(zeta);
}

double ValueExpansion::u1(double x, double y, ExpansionMode mode) const {
  require_positive_x(x);
  if (mode == ExpansionMode::FirstOrderTaylor) {
    const double lam = market_.lambda(y);
    const RatioBundle r = ratio_terms(utility_, x);
    return 0.5 * (-lam * lam + moment1_ * moment1_) * r.r2;
  }
  Budget budget{cfg_.inner_budget};
  return u1_full(x, y, &budget);
}

double ValueExpansion::u1_full(double x, double y, Budget* budget) const {
  if (budget) {
    if (--budget->remaining < 0)
      throw ResourceError("expansion: nested quadrature budget exhausted");
  }
  const double lam = market_.lambda(y);
  const double L = lam - moment1_;
  const RatioBundle r = ratio_terms(utility_, x);
  const double closed = 0.5 * (-lam * lam + moment1_ * moment1_) * r.r2;
  if (!levy_.has_wealth_jumps()) return closed;

  const double ux = utility_.value(x);
  auto integrand = [&](double zeta) {
    const double g = levy_.gamma1(zeta);
    const double chi = x - L * r.r1 * g;
    if (!(chi > 0.0))
      throw DomainError("expansion: chi_hat <= 0 at zeta=" + std::to_string(zeta) +
                        "; truncate the measure (quad.zmax) or use FirstOrderTaylor mode");
    return utility_.value(chi) - ux + L * r.r2 * g;
  };
  return closed + levy_.integrate(integrand);
}

U1Partials ValueExpansion::u1_partials(double x, double y, ExpansionMode mode) const {
  require_positive_x(x);
  const double lam = market_.lambda(y);
  const double lam1 = market_.lambda_d1(y);
  const double lam2 = market_.lambda_d2(y);
  const double I = moment1_;
  const double L = lam - I;
  const RatioBundle r = ratio_terms(utility_, x);
  const double msq = -lam * lam + I * I;

  U1Partials p;
  // The y-partials only involve the first moment of gamma1_T, so they are
  // closed-form in both modes; the first-order-Taylor collapse drops the
  // moment term from the y-derivatives as well.
  if (mode == ExpansionMode::FirstOrderTaylor) {
    p.x = 0.5 * msq * r.r2_d1;
    p.xx = 0.5 * msq * r.r2_d2;
    p.y = -lam * lam1 * r.r2;
    p.yy = -(lam1 * lam1 + lam * lam2) * r.r2;
    p.xy = -lam * lam1 * r.r2_d1;
    return p;
  }

  p.y = -lam * lam1 * r.r2 + lam1 * r.r2 * I;
  p.yy = -(lam1 * lam1 + lam * lam2) * r.r2 + lam2 * r.r2 * I;
  p.xy = -lam * lam1 * r.r2_d1 + lam1 * r.r2_d1 * I;

  const double closed_x = 0.5 * msq * r.r2_d1;
  const double closed_xx = 0.5 * msq * r.r2_d2;
  if (!levy_.has_wealth_jumps()) {
    p.x = closed_x;
    p.xx = closed_xx;
    return p;
  }

  const double u1x = utility_.derivative(x, 1);
  const double u2x = utility_.derivative(x, 2);
  auto chi_of = [&](double g) { return x - L * r.r1 * g; };
  auto check = [&](double chi, double zeta) {
    if (!(chi > 0.0))
      throw DomainError("expansion: chi_hat <= 0 at zeta=" + std::to_string(zeta) +
                        "; truncate the measure (quad.zmax) or use FirstOrderTaylor mode");
  };

  p.x = closed_x + levy_.integrate([&](double zeta) {
          const double g = levy_.gamma1(zeta);
          const double chi = chi_of(g);
          check(chi, zeta);
          const double jac = 1.0 - L * r.r1_d1 * g;
          return utility_.derivative(chi, 1) * jac - u1x + L * r.r2_d1 * g;
        });
  p.xx = closed_xx + levy_.integrate([&](double zeta) {
           const double g = levy_.gamma1(zeta);
           const double chi = chi_of(g);
           check(chi, zeta);
           const double jac = 1.0 - L * r.r1_d1 * g;
           return utility_.derivative(chi, 2) * jac * jac -
                  L * utility_.derivative(chi, 1) * r.r1_d2 * g - u2x + L * r.r2_d2 * g;
         });
  return p;
}

std::array<double, 10> ValueExpansion::u2_terms(double x, double y) const {
  Budget budget{cfg_.inner_budget};
  return u2_terms_impl(x, y, &budget);
}

std::array<double, 10> ValueExpansion::u2_terms_impl(double x, double y, Budget* budget) const {
  require_positive_x(x);
  const CoefficientBundle mk = market_.eval(y);
  const double I = moment1_;
  const double L = mk.lambda - I;
  const RatioBundle r = ratio_terms(utility_, x);
  const double u2x = utility_.derivative(x, 2);

  const double u1_here = u1_full(x, y, budget);
  const U1Partials p = u1_partials(x, y, ExpansionMode::FullIntegral);

  std::array<double, 10> t{};
  // Block 1: 1/2 [ b U1_y + 1/2 a^2 U1_yy + int (U1(chi,psi) - U1 - U1_y gamma2) ]
  t[0] = 0.5 * mk.b * p.y;
  t[1] = 0.25 * mk.a * mk.a * p.yy;
  if (levy_.has_wealth_jumps() || levy_.has_factor_jumps()) {
    t[2] = 0.5 * levy_.integrate([&](double zeta) {
      const double g1 = levy_.gamma1(zeta);
      const double g2 = levy_.gamma2(zeta);
      const double chi = x - L * r.r1 * g1;
      if (!(chi > 0.0))
        throw DomainError("expansion: chi_hat <= 0 at zeta=" + std::to_string(zeta));
      return u1_full(chi, y + g2, budget) - u1_here - p.y * g2;
    });
  }
  // Block 2: (U1_xx / U_T'') [ -U1 + int (U_T(chi) - U_T(x)) ]
  t[3] = (p.xx / u2x) * (-u1_here);
  if (levy_.has_wealth_jumps()) {
    const double ux = utility_.value(x);
    t[4] = (p.xx / u2x) * levy_.integrate([&](double zeta) {
             const double chi = x - L * r.r1 * levy_.gamma1(zeta);
             if (!(chi > 0.0))
               throw DomainError("expansion: chi_hat <= 0 at zeta=" + std::to_string(zeta));
             return utility_.value(chi) - ux;
           });
  }
  // Block 3: (L/2)(U'/U'') [ -lambda U1_x - rho a U1_xy + int (U1_x gamma1 + U' gamma1^(1)) ]
  const double half_L_r1 = 0.5 * L * r.r1;
  t[5] = half_L_r1 * (-mk.lambda * p.x);
  t[6] = half_L_r1 * (-mk.rho * mk.a * p.xy);
  t[7] = half_L_r1 * (p.x * I);
  t[8] = half_L_r1 * (utility_.derivative(x, 1) * moment1_slope_);
  // Closing term: -(L^2/4)(U1_xx / U_T'') ([U']^2 / U'')
  t[9] = -0.25 * L * L * (p.xx / u2x) * r.r2;
  return t;
}

double ValueExpansion::u2(double x, double y) const {
  const auto terms = u2_terms(x, y);
  double s = 0.0;
  for (double v : terms) s += v;
  return s;
}

double ValueExpansion::envelope_constant(double y) const {
  const EnvelopeGrid& g = cfg_.envelope;
  if (g.points < 1) throw DomainError("expansion: envelope grid must be non-empty");
  Budget budget{cfg_.inner_budget};
  const double log_lo = std::log(g.x_lo);
  const double log_hi = std::log(g.x_hi);
  double worst = 0.0;
  for (int i = 0; i < g.points; ++i) {
    const double frac = g.points == 1 ? 0.0 : static_cast<double>(i) / (g.points - 1);
    const double x = std::exp(log_lo + frac * (log_hi - log_lo));
    const double fx = growth_f(utility_, x);
    const auto terms = u2_terms_impl(x, y, &budget);
    for (int k = 0; k < 10; ++k) {
      const double ratio = std::abs(terms[k]) / fx;
      if (!std::isfinite(ratio))
        throw EnvelopeError("expansion: non-finite envelope term u_" + std::to_string(k + 1) +
                                " at x=" + std::to_string(x),
                            k, x);
      if (ratio > worst) worst = ratio;
    }
  }
  return 1.0 + 10.0 * (g.inflation * worst);
}

double ValueExpansion::value_hat(double t, double x, double y, ExpansionMode mode) const {
  if (t < 0.0 || t > horizon_) throw DomainError("expansion: t must lie in [0, T]");
  require_positive_x(x);
  if (t == horizon_) return utility_.value(x);
  return utility_.value(x) + (horizon_ - t) * u1(x, y, mode);
}

double ValueExpansion::value_reference(double t, double x, double y) const {
  if (t < 0.0 || t > horizon_) throw DomainError("expansion: t must lie in [0, T]");
  require_positive_x(x);
  const double lam = market_.lambda(y);
  const RatioBundle r = ratio_terms(utility_, x);
  return utility_.value(x) - (horizon_ - t) * 0.5 * lam * lam * r.r2;
}

double ValueExpansion::optimal_portfolio_terminal(double x, double y) const {
  require_positive_x(x);
  const double lam = market_.lambda(y);
  const double sig = market_.sigma(y);
  const RatioBundle r = ratio_terms(utility_, x);
  return (-lam + moment1_) / sig * r.r1;
}

double ValueExpansion::portfolio_from_value(double v_x, double v_xx, double v_xy, double t,
                                            double y) const {
  if (!(v_xx < 0.0)) throw NonConcavityError("portfolio: V_xx must be < 0");
  const CoefficientBundle mk = market_.eval(y);
  const double moment_t = levy_.first_moment_at(t);
  return (-mk.lambda * v_x - mk.rho * mk.a * v_xy) / (mk.sigma * v_xx) +
         v_x / (mk.sigma * v_xx) * moment_t;
}

TaylorDiagnostic ValueExpansion::taylor_remainder_diagnostic(double x, double y, double zeta,
                                                             int n_max) const {
  require_positive_x(x);
  if (!utility_.is_single_power() || utility_.alpha() != 3.0)
    throw DomainError("taylor diagnostic: requires the single-power family U_T = c x^{-2}");
  if (n_max < 1) throw DomainError("taylor diagnostic: n_max must be >= 1");

  const double c = -0.5 * utility_.c1();  // U_T = c1/(1-3) x^{-2} = c x^{-2}
  const double L = market_.lambda(y) - moment1_;
  const double lg = L * levy_.gamma1(zeta);
  const double ratio = -lg / 3.0;
  const double base = c / (x * x);

  TaylorDiagnostic d;
  d.l_gamma = lg;
  d.ratio_limit = std::abs(ratio);
  d.convergent = std::abs(lg) < 3.0;
  d.terms.reserve(n_max + 1);
  d.partial_sums.reserve(n_max + 1);
  double sum = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    const double term = (n + 1) * std::pow(ratio, n) * base;
    sum += term;
    d.terms.push_back(term);
    d.partial_sums.push_back(sum);
    if (n >= 1 && d.terms[n - 1] != 0.0) d.ratios.push_back(std::abs(term / d.terms[n - 1]));
    if (d.convergent && d.ratio_limit < 1.0) {
      const double next = (n + 2) * std::pow(std::abs(ratio), n + 1) * std::abs(base);
      d.remainder_estimates.push_back(next / (1.0 - d.ratio_limit));
    }
  }
  if (!d.ratios.empty()) {
    const std::size_t tail = d.ratios.size() >= 5 ? 5 : d.ratios.size();
    double acc = 0.0;
    for (std::size_t i = d.ratios.size() - tail; i < d.ratios.size(); ++i) acc += d.ratios[i];
    d.fitted_rate = acc / tail;
  }
  d.closed_form = d.convergent && std::abs(ratio) < 1.0
                      ? base / ((1.0 - ratio) * (1.0 - ratio))
                      : std::numeric_limits<double>::quiet_NaN();
  return d;
}

double ValueExpansion::enveloped_value(double t, double x, double y, double u2bar,
                                       double sign) const {
  const double delta = horizon_ - t;
  return value_hat(t, x, y, ExpansionMode::FullIntegral) +
         sign * delta * delta * u2bar * growth_f(utility_, x);
}

}  // namespace levyport

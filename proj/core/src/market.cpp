#include "levyport/market.hpp"

#include <cmath>

namespace levyport {

ScalarField ScalarField::constant(double v) {
  return ScalarField([v](double) { return v; }, [](double) { return 0.0; },
                     [](double) { return 0.0; }, "constant");
}

ScalarField ScalarField::linear(double intercept, double slope) {
  return ScalarField([=](double y) { return intercept + slope * y; },
                     [=](double) { return slope; }, [](double) { return 0.0; }, "linear");
}

ScalarField ScalarField::power(double coeff, double exponent) {
  const bool needs_positive = !(exponent >= 0.0 && exponent == std::floor(exponent));
  auto guard = [needs_positive](double y) {
    if (needs_positive && !(y > 0.0))
      throw DomainError("power field: y must be > 0 for non-integer exponent");
  };
  return ScalarField(
      [=](double y) {
        guard(y);
        return coeff * std::pow(y, exponent);
      },
      [=](double y) {
        guard(y);
        return coeff * exponent * std::pow(y, exponent - 1.0);
      },
      [=](double y) {
        guard(y);
        return coeff * exponent * (exponent - 1.0) * std::pow(y, exponent - 2.0);
      },
      "power");
}

ScalarField ScalarField::sinusoid(double offset, double amp, double freq) {
  return ScalarField([=](double y) { return offset + amp * std::sin(freq * y); },
                     [=](double y) { return amp * freq * std::cos(freq * y); },
                     [=](double y) { return -amp * freq * freq * std::sin(freq * y); },
                     "sinusoid");
}

MarketSpec::MarketSpec(ScalarField lambda, ScalarField sigma, ScalarField a, ScalarField b,
                       double rho, double interest_rate)
    : lambda_(std::move(lambda)),
      sigma_(std::move(sigma)),
      a_(std::move(a)),
      b_(std::move(b)),
      rho_(rho),
      rate_(interest_rate) {
  if (!(std::abs(rho_) < 1.0)) throw DomainError("market: |rho| must be < 1");
  if (!lambda_.valid() || !sigma_.valid() || !a_.valid() || !b_.valid())
    throw DomainError("market: all coefficient fields must be set");
}

double MarketSpec::sigma(double y) const {
  const double s = sigma_(y);
  if (!(s > 0.0)) throw DomainError("market: sigma(y) must be > 0");
  return s;
}

double MarketSpec::a(double y) const {
  const double v = a_(y);
  if (v < 0.0) throw DomainError("market: a(y) must be >= 0");
  return v;
}

CoefficientBundle MarketSpec::eval(double y) const {
  CoefficientBundle c;
  c.lambda = lambda_(y);
  c.lambda_d1 = lambda_.d1(y);
  c.lambda_d2 = lambda_.d2(y);
  c.sigma = sigma(y);
  c.a = a_(y);
  c.b = b_(y);
  c.rho = rho_;
  return c;
}

bool MarketSpec::lambda_is_constant(std::span<const double> probe_grid) const {
  for (double y : probe_grid) {
    if (lambda_.d1(y) != 0.0 || lambda_.d2(y) != 0.0) return false;
  }
  return true;
}

void MarketSpec::validate_on_grid(std::span<const double> grid) const {
  for (double y : grid) {
    const CoefficientBundle c = eval(y);
    if (!std::isfinite(c.lambda) || !std::isfinite(c.lambda_d1) || !std::isfinite(c.lambda_d2))
      throw DomainError("market: lambda or its derivatives non-finite at y=" + std::to_string(y));
    if (!std::isfinite(c.b)) throw DomainError("market: b non-finite at y=" + std::to_string(y));
    if (!(c.sigma > 0.0) || !std::isfinite(c.sigma))
      throw DomainError("market: sigma must be finite and > 0 at y=" + std::to_string(y));
    if (!std::isfinite(c.a)) throw DomainError("market: a non-finite at y=" + std::to_string(y));
    if (c.a > 0.0 && !std::isfinite(1.0 / c.a))
      throw DomainError("market: 1/a non-finite at y=" + std::to_string(y));
  }
}

}  // namespace levyport

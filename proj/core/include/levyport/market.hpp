#pragma once

#include <functional>
#include <span>
#include <string>

#include "levyport/errors.hpp"

namespace levyport {

/// A scalar coefficient function of the stochastic factor y with closed-form
/// first and second derivatives. The expansion needs lambda', lambda'' exactly,
/// so fields carry analytic derivative rules rather than being differentiated
/// numerically.
class ScalarField {
 public:
  ScalarField() = default;
  ScalarField(std::function<double(double)> f, std::function<double(double)> d1,
              std::function<double(double)> d2, std::string name = "custom")
      : f_(std::move(f)), d1_(std::move(d1)), d2_(std::move(d2)), name_(std::move(name)) {}

  static ScalarField constant(double v);
  static ScalarField linear(double intercept, double slope);
  /// coeff * y^exponent, domain y > 0 when the exponent is not a nonnegative integer.
  static ScalarField power(double coeff, double exponent);
  /// offset + amp * sin(freq * y): bounded with bounded derivatives.
  static ScalarField sinusoid(double offset, double amp, double freq);

  double operator()(double y) const { return f_(y); }
  double d1(double y) const { return d1_(y); }
  double d2(double y) const { return d2_(y); }
  const std::string& name() const { return name_; }

  bool valid() const { return static_cast<bool>(f_); }

 private:
  std::function<double(double)> f_;
  std::function<double(double)> d1_;
  std::function<double(double)> d2_;
  std::string name_;
};

/// Model coefficients at a fixed factor value y.
struct CoefficientBundle {
  double lambda;
  double lambda_d1;
  double lambda_d2;
  double sigma;
  double a;
  double b;
  double rho;
};

/// Market coefficient functions of Assumption-2.1 shape: market price of risk
/// lambda(y) (with derivatives), volatility sigma(y) > 0, factor volatility
/// a(y) > 0, factor drift b(y), correlation |rho| < 1. The interest rate is
/// recorded but lambda already folds it in.
class MarketSpec {
 public:
  MarketSpec(ScalarField lambda, ScalarField sigma, ScalarField a, ScalarField b,
             double rho, double interest_rate = 0.0);

  CoefficientBundle eval(double y) const;

  double lambda(double y) const { return lambda_(y); }
  double lambda_d1(double y) const { return lambda_.d1(y); }
  double lambda_d2(double y) const { return lambda_.d2(y); }
  double sigma(double y) const;
  double a(double y) const;
  double b(double y) const { return b_(y); }
  double rho() const { return rho_; }
  double interest_rate() const { return rate_; }

  bool lambda_is_constant(std::span<const double> probe_grid) const;

  /// Checks the empirical Assumption-2.1 bounds (|lambda|, |lambda'|, |lambda''|,
  /// |b|, |a|, 1/a, sigma finite and positive) on a grid; throws DomainError on
  /// the first violation.
  void validate_on_grid(std::span<const double> grid) const;

 private:
  ScalarField lambda_;
  ScalarField sigma_;
  ScalarField a_;
  ScalarField b_;
  double rho_;
  double rate_;
};

}  // namespace levyport

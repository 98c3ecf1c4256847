#include "levyport/utility.hpp"

#include <cmath>

namespace levyport {

namespace {

void require_positive(double x) {
  if (!(x > 0.0)) throw DomainError("utility: x must be > 0");
}

// d^k/dx^k of x^p = p(p-1)...(p-k+1) x^{p-k}
double falling(double p, int k) {
  double f = 1.0;
  for (int i = 0; i < k; ++i) f *= (p - i);
  return f;
}

}  // namespace

UtilitySpec UtilitySpec::logarithmic() {
  UtilitySpec u;
  u.family_ = UtilityFamily::Logarithmic;
  return u;
}

UtilitySpec UtilitySpec::power_mixture(double c1, double c2, double alpha, double beta) {
  if (c1 < 0.0 || c2 < 0.0) throw DomainError("utility: c1 and c2 must be >= 0");
  if (c1 + c2 <= 0.0) throw DomainError("utility: c1 + c2 must be > 0");
  if (!(alpha > 0.0) || alpha == 1.0) throw DomainError("utility: alpha must be > 0 and != 1");
  if (!(beta > 0.0) || beta == 1.0) throw DomainError("utility: beta must be > 0 and != 1");
  UtilitySpec u;
  u.family_ = UtilityFamily::PowerMixture;
  u.c1_ = c1;
  u.c2_ = c2;
  u.alpha_ = alpha;
  u.beta_ = beta;
  return u;
}

UtilitySpec UtilitySpec::single_power(double c1, double alpha) {
  return power_mixture(c1, 0.0, alpha, alpha);
}

bool UtilitySpec::is_single_power() const {
  if (family_ != UtilityFamily::PowerMixture) return false;
  return c2_ == 0.0 || c1_ == 0.0 || alpha_ == beta_;
}

double UtilitySpec::derivative(double x, int order) const {
  require_positive(x);
  if (order < 0 || order > 4) throw UnsupportedOrderError("utility: derivative order must be in 0..4");

  if (family_ == UtilityFamily::Logarithmic) {
    switch (order) {
      case 0: return std::log(x);
      case 1: return 1.0 / x;
      case 2: return -1.0 / (x * x);
      case 3: return 2.0 / (x * x * x);
      default: return -6.0 / (x * x * x * x);
    }
  }

  // U_T = c1/(1-alpha) x^{1-alpha} + c2/(1-beta) x^{1-beta}
  const double pa = 1.0 - alpha_;
  const double pb = 1.0 - beta_;
  const double ta = (c1_ / pa) * falling(pa, order) * std::pow(x, pa - order);
  const double tb = c2_ == 0.0 ? 0.0 : (c2_ / pb) * falling(pb, order) * std::pow(x, pb - order);
  return ta + tb;
}

RatioBundle ratio_terms(const UtilitySpec& u, double x) {
  require_positive(x);
  const double u1 = u.derivative(x, 1);
  const double u2 = u.derivative(x, 2);
  const double u3 = u.derivative(x, 3);
  const double u4 = u.derivative(x, 4);

  RatioBundle r;
  r.r1 = u1 / u2;
  r.r2 = u1 * u1 / u2;
  r.r1_d1 = 1.0 - u1 * u3 / (u2 * u2);
  r.r1_d2 = -u3 / u2 + 2.0 * u1 * u3 * u3 / (u2 * u2 * u2) - u1 * u4 / (u2 * u2);
  r.r2_d1 = 2.0 * u1 - r.r1 * r.r1 * u3;
  r.r2_d2 = 2.0 * u2 - 2.0 * u1 * u3 / u2 + 2.0 * u1 * u1 * u3 * u3 / (u2 * u2 * u2) -
            r.r1 * r.r1 * u4;
  return r;
}

double growth_f(const UtilitySpec& u, double x) {
  require_positive(x);
  if (u.family() == UtilityFamily::Logarithmic) return 1.0;
  return std::pow(x, 1.0 - u.alpha()) + std::pow(x, 1.0 - u.beta());
}

double growth_g(const UtilitySpec& u, double x) {
  require_positive(x);
  if (u.family() == UtilityFamily::Logarithmic) return std::log(x) + 1.0;
  return growth_f(u, x);
}

double growth_f_d1(const UtilitySpec& u, double x) {
  require_positive(x);
  if (u.family() == UtilityFamily::Logarithmic) return 0.0;
  const double pa = 1.0 - u.alpha();
  const double pb = 1.0 - u.beta();
  return pa * std::pow(x, pa - 1.0) + pb * std::pow(x, pb - 1.0);
}

double growth_f_d2(const UtilitySpec& u, double x) {
  require_positive(x);
  if (u.family() == UtilityFamily::Logarithmic) return 0.0;
  const double pa = 1.0 - u.alpha();
  const double pb = 1.0 - u.beta();
  return pa * (pa - 1.0) * std::pow(x, pa - 2.0) + pb * (pb - 1.0) * std::pow(x, pb - 2.0);
}

}  // namespace levyport

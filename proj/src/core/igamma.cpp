#include "core/igamma.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "core/errors.hpp"

namespace wp {

namespace {

constexpr double kRelTol = 1e-14;
constexpr int kMaxIter = 100000;

// P(a, x) by the lower series; converges quickly for x < a + 1.
double lower_series_p(double a, double x) {
  double ap = a;
  double term = 1.0 / a;
  double sum = term;
  for (int i = 0; i < kMaxIter; ++i) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::fabs(term) <= std::fabs(sum) * kRelTol) {
      return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
  }
  throw InvalidArgumentError("incomplete gamma series did not converge: a=" + std::to_string(a) +
                             " x=" + std::to_string(x));
}

// Q(a, x) by the modified Lentz continued fraction; for x >= a + 1.
double upper_fraction_q(double a, double x) {
  const double fpmin = std::numeric_limits<double>::min() / kRelTol;
  double b = x + 1.0 - a;
  double c = 1.0 / fpmin;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIter; ++i) {
    double an = -static_cast<double>(i) * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < fpmin) d = fpmin;
    c = b + an / c;
    if (std::fabs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) <= kRelTol) {
      return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
    }
  }
  throw InvalidArgumentError("incomplete gamma fraction did not converge: a=" +
                             std::to_string(a) + " x=" + std::to_string(x));
}

}  // namespace

double regularized_gamma_q(double a, double x) {
  if (!(a > 0.0)) throw InvalidArgumentError("gamma shape must be positive");
  if (!(x >= 0.0)) throw InvalidArgumentError("gamma argument must be non-negative");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - lower_series_p(a, x);
  return upper_fraction_q(a, x);
}

double chi_square_survival(double x, int df) {
  if (df < 1) throw InvalidArgumentError("degrees of freedom must be positive");
  if (!(x >= 0.0)) throw InvalidArgumentError("chi-square statistic must be non-negative");
  return regularized_gamma_q(0.5 * df, 0.5 * x);
}

}  // namespace wp

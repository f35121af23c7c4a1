#ifndef WP_CORE_IGAMMA_HPP
#define WP_CORE_IGAMMA_HPP

namespace wp {

// Regularized upper incomplete gamma function Q(a, x), a > 0, x >= 0.
// Lower series for x < a + 1, Lentz continued fraction otherwise, both
// iterated to relative tolerance 1e-14.
double regularized_gamma_q(double a, double x);

// Upper-tail probability of the chi-square distribution with df degrees of
// freedom, i.e. Q(df/2, x/2).
double chi_square_survival(double x, int df);

}  // namespace wp

#endif  // WP_CORE_IGAMMA_HPP

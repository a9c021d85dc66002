#ifndef MOODCO_DISTRIBUTIONS_HPP
#define MOODCO_DISTRIBUTIONS_HPP

namespace moodco::dist {

// Self-contained special functions backing every p-value in the stats
// kernel. Series/continued-fraction evaluation, relative accuracy around
// 1e-13 for the argument ranges the pipeline uses (df <= 10000).

double log_gamma(double x);  // requires x > 0

// Regularized incomplete gamma P(a,x) and its complement Q(a,x).
double gamma_p(double a, double x);
double gamma_q(double a, double x);

// Regularized incomplete beta I_x(a,b).
double incomplete_beta(double a, double b, double x);

// Upper-tail probabilities.
double chi_square_sf(double x, double df);
double f_sf(double x, double df1, double df2);
double student_t_sf(double t, double df);        // P(T > t), one-sided
double student_t_two_sided_p(double t, double df);

}  // namespace moodco::dist

#endif  // MOODCO_DISTRIBUTIONS_HPP

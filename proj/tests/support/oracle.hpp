// Test-only p-value oracle: upper-tail probabilities computed by adaptive
// Simpson quadrature over the density, entirely independent of the
// series/continued-fraction routines under test (log-gamma comes from the
// C library here, not from the Lanczos implementation in core).
#ifndef MOODCO_TESTS_ORACLE_HPP
#define MOODCO_TESTS_ORACLE_HPP

#include <cmath>
#include <functional>

namespace oracle {

inline double simpson(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    return (b - a) / 6.0 * (f(a) + 4.0 * f(c) + f(b));
}

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double whole, double tol, int depth) {
    const double c = 0.5 * (a + b);
    const double left = simpson(f, a, c);
    const double right = simpson(f, c, b);
    if (depth <= 0 || std::fabs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(f, a, c, left, tol / 2.0, depth - 1) +
           adaptive_simpson(f, c, b, right, tol / 2.0, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12) {
    if (b <= a) return 0.0;
    // Split into a few panels first so narrow peaks are not missed.
    const int panels = 64;
    double total = 0.0;
    const double h = (b - a) / panels;
    for (int i = 0; i < panels; ++i) {
        const double lo = a + i * h;
        const double hi = lo + h;
        total += adaptive_simpson(f, lo, hi, simpson(f, lo, hi), tol / panels, 48);
    }
    return total;
}

inline double chi2_pdf(double x, double df) {
    if (x <= 0.0) return 0.0;
    const double k = df / 2.0;
    const double log_pdf = (k - 1.0) * std::log(x) - x / 2.0 - k * std::log(2.0) - std::lgamma(k);
    return std::exp(log_pdf);
}

inline double t_pdf(double x, double df) {
    const double log_pdf = std::lgamma((df + 1.0) / 2.0) - std::lgamma(df / 2.0) -
                           0.5 * std::log(df * 3.14159265358979323846) -
                           (df + 1.0) / 2.0 * std::log1p(x * x / df);
    return std::exp(log_pdf);
}

inline double f_pdf(double x, double d1, double d2) {
    if (x <= 0.0) return 0.0;
    const double log_pdf = 0.5 * (d1 * std::log(d1 * x) + d2 * std::log(d2)) -
                           0.5 * (d1 + d2) * std::log(d1 * x + d2) - std::log(x) -
                           (std::lgamma(d1 / 2.0) + std::lgamma(d2 / 2.0) -
                            std::lgamma((d1 + d2) / 2.0));
    return std::exp(log_pdf);
}

// Upper tails via quadrature over [x, far-enough].
inline double chi2_sf(double x, double df) {
    if (x <= 0.0) return 1.0;
    const double hi = std::max(x + 60.0 * std::sqrt(2.0 * df) + 60.0,
                               df + 60.0 * std::sqrt(2.0 * df) + 60.0);
    return integrate([df](double v) { return chi2_pdf(v, df); }, x, hi);
}

inline double t_sf(double x, double df) {
    const double scale = std::sqrt(df / (df > 2.0 ? df - 2.0 : 1.0));
    const double hi = std::fabs(x) + 60.0 * std::max(1.0, scale) + 60.0;
    const double tail =
        integrate([df](double v) { return t_pdf(v, df); }, std::fabs(x), hi);
    return x >= 0.0 ? tail : 1.0 - tail;
}

inline double t_two_sided_p(double x, double df) { return 2.0 * t_sf(std::fabs(x), df); }

inline double f_sf(double x, double d1, double d2) {
    if (x <= 0.0) return 1.0;
    // The F density has a heavy right tail for small d2; integrate the
    // complement over [0, x] instead and subtract.
    return 1.0 - integrate([d1, d2](double v) { return f_pdf(v, d1, d2); }, 0.0, x);
}

}  // namespace oracle

#endif  // MOODCO_TESTS_ORACLE_HPP

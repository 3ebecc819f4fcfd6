#include "sdelab/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sdelab {
namespace {

constexpr double kTwoOverSqrtPi = 2.0 / 1.7724538509055160273;  // 2/sqrt(pi)
constexpr double kErfiMax = 6.0;

// Maclaurin series: erfi(z) = (2/sqrt(pi)) sum_k z^(2k+1) / (k! (2k+1)).
// All terms positive, so the sum is perfectly conditioned.
double erfi_series(double z) {
    double z2 = z * z;
    double power = z;   // z^(2k+1) / k!
    double sum = z;
    double comp = 0.0;  // Neumaier compensation
    for (int k = 1; k < 400; ++k) {
        power *= z2 / k;
        double term = power / (2 * k + 1);
        double t = sum + term;
        comp += std::fabs(sum) >= term ? (sum - t) + term : (term - t) + sum;
        sum = t;
        if (term < 1e-17 * sum) break;
    }
    return kTwoOverSqrtPi * (sum + comp);
}

double exp_sq(double t) { return std::exp(t * t); }

double adaptive_simpson(double lo, double hi, double flo, double fmid, double fhi,
                        double whole, double rel_tol, int depth) {
    double mid = 0.5 * (lo + hi);
    double lm = 0.5 * (lo + mid), mh = 0.5 * (mid + hi);
    double flm = exp_sq(lm), fmh = exp_sq(mh);
    double left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid);
    double right = (hi - mid) / 6.0 * (fmid + 4.0 * fmh + fhi);
    double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * rel_tol * std::fabs(left + right))
        return left + right + delta / 15.0;
    return adaptive_simpson(lo, mid, flo, flm, fmid, left, rel_tol, depth - 1) +
           adaptive_simpson(mid, hi, fmid, fmh, fhi, right, rel_tol, depth - 1);
}

// int_a^b exp(t^2) dt, 0 <= a < b.
double integral_exp_sq(double a, double b) {
    double fa = exp_sq(a), fb = exp_sq(b), fm = exp_sq(0.5 * (a + b));
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(a, b, fa, fm, fb, whole, 1e-15, 48);
}

const double kErfi3 = erfi_series(3.0);

} // namespace

double erfi(double z) {
    if (!(std::fabs(z) <= kErfiMax))
        throw std::domain_error("erfi: |z| must be <= 6");
    double a = std::fabs(z);
    double r = a <= 3.0 ? erfi_series(a)
                        : kErfi3 + kTwoOverSqrtPi * integral_exp_sq(3.0, a);
    return z < 0.0 ? -r : r;
}

double erfi_inv(double y) {
    static const double y_max = erfi(kErfiMax);
    if (!(std::fabs(y) <= y_max))
        throw std::domain_error("erfi_inv: argument outside the image of erfi on [-6, 6]");
    if (y == 0.0) return 0.0;

    double a = std::fabs(y);

    // Seed. Small arguments: invert the cubic truncation
    // (2/sqrt(pi)) (z + z^3/3) = y via Cardano. Large arguments: fixed-point
    // on the leading asymptotic erfi(z) ~ exp(z^2) / (z sqrt(pi)).
    double z;
    if (a < 20.0) {
        double c = 1.5 * a / kTwoOverSqrtPi;
        double disc = std::sqrt(c * c + 1.0);
        z = std::cbrt(c + disc) + std::cbrt(c - disc);
    } else {
        z = 2.0;
        for (int i = 0; i < 4; ++i)
            z = std::sqrt(std::log(a * z * 1.7724538509055160273));
    }
    // Keep the seed inside the series branch while the target lies there;
    // the bracketed Newton recovers in a couple of steps.
    z = std::min(z, a <= kErfi3 ? 3.0 : kErfiMax);

    double lo = 0.0, hi = kErfiMax;  // erfi(lo) <= a <= erfi(hi)
    double resid = 0.0;
    for (int it = 0; it < 200; ++it) {
        double f = erfi(z);
        resid = f - a;
        if (std::fabs(resid) <= 1e-13 * std::max(1.0, a))
            return y < 0.0 ? -z : z;
        if (resid > 0.0) hi = z; else lo = z;
        double step = resid * std::exp(-z * z) / kTwoOverSqrtPi;
        double zn = z - step;
        if (!(zn > lo && zn < hi)) zn = 0.5 * (lo + hi);
        if (zn == z) return y < 0.0 ? -z : z;  // bracket exhausted at this precision
        z = zn;
    }
    throw std::runtime_error("erfi_inv: no convergence, residual " + std::to_string(resid));
}

double ks_asymptotic_pvalue(double statistic, double n_samples) {
    if (!(n_samples >= 35.0))
        throw std::invalid_argument("ks_asymptotic_pvalue: needs n >= 35 (asymptotic regime)");
    if (!(statistic >= 0.0 && statistic <= 1.0))
        throw std::invalid_argument("ks_asymptotic_pvalue: statistic must be in [0,1]");
    double lambda = std::sqrt(n_samples) * statistic;
    if (lambda < 1e-8) return 1.0;
    double sum = 0.0;
    double sign = 1.0;
    for (int k = 1; k <= 100000; ++k) {
        double term = std::exp(-2.0 * k * k * lambda * lambda);
        sum += sign * term;
        if (term < 1e-12) break;
        sign = -sign;
    }
    double p = 2.0 * sum;
    return std::min(1.0, std::max(0.0, p));
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("normal_quantile: p must be in (0,1)");
    // Acklam's rational approximation, then one Halley step against erfc.
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    double x;
    if (p < plow) {
        double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - plow) {
        double q = p - 0.5, r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        double q = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    double e = normal_cdf(x) - p;
    double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
    x = x - u / (1.0 + 0.5 * x * u);
    return x;
}

} // namespace sdelab

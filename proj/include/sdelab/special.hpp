#pragma once

namespace sdelab {

// Scaled integral of exp(t^2): (2/sqrt(pi)) * int_0^z exp(t^2) dt.
// Real-valued, odd, strictly increasing. Supported on |z| <= 6; outside
// that range the value overflows any sensible absolute tolerance and the
// call raises a domain error.
double erfi(double z);

// Inverse of erfi on its supported range. Newton iteration seeded from the
// cubic truncation (asymptotic seed for large arguments), with a monotone
// bisection bracket as fallback. Round trip |erfi(erfi_inv(y)) - y| holds to
// 1e-10 absolute for |y| <= erfi(5). Raises a numeric error with the final
// residual if the iteration cap is hit.
double erfi_inv(double y);

// Asymptotic Kolmogorov-Smirnov p-value: Q(sqrt(n) * D) with
// Q(x) = 2 * sum_{k>=1} (-1)^{k-1} exp(-2 k^2 x^2), series truncated once a
// term drops below 1e-12. Requires n >= 35 (asymptotic regime).
double ks_asymptotic_pvalue(double statistic, double n_samples);

// Standard normal CDF and quantile.
double normal_cdf(double x);
double normal_quantile(double p);

} // namespace sdelab

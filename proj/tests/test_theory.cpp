#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "sdelab/theory.hpp"

using namespace sdelab;
using namespace sdelab::theory;

TEST_CASE("relu mean log growth: pinned values") {
    // n=1 main reduces to the width-1 GBM drift -t/2.
    CHECK(relu_log_growth_mean(1, 0.0, 1.0, MeanVariant::main) == doctest::Approx(-0.5));
    CHECK(relu_log_growth_mean(1, 0.0, 0.4, MeanVariant::main) == doctest::Approx(-0.2));
    // n=4 main: 4/15 - 1/4 = 1/60.
    CHECK(relu_log_growth_mean(4, 0.0, 1.0, MeanVariant::main) ==
          doctest::Approx(1.0 / 60.0).epsilon(1e-12));
    // n=3 main: 2/7 - 1/3.
    CHECK(relu_log_growth_mean(3, 0.0, 1.0, MeanVariant::main) ==
          doctest::Approx(2.0 / 7.0 - 1.0 / 3.0).epsilon(1e-12));
    // Appendix variant at n=4: 15/64 - 1/4 < 0.
    CHECK(relu_log_growth_mean(4, 0.0, 1.0, MeanVariant::appendix) ==
          doctest::Approx(15.0 / 64.0 - 0.25).epsilon(1e-12));
}

TEST_CASE("relu mean log growth: sign patterns of the two variants") {
    // The main variant crosses zero between widths 3 and 4, the appendix
    // variant between 4 and 5; both are increasing in n.
    double prev = -1e9;
    for (int n = 1; n <= 30; ++n) {
        double v = relu_log_growth_mean(n, 0.0, 1.0, MeanVariant::main);
        CHECK(v > prev);
        prev = v;
        if (n <= 3) CHECK(v < 0.0);
        if (n >= 4) CHECK(v > 0.0);
        double w = relu_log_growth_mean(n, 0.0, 1.0, MeanVariant::appendix);
        if (n <= 4) CHECK(w < 0.0);
        if (n >= 5) CHECK(w > 0.0);
    }
}

TEST_CASE("variance bound: frozen arithmetic and limiting behaviour") {
    // n=2, p2 constant 0.25 on [0,1]: p1 = 0.375,
    // Gamma = ((0.25 - 0.140625) + 0.5 (0.375 - 0.25)) / 4 = 0.04296875,
    // bound = (1/sqrt(2) + sqrt(Gamma))^2.
    std::vector<double> p2{0.25, 0.25};
    double gamma = 0.25 * ((0.25 - 0.140625) + 0.5 * (0.375 - 0.25));
    CHECK(gamma == doctest::Approx(0.04296875).epsilon(1e-15));
    double expect = std::pow(1.0 / std::sqrt(2.0) + std::sqrt(gamma), 2.0);
    CHECK(relu_log_growth_var_bound(2, 0.0, 1.0, p2) == doctest::Approx(expect).epsilon(1e-12));
    CHECK(expect == doctest::Approx(0.836120).epsilon(1e-6));

    // Large n with p2 pinned at its limit p1^2: only the n^{-1} term remains,
    // so the bound approaches (t-s)/n.
    int n = 4096;
    double p1 = 0.5 * (1.0 - std::exp2(-n));
    std::vector<double> flat{p1 * p1, p1 * p1};
    double b = relu_log_growth_var_bound(n, 0.0, 1.0, flat);
    CHECK(b < 2.0 / n);

    // Monotone in the curve level above p1^2 for large n.
    std::vector<double> lo(5, 0.26), hi(5, 0.30);
    CHECK(relu_log_growth_var_bound(64, 0.0, 1.0, lo) <
          relu_log_growth_var_bound(64, 0.0, 1.0, hi));

    CHECK_THROWS_AS(relu_log_growth_var_bound(1, 0.0, 1.0, p2), std::invalid_argument);
    CHECK_THROWS_AS(relu_log_growth_var_bound(2, 0.0, 1.0, std::vector<double>{}),
                    std::invalid_argument);
    CHECK_THROWS_AS(relu_log_growth_var_bound(2, 0.0, 1.0, std::vector<double>{0.2, 1.4}),
                    std::invalid_argument);
}

TEST_CASE("piecewise drift: the three regimes and the pole jumps") {
    // Identity (alpha = -beta = 1): 1/2 - 1/n.
    for (int n : {2, 5, 20})
        CHECK(piecewise_mean_drift(1.0, -1.0, n) == doctest::Approx(0.5 - 1.0 / n).epsilon(1e-15));
    // beta = 0 branch matches the appendix relu coefficient.
    CHECK(piecewise_mean_drift(1.0, 0.0, 3) ==
          doctest::Approx(relu_log_growth_mean(3, 0.0, 1.0, MeanVariant::appendix)).epsilon(1e-13));
    // Perturbed identity: n=2, alpha=1, beta=0.9.
    CHECK(piecewise_mean_drift(1.0, 0.9, 2) ==
          doctest::Approx((1.0 + 0.81) / 4.0 - 0.5).epsilon(1e-15));

    // Discontinuity across the beta = 0 pole equals 2^{-n} alpha^2 / 4.
    for (int n : {1, 3, 8}) {
        double alpha = 1.3;
        double interior_limit = (alpha * alpha + 0.0) / 4.0 - 1.0 / n;
        double pole = piecewise_mean_drift(alpha, 0.0, n);
        CHECK(interior_limit - pole ==
              doctest::Approx(std::exp2(-n) * alpha * alpha / 4.0).epsilon(1e-12));
        // Continuity within the interior regime.
        CHECK(piecewise_mean_drift(alpha, 1e-9, n) ==
              doctest::Approx(interior_limit).epsilon(1e-9));
    }
    CHECK_THROWS_AS(piecewise_mean_drift(0.0, 0.0, 3), std::domain_error);
}

TEST_CASE("collapse probability at the start") {
    CHECK(collapse_prob_init(1) == 0.5);
    CHECK(collapse_prob_init(3) == 0.125);
    CHECK(collapse_prob_init(10) == doctest::Approx(1.0 / 1024.0).epsilon(1e-15));
    CHECK_THROWS_AS(collapse_prob_init(0), std::invalid_argument);
}

TEST_CASE("sequential limits: values and the reconciled variant") {
    using LO = LimitOrder;
    using LV = LimitVariant;
    CHECK(sequential_limit_variance(0.0, LO::depth_then_width, LV::as_stated) == 1.0);
    CHECK(sequential_limit_variance(0.0, LO::width_then_depth, LV::as_stated) == 1.0);
    CHECK(sequential_limit_variance(1.0, LO::depth_then_width, LV::as_stated) ==
          doctest::Approx(1.6487212707).epsilon(1e-9));
    CHECK(sequential_limit_variance(1.0, LO::width_then_depth, LV::as_stated) ==
          doctest::Approx(2.7182818285).epsilon(1e-9));
    CHECK(sequential_limit_variance(1.0, LO::width_then_depth, LV::reconciled) ==
          doctest::Approx(1.6487212707).epsilon(1e-9));

    CHECK(sequential_limit_norm_ratio(0.0, LO::depth_then_width) == 1.0);
    CHECK(sequential_limit_norm_ratio(1.0, LO::depth_then_width) ==
          doctest::Approx(1.2840254167).epsilon(1e-9));
    CHECK(sequential_limit_norm_ratio(1.0, LO::width_then_depth) ==
          doctest::Approx(1.6487212707).epsilon(1e-9));
    CHECK(sequential_limit_norm_ratio(1.0, LO::width_then_depth, LV::reconciled) ==
          doctest::Approx(1.2840254167).epsilon(1e-9));
}

TEST_CASE("ou marginal parameters") {
    OuParams p0 = ou_marginal_params(2.5, 1.0, 0.0);
    CHECK(p0.mean == 2.5);
    CHECK(p0.variance == 0.0);

    // Stationary limit: mean 0, variance 2a = pi/2 for alpha = 1.
    OuParams pinf = ou_marginal_params(2.5, 1.0, 1e6);
    CHECK(pinf.mean == doctest::Approx(0.0));
    CHECK(pinf.variance == doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-12));

    CHECK(ou_rate(1.0) == doctest::Approx(0.7853981634).epsilon(1e-9));
    OuParams p1 = ou_marginal_params(1.0, 1.0, 1.0);
    CHECK(p1.mean == doctest::Approx(0.4559381278).epsilon(1e-9));

    // All predictions at t = s reduce to the baseline.
    CHECK(relu_log_growth_mean(5, 0.3, 0.3, MeanVariant::main) == 0.0);
    CHECK(relu_log_growth_var_bound(5, 0.3, 0.3, std::vector<double>{0.25, 0.25}) == 0.0);
    CHECK(sequential_limit_norm_ratio(0.0, LimitOrder::width_then_depth) == 1.0);
}

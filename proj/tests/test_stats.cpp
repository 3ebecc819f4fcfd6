#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "sdelab/rng.hpp"
#include "sdelab/special.hpp"
#include "sdelab/stats.hpp"

using namespace sdelab;

TEST_CASE("summarize: two-point and constant samples") {
    std::vector<double> two{0.0, 1.0};
    MonteCarloSummary s = summarize(two);
    CHECK(s.mean == 0.5);
    CHECK(s.variance == 0.5);
    CHECK(s.std_error == doctest::Approx(0.5).epsilon(1e-15));

    std::vector<double> flat(10, 3.25);
    MonteCarloSummary f = summarize(flat);
    CHECK(f.variance == 0.0);
    for (double q : f.quantiles) CHECK(q == 3.25);

    std::vector<double> one{1.0};
    CHECK_THROWS_AS(summarize(one), std::invalid_argument);
}

TEST_CASE("summarize: permutation invariant, exclusion accounting") {
    RngStream s = RngStream(31).child("perm");
    std::vector<double> x(501);
    for (double& v : x) v = s.next_gauss() * 3.0 + 1.0;
    MonteCarloSummary a = summarize(x, 7);
    std::vector<double> y = x;
    std::reverse(y.begin(), y.end());
    std::rotate(y.begin(), y.begin() + 123, y.end());
    MonteCarloSummary b = summarize(y, 7);
    CHECK(a.mean == b.mean);
    CHECK(a.variance == b.variance);
    CHECK(a.quantiles == b.quantiles);
    CHECK(a.n_samples == 508);
    CHECK(a.retained() == 501);
}

TEST_CASE("summarize: CLT sanity on 1e5 draws") {
    RngStream s = RngStream(77).child("clt");
    std::vector<double> x(100000);
    for (double& v : x) v = s.next_gauss();
    MonteCarloSummary m = summarize(x);
    CHECK(std::fabs(m.mean) <= 4.0 * m.std_error);
    CHECK(m.variance == doctest::Approx(1.0).epsilon(0.03));
    CHECK(m.quantiles[2] == doctest::Approx(0.0).epsilon(0.02));
}

TEST_CASE("ks_test: self test against the true reference") {
    RngStream root = RngStream(2025).child("ks-self");
    int ok = 0;
    for (int rep = 0; rep < 100; ++rep) {
        RngStream s = root.child("rep", rep);
        std::vector<double> x(10000);
        for (double& v : x) v = 0.7 * s.next_gauss() - 0.2;
        KsResult r = ks_test_normal(x, -0.2, 0.7);
        if (r.p_value > 0.001) ++ok;
    }
    CHECK(ok >= 99);
}

TEST_CASE("ks_test: gross mismatch and step bound") {
    RngStream s = RngStream(4).child("shift");
    std::vector<double> x(2000);
    for (double& v : x) v = s.next_gauss() + 5.0;  // shifted by 5 sigma
    KsResult r = ks_test_normal(x, 0.0, 1.0);
    CHECK(r.p_value < 1e-6);

    // Samples against their own empirical CDF: D bounded by 1/n.
    std::vector<double> grid(100);
    for (int i = 0; i < 100; ++i) grid[i] = i;
    KsResult self = ks_test_two_sample(grid, grid);
    CHECK(self.statistic <= 1.0 / 100.0 + 1e-12);

    std::vector<double> few(10, 1.0);
    CHECK_THROWS_AS(ks_test_normal(few, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("ks_test_lognormal is the normal test of the logs") {
    RngStream s = RngStream(8).child("logn");
    std::vector<double> x(5000);
    for (double& v : x) v = std::exp(0.3 * s.next_gauss() + 1.0);
    KsResult r = ks_test_lognormal(x, 1.0, 0.3);
    CHECK(r.p_value > 0.01);
    std::vector<double> bad{1.0, -2.0, 3.0};
    CHECK_THROWS_AS(ks_test_lognormal(bad, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("two-sample ks: same law accepted, different law rejected") {
    RngStream s = RngStream(12).child("two");
    std::vector<double> a(3000), b(3000), c(3000);
    for (double& v : a) v = s.next_gauss();
    for (double& v : b) v = s.next_gauss();
    for (double& v : c) v = 1.3 * s.next_gauss() + 0.4;
    CHECK(ks_test_two_sample(a, b).p_value > 0.01);
    CHECK(ks_test_two_sample(a, c).p_value < 1e-6);
    // Effective count n1 n2 / (n1 + n2).
    CHECK(ks_test_two_sample(a, b).n_effective == doctest::Approx(1500.0));
}

TEST_CASE("gaussian_kde: symmetry, normalization, mode") {
    GaussianKde sym = gaussian_kde(std::vector<double>{-1.0, 1.0}, 1.0);
    for (double x : {0.3, 0.9, 2.0})
        CHECK(sym(x) == doctest::Approx(sym(-x)).epsilon(1e-14));

    RngStream s = RngStream(22).child("kde");
    std::vector<double> x(10000);
    for (double& v : x) v = s.next_gauss();
    GaussianKde kde = gaussian_kde(x);

    // Trapezoid over +-10 sigma.
    int grid_n = 4000;
    double lo = -10.0, hi = 10.0, h = (hi - lo) / grid_n;
    double integral = 0.5 * (kde(lo) + kde(hi));
    for (int i = 1; i < grid_n; ++i) integral += kde(lo + i * h);
    integral *= h;
    CHECK(integral == doctest::Approx(1.0).epsilon(1e-3));

    double best_x = 0.0, best = -1.0;
    for (int i = -300; i <= 300; ++i) {
        double v = kde(i * 0.01);
        if (v > best) {
            best = v;
            best_x = i * 0.01;
        }
    }
    CHECK(std::fabs(best_x) <= 0.15);

    std::vector<double> flat(100, 2.0);
    CHECK_THROWS_AS(gaussian_kde(flat), std::invalid_argument);
}

TEST_CASE("wilson_ci: boundaries, frozen value, bisection oracle, coverage of phat") {
    Interval zero = wilson_ci(0, 50);
    CHECK(zero.lo == 0.0);
    CHECK(zero.hi > 0.0);
    Interval half = wilson_ci(50, 100);
    CHECK(half.lo + half.hi == doctest::Approx(1.0).epsilon(1e-12));

    Interval w = wilson_ci(13, 100);
    auto [olo, ohi] = oracle::wilson_bisect(13, 100, normal_quantile(0.975));
    CHECK(w.lo == doctest::Approx(olo).epsilon(1e-9));
    CHECK(w.hi == doctest::Approx(ohi).epsilon(1e-9));
    CHECK(w.lo == doctest::Approx(0.0775716743).epsilon(1e-8));
    CHECK(w.hi == doctest::Approx(0.2098035144).epsilon(1e-8));

    RngStream s = RngStream(17).child("wilson");
    for (int rep = 0; rep < 100; ++rep) {
        long n = 10 + static_cast<long>(s.next_unit() * 500);
        long k = static_cast<long>(s.next_unit() * (n + 1));
        k = std::min(k, n);
        Interval ci = wilson_ci(k, n);
        double phat = static_cast<double>(k) / n;
        CHECK(ci.lo <= phat + 1e-12);
        CHECK(ci.hi >= phat - 1e-12);
    }
}

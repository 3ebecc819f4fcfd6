#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "sdelab/linalg.hpp"
#include "sdelab/rng.hpp"
#include "sdelab/special.hpp"

using namespace sdelab;

TEST_CASE("rng: identical seed and path reproduce the stream bit for bit") {
    RngStream a = RngStream(42).child("experiment", 3).child("sample", 17);
    RngStream b = RngStream(42).child("experiment", 3).child("sample", 17);
    for (int i = 0; i < 256; ++i) CHECK(a.next_u64() == b.next_u64());

    RngStream s1 = RngStream(7).child("m");
    RngStream s2 = RngStream(7).child("m");
    DenseMatrix m1 = gauss_matrix(s1, 5, 3, 0.25);
    DenseMatrix m2 = gauss_matrix(s2, 5, 3, 0.25);
    CHECK(m1.data == m2.data);
}

TEST_CASE("rng: distinct paths do not share output prefixes") {
    RngStream root(123);
    std::vector<RngStream> streams = {root, root.child("a", 0), root.child("a", 1),
                                      root.child("b", 0), root.child("a", 0).child("a", 0)};
    std::set<std::uint64_t> seen;
    for (RngStream& s : streams)
        for (int i = 0; i < 64; ++i) seen.insert(s.next_u64());
    CHECK(seen.size() == streams.size() * 64);
}

TEST_CASE("rng: derivation order matters but parent consumption does not") {
    RngStream root(5);
    RngStream before = root.child("x", 2);
    root.next_u64();
    root.next_u64();
    RngStream after = root.child("x", 2);
    CHECK(before.next_u64() == after.next_u64());
    CHECK(RngStream(5).child("x", 2).next_u64() != RngStream(5).child("y", 2).next_u64());
}

TEST_CASE("gauss_matrix: law of large numbers over 1e6 entries") {
    RngStream s = RngStream(2024).child("lln");
    double sum = 0.0;
    double sum2 = 0.0;
    long total = 0;
    for (int rep = 0; rep < 250000; ++rep) {
        DenseMatrix m = gauss_matrix(s, 2, 2, 1.0);
        for (double v : m.data) {
            sum += v;
            sum2 += v * v;
            ++total;
        }
    }
    double mean = sum / total;
    CHECK(total == 1000000);
    CHECK(std::fabs(mean) < 4e-3);  // 4 sigma of the sample mean
    CHECK(sum2 / total == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("gauss_matrix: degenerate variance is rejected") {
    RngStream s(1);
    CHECK_THROWS_AS(gauss_matrix(s, 2, 2, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(gauss_matrix(s, 2, 2, -1.0), std::invalid_argument);
}

TEST_CASE("erfi: trivial values and odd symmetry") {
    CHECK(erfi(0.0) == 0.0);
    CHECK(erfi(-0.7) == -erfi(0.7));
    CHECK(erfi(1.0) == doctest::Approx(1.650425758).epsilon(1e-9));
    CHECK_THROWS_AS(erfi(6.5), std::domain_error);
    CHECK_THROWS_AS(erfi(-7.0), std::domain_error);
}

TEST_CASE("erfi: matches two independent oracles across the range") {
    // The two oracle routes (series and Simpson, both long double) must agree
    // with each other before we use them to judge the implementation.
    for (double z : {0.3, 1.0, 2.5, 3.7, 5.2, 6.0}) {
        long double s1 = oracle::erfi_series_ld(z);
        long double s2 = oracle::erfi_simpson_ld(z);
        REQUIRE(std::fabs(static_cast<double>(s1 - s2)) <=
                1e-13 * std::fabs(static_cast<double>(s1)));
    }
    // |z| <= 3: absolute error against the oracle.
    for (int i = -60; i <= 60; ++i) {
        double z = i * 0.05;
        double ref = static_cast<double>(oracle::erfi_series_ld(z));
        CHECK(std::fabs(erfi(z) - ref) <= 1e-12);
    }
    // 3 < |z| <= 6: the value grows to ~4e14, past where 1e-12 absolute is
    // representable; the quadrature branch is held to a relative tolerance.
    for (int i = 31; i <= 60; ++i) {
        double z = i * 0.1;
        double ref = static_cast<double>(oracle::erfi_series_ld(z));
        CHECK(std::fabs(erfi(z) - ref) <= 2e-13 * std::fabs(ref));
    }
}

TEST_CASE("erfi: strictly increasing on a grid") {
    double prev = erfi(-6.0);
    for (int i = -599; i <= 600; ++i) {
        double v = erfi(i * 0.01);
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("erfi_inv: trivial values and round trips") {
    CHECK(erfi_inv(0.0) == 0.0);
    CHECK(erfi_inv(erfi(1.3)) == doctest::Approx(1.3).epsilon(1e-12));
    CHECK(erfi_inv(1.650425758) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK_THROWS_AS(erfi_inv(1e15), std::domain_error);
    CHECK_THROWS_AS(erfi_inv(-1e15), std::domain_error);

    // Round trip in y on [-5, 5].
    for (int i = -100; i <= 100; ++i) {
        double y = i * 0.05;
        CHECK(std::fabs(erfi(erfi_inv(y)) - y) <= 1e-10);
    }
    // Round trip in z across the whole supported range.
    for (int i = 1; i <= 59; ++i) {
        double z = i * 0.1;
        CHECK(erfi_inv(erfi(z)) == doctest::Approx(z).epsilon(1e-11));
    }
}

TEST_CASE("erfi_inv: agrees with bisection against the long double oracle") {
    for (double y : {0.25, 1.0, 2.0, 5.0, 30.0, 1500.0}) {
        double ref = static_cast<double>(oracle::erfi_inv_bisect_ld(y));
        CHECK(erfi_inv(y) == doctest::Approx(ref).epsilon(1e-10));
    }
    CHECK(erfi_inv(1.0) == doctest::Approx(0.7316971534684924).epsilon(1e-10));
}

TEST_CASE("cholesky_psd: identity, rank deficiency, and errors") {
    DenseMatrix id(3, 3);
    for (int i = 0; i < 3; ++i) id(i, i) = 1.0;
    DenseMatrix f = cholesky_psd(id, 1e-12);
    CHECK(f.data == id.data);

    DenseMatrix ones(2, 2);
    ones(0, 0) = ones(0, 1) = ones(1, 0) = ones(1, 1) = 1.0;
    DenseMatrix g = cholesky_psd(ones, 1e-12);
    CHECK(g(0, 0) == 1.0);
    CHECK(g(0, 1) == 0.0);
    CHECK(g(1, 0) == 1.0);
    CHECK(g(1, 1) == 0.0);

    DenseMatrix indef(2, 2);
    indef(0, 0) = 1.0;
    indef(1, 1) = -1.0;
    CHECK_THROWS_AS(cholesky_psd(indef, 1e-12), std::runtime_error);

    DenseMatrix asym(2, 2);
    asym(0, 1) = 1.0;
    CHECK_THROWS_AS(cholesky_psd(asym, 1e-12), std::invalid_argument);
}

TEST_CASE("cholesky_psd: random Gram reconstruction within 1e-8") {
    RngStream s = RngStream(99).child("gram");
    for (int rep = 0; rep < 20; ++rep) {
        DenseMatrix m = gauss_matrix(s, 6, 4, 1.0);
        DenseMatrix a(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                double acc = 0.0;
                for (int k = 0; k < 6; ++k) acc += m(k, i) * m(k, j);
                a(i, j) = acc;
            }
        // Symmetrize exactly against rounding asymmetry in the products.
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < i; ++j) a(i, j) = a(j, i);
        DenseMatrix f = cholesky_psd(a, 1e-12);
        double max_a = 0.0, max_err = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                double acc = 0.0;
                for (int k = 0; k < 4; ++k) acc += f(i, k) * f(j, k);
                max_err = std::max(max_err, std::fabs(acc - a(i, j)));
                max_a = std::max(max_a, std::fabs(a(i, j)));
            }
        CHECK(max_err <= 1e-8 * max_a);
    }
}

TEST_CASE("cholesky_psd: k=1 returns sqrt of the entry") {
    RngStream s = RngStream(5).child("k1");
    for (int rep = 0; rep < 50; ++rep) {
        double v = s.next_unit() * 10.0;
        DenseMatrix a(1, 1);
        a(0, 0) = v;
        CHECK(cholesky_psd(a, 0.0)(0, 0) == std::sqrt(v));
    }
}

TEST_CASE("ks_asymptotic_pvalue: endpoints, frozen value, monotonicity") {
    CHECK(ks_asymptotic_pvalue(0.0, 100) == 1.0);
    CHECK(ks_asymptotic_pvalue(0.5, 100) < 1e-10);  // lambda = 5

    // Direct series summation at lambda = 1 in long double, independent of
    // the implementation's truncation rule.
    long double q = 0.0L;
    for (int k = 1; k <= 64; ++k)
        q += (k % 2 ? 1.0L : -1.0L) * std::exp(-2.0L * k * k);
    q *= 2.0L;
    CHECK(ks_asymptotic_pvalue(1.0 / 10.0, 100) ==
          doctest::Approx(static_cast<double>(q)).epsilon(1e-10));
    CHECK(static_cast<double>(q) == doctest::Approx(0.26999967167735456).epsilon(1e-12));

    double prev = 1.0;
    for (int i = 1; i <= 40; ++i) {
        double p = ks_asymptotic_pvalue(i * 0.02, 200);
        CHECK(p <= prev + 1e-15);
        prev = p;
    }

    CHECK_THROWS_AS(ks_asymptotic_pvalue(0.5, 20), std::invalid_argument);
    CHECK_THROWS_AS(ks_asymptotic_pvalue(1.5, 100), std::invalid_argument);
}

TEST_CASE("normal_quantile inverts normal_cdf") {
    for (double p : {0.001, 0.025, 0.31, 0.5, 0.84, 0.975, 0.999}) {
        double x = normal_quantile(p);
        CHECK(normal_cdf(x) == doctest::Approx(p).epsilon(1e-12));
    }
    CHECK(normal_quantile(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-12));
}

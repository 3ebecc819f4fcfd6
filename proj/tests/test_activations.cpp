#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "sdelab/activation.hpp"
#include "sdelab/rng.hpp"

using namespace sdelab;

namespace {

const std::vector<ActivationSpec> kAllKinds = {
    ActivationSpec::relu(),
    ActivationSpec::piecewise(1.4, -0.3),
    ActivationSpec::linear(0.8, 0.2),
    ActivationSpec::smooth_relu(10.0),
    ActivationSpec::exotic(1.0, 0.0),
    ActivationSpec::tanh(),
    ActivationSpec::gelu(),
    ActivationSpec::swish(),
};

} // namespace

TEST_CASE("apply: relu basics and coordinatewise semantics") {
    std::vector<double> v{-1.0, 2.0, 0.0};
    std::vector<double> out = ActivationSpec::relu().apply(v);
    CHECK(out == std::vector<double>{0.0, 2.0, 0.0});
}

TEST_CASE("piecewise(1,-1) is the identity") {
    ActivationSpec id = ActivationSpec::identity();
    RngStream s = RngStream(3).child("id");
    for (int i = 0; i < 100; ++i) {
        double z = 4.0 * (s.next_unit() - 0.5);
        CHECK(id.value(z) == z);
    }
}

TEST_CASE("smooth_relu closed form and uniform bound") {
    // (1/m)(log(1 + e^{m z}) - log 2) at m=10, z=5.
    double expect = (std::log1p(std::exp(-50.0)) + 50.0 - std::numbers::ln2) / 10.0;
    CHECK(ActivationSpec::smooth_relu(10.0).value(5.0) == doctest::Approx(expect).epsilon(1e-15));
    CHECK(expect == doctest::Approx(4.930685).epsilon(1e-6));

    // sup_z |phi_m(z) - relu(z)| <= 1/m on a wide grid (acceptance suite runs
    // the 1e4-point version).
    for (double m : {1.0, 10.0, 100.0}) {
        ActivationSpec sm = ActivationSpec::smooth_relu(m);
        ActivationSpec re = ActivationSpec::relu();
        double worst = 0.0;
        for (int i = -2000; i <= 2000; ++i) {
            double z = i * 0.01;
            worst = std::max(worst, std::fabs(sm.value(z) - re.value(z)));
        }
        CHECK(worst <= 1.0 / m);
    }
}

TEST_CASE("smooth_relu derivative is the logistic map and converges to the step") {
    ActivationSpec sm = ActivationSpec::smooth_relu(7.0);
    for (double z : {-2.0, -0.1, 0.0, 0.4, 3.0})
        CHECK(sm.deriv(z) == doctest::Approx(1.0 / (1.0 + std::exp(-7.0 * z))).epsilon(1e-15));
    for (double m : {5.0, 20.0, 80.0}) {
        ActivationSpec s = ActivationSpec::smooth_relu(m);
        for (double z : {-1.5, -0.2, 0.1, 0.9}) {
            double step = z > 0.0 ? 1.0 : 0.0;
            CHECK(std::fabs(s.deriv(z) - step) <= std::exp(-m * std::fabs(z)));
        }
    }
}

TEST_CASE("derivatives agree with central finite differences away from kinks") {
    for (const ActivationSpec& spec : kAllKinds) {
        bool kinked = spec.kind == ActivationKind::relu ||
                      spec.kind == ActivationKind::piecewise_linear;
        for (int i = -30; i <= 30; ++i) {
            double z = i * 0.1;
            if (kinked && std::fabs(z) <= 1e-3) continue;
            double fd = oracle::central_diff([&](double u) { return spec.value(u); }, z);
            double an = spec.deriv(z);
            double tol = 1e-6 * std::max(1.0, std::fabs(an));
            CHECK(std::fabs(fd - an) <= std::max(tol, 1e-8));
        }
    }
}

TEST_CASE("relu positive homogeneity and apply concatenation") {
    RngStream s = RngStream(11).child("hom");
    ActivationSpec relu = ActivationSpec::relu();
    for (int i = 0; i < 200; ++i) {
        double z = 6.0 * (s.next_unit() - 0.5);
        double c = 3.0 * s.next_unit() + 1e-6;
        CHECK(relu.value(c * z) == doctest::Approx(c * relu.value(z)).epsilon(1e-15));
    }
    for (const ActivationSpec& spec : kAllKinds) {
        std::vector<double> a{0.3, -0.7}, b{1.9, -2.4, 0.0};
        std::vector<double> joined{0.3, -0.7, 1.9, -2.4, 0.0};
        std::vector<double> out = spec.apply(joined);
        std::vector<double> pa = spec.apply(a), pb = spec.apply(b);
        pa.insert(pa.end(), pb.begin(), pb.end());
        CHECK(out == pa);
    }
}

TEST_CASE("exotic transform: fixed points, parity, frozen oracle values") {
    CHECK(exotic_phi(1.0, 0.0, 0.0) == 1.0);
    CHECK(exotic_g(1.0, 0.0, 0.0) == 0.0);

    // phi is even around y = -beta/alpha.
    double alpha = 1.3, beta = 0.4;
    double center = -beta / alpha;
    for (double d : {0.1, 0.5, 1.2})
        CHECK(exotic_phi(alpha, beta, center + d) ==
              doctest::Approx(exotic_phi(alpha, beta, center - d)).epsilon(1e-12));

    // Monotone g.
    CHECK(exotic_g(1.0, 0.0, 0.5) < exotic_g(1.0, 0.0, 1.0));

    // Values pinned with the long double bisection oracle: erfi_inv(1) =
    // 0.7316971534684924, so phi(1) = exp(z^2) and g(1) = sqrt(pi) z.
    double z1 = static_cast<double>(oracle::erfi_inv_bisect_ld(1.0L));
    CHECK(exotic_phi(1.0, 0.0, 1.0) == doctest::Approx(std::exp(z1 * z1)).epsilon(1e-12));
    CHECK(exotic_phi(1.0, 0.0, 1.0) == doctest::Approx(1.7080984332).epsilon(1e-9));
    CHECK(exotic_g(1.0, 0.0, 1.0) ==
          doctest::Approx(std::sqrt(std::numbers::pi) * z1).epsilon(1e-12));
    CHECK(exotic_g(1.0, 0.0, 1.0) == doctest::Approx(1.2968994374).epsilon(1e-9));

    // Outside the erfi image.
    CHECK_THROWS_AS(exotic_phi(1.0, 0.0, 1e15), std::domain_error);
    CHECK_THROWS_AS(ActivationSpec::exotic(1.0, 0.0).apply(std::vector<double>{1e15}),
                    std::domain_error);
}

TEST_CASE("gbm transform") {
    CHECK(gbm_transform_g(1.0, 0.0, 1.0, 2.75) == 2.75);
    CHECK(gbm_transform_g(2.0, 0.0, 0.5, 1.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK_THROWS_AS(gbm_transform_g(1.0, 0.0, 0.5, -1.0), std::domain_error);

    // Drift coefficient a = sigma^2 (gamma - 1) / (2 gamma) vanishes at gamma=1.
    double sigma = 0.7, gamma = 1.0;
    CHECK(0.5 * sigma * sigma * (gamma - 1.0) / gamma == 0.0);
}

TEST_CASE("parse_activation: canonical spellings and errors") {
    CHECK(parse_activation("relu").kind == ActivationKind::relu);
    ActivationSpec pw = parse_activation("piecewise:1.0:-1.0");
    CHECK(pw.kind == ActivationKind::piecewise_linear);
    CHECK(pw.alpha == 1.0);
    CHECK(pw.beta == -1.0);
    CHECK(parse_activation("identity").beta == -1.0);
    CHECK(parse_activation("smooth_relu:25").alpha == 25.0);
    CHECK(parse_activation("exotic:1:0").kind == ActivationKind::exotic);
    CHECK(parse_activation("swish").kind == ActivationKind::swish);
    CHECK_THROWS_AS(parse_activation("softmax"), std::invalid_argument);
    CHECK_THROWS_AS(parse_activation("piecewise:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_activation("smooth_relu:-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_activation("linear:a:b"), std::invalid_argument);
}

TEST_CASE("hard_zero covers exactly the relu family") {
    CHECK(ActivationSpec::relu().hard_zero());
    CHECK(ActivationSpec::piecewise(2.0, 0.0).hard_zero());
    CHECK(ActivationSpec::piecewise(0.0, 1.0).hard_zero());
    CHECK_FALSE(ActivationSpec::piecewise(1.0, -1.0).hard_zero());
    CHECK_FALSE(ActivationSpec::smooth_relu(10.0).hard_zero());
    CHECK_FALSE(ActivationSpec::tanh().hard_zero());
    CHECK(ActivationSpec::exotic(1.0, 0.0).locally_lipschitz_only());
    CHECK_FALSE(ActivationSpec::relu().locally_lipschitz_only());
}

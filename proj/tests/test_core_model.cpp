#include <cmath>
#include <vector>

#include "doctest.h"
#include "icr/rng.hpp"
#include "icr/types.hpp"

using namespace icr;

TEST_SUITE_BEGIN("core-model");

TEST_CASE("pos_part basics") {
    CHECK(pos_part(0.7) == 0.7);
    CHECK(pos_part(-0.3) == 0.0);
    CHECK(pos_part(0.0) == 0.0);
}

TEST_CASE("pos_part is idempotent, monotone and 1-Lipschitz") {
    Rng rng(123);
    for (int i = 0; i < 20000; ++i) {
        const double x = 20.0 * rng.uniform_open01() - 10.0;
        const double y = 20.0 * rng.uniform_open01() - 10.0;
        CHECK(pos_part(pos_part(x)) == pos_part(x));
        if (x <= y) CHECK(pos_part(x) <= pos_part(y));
        CHECK(std::abs(pos_part(x) - pos_part(y)) <= std::abs(x - y) + 1e-15);
    }
}

TEST_CASE("type invariants enforced") {
    CHECK_THROWS_AS(ChannelExponents(-0.1, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(ChannelExponents(1.0, NAN, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(MultiplexingGains(-0.01, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(MultiplexingGains(0.5, 1.01), std::invalid_argument);
    CHECK_THROWS_AS(SnrPoint(1.0), std::invalid_argument);
    CHECK_THROWS_AS(SnrPoint(0.5), std::invalid_argument);
    CHECK_THROWS_AS(TargetRates(-1.0, 0.0), std::invalid_argument);
}

TEST_CASE("target rates derive from gains and SNR") {
    const SnrPoint snr(1024.0);
    const auto t = TargetRates::for_gains(MultiplexingGains(0.5, 0.25), snr);
    CHECK(t.rate1 == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(t.rate2 == doctest::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("fading_to_exponents pins the known points") {
    const SnrPoint snr(100.0);
    FadingDraw d{};
    d.h11 = {1.0, 0.0};  // |h|^2 = 1
    auto x = fading_to_exponents(d, snr);
    CHECK(x.theta11 == doctest::Approx(0.0));

    d.h11 = {0.1, 0.0};  // |h|^2 = 0.01 = rho^-1
    x = fading_to_exponents(d, snr);
    CHECK(x.theta11 == doctest::Approx(1.0).epsilon(1e-12));

    d.h11 = {std::sqrt(10.0), 0.0};  // |h|^2 = 10 clamps to 0
    x = fading_to_exponents(d, snr);
    CHECK(x.theta11 == 0.0);

    d.h11 = {0.0, 0.0};  // dead link maps to the cap
    x = fading_to_exponents(d, snr);
    CHECK(x.theta11 == kThetaCap);
}

TEST_CASE("exponents are phase invariant") {
    const SnrPoint snr(316.0);
    Rng rng(99);
    for (int i = 0; i < 200; ++i) {
        FadingDraw d = draw_fading(rng);
        FadingDraw rotated = d;
        const double phi = 6.2831853 * rng.uniform_open01();
        const std::complex<double> rot{std::cos(phi), std::sin(phi)};
        rotated.h11 *= rot;
        rotated.h23 *= rot;
        rotated.h32 *= rot;
        const auto a = fading_to_exponents(d, snr);
        const auto b = fading_to_exponents(rotated, snr);
        CHECK(a.theta11 == doctest::Approx(b.theta11).epsilon(1e-12));
        CHECK(a.theta23 == doctest::Approx(b.theta23).epsilon(1e-12));
        CHECK(a.theta32 == doctest::Approx(b.theta32).epsilon(1e-12));
    }
}

TEST_CASE("theta decreases in rho for weak links and stays zero for strong ones") {
    FadingDraw d{};
    d.h11 = {0.3, 0.0};  // |h|^2 < 1
    const auto weak_lo = fading_to_exponents(d, SnrPoint(100.0)).theta11;
    const auto weak_hi = fading_to_exponents(d, SnrPoint(10000.0)).theta11;
    CHECK(weak_lo > weak_hi);
    CHECK(weak_hi > 0.0);

    d.h11 = {1.5, 0.0};  // |h|^2 > 1
    CHECK(fading_to_exponents(d, SnrPoint(100.0)).theta11 == 0.0);
    CHECK(fading_to_exponents(d, SnrPoint(1e6)).theta11 == 0.0);
}

TEST_CASE("draws are reproducible and substreams are partition independent") {
    Rng a = Rng::from_key(42, {5, 17});
    Rng b = Rng::from_key(42, {5, 17});
    const FadingDraw da = draw_fading(a);
    const FadingDraw db = draw_fading(b);
    CHECK(da.h11 == db.h11);
    CHECK(da.h32 == db.h32);

    // Different key words must decorrelate.
    Rng c = Rng::from_key(42, {5, 18});
    CHECK(draw_fading(c).h11 != da.h11);
}

TEST_CASE("draw statistics: unit power and Exp(1) gains") {
    Rng rng(2026);
    const int n = 1000000;
    double mean_gain = 0.0;
    int below[3] = {0, 0, 0};
    const double ts[3] = {0.5, 1.0, 2.0};
    for (int i = 0; i < n; ++i) {
        const std::complex<double> h = rng.cn01();
        const double gain = std::norm(h);
        mean_gain += gain;
        for (int k = 0; k < 3; ++k) {
            if (gain < ts[k]) ++below[k];
        }
    }
    mean_gain /= n;
    CHECK(mean_gain == doctest::Approx(1.0).epsilon(0.01));
    for (int k = 0; k < 3; ++k) {
        const double expected = 1.0 - std::exp(-ts[k]);
        CHECK(static_cast<double>(below[k]) / n == doctest::Approx(expected).epsilon(0.01));
    }
}

TEST_SUITE_END();

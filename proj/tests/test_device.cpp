#include <doctest.h>

#include <cmath>
#include <random>

#include "optoring/device.hpp"

using namespace optoring::device;

TEST_CASE("transparent membranes give bare cavity modes") {
    DeviceConfig c;
    c.q1 = 0.2;
    c.q2 = -0.3;
    c.transmission = 1.0 - 1e-12;
    const auto roots = optical_modes(c, 2.5, 16.0);
    REQUIRE(roots.size() >= 4);
    for (double k : roots) {
        const double m = k / M_PI;
        CHECK(std::abs(m - std::round(m)) < 1e-4);
    }
}

TEST_CASE("config validation") {
    DeviceConfig c;
    c.q1 = -0.1;
    c.q2 = -0.1;  // coincident membranes
    CHECK_FALSE(validate(c).empty());
    c.q2 = -0.3;
    c.transmission = 0.85;
    CHECK(validate(c).empty());
    c.transmission = 1.2;
    CHECK_FALSE(validate(c).empty());
}

TEST_CASE("all reported roots satisfy the secular equation") {
    DeviceConfig c;
    c.q1 = 0.2;
    c.q2 = -0.3;
    c.transmission = 0.85;
    const auto roots = optical_modes(c, 3.0, 30.0);
    REQUIRE(roots.size() >= 5);
    for (double k : roots) CHECK(std::abs(secular_residual(c, k)) < 1e-10);
}

TEST_CASE("at most three roots per free spectral range") {
    std::mt19937 rng(3u);
    std::uniform_real_distribution<double> ud(0.0, 1.0);
    for (int trial = 0; trial < 40; ++trial) {
        DeviceConfig c;
        c.q1 = -0.45 + 0.9 * ud(rng);
        c.q2 = c.q1 - (0.03 + (c.q1 + 0.47) * ud(rng));
        if (c.q2 < -0.48) continue;
        c.transmission = 0.55 + 0.4 * ud(rng);
        const double k0 = 5.0 + 20.0 * ud(rng);
        const auto roots = optical_modes(c, k0, k0 + 2.0 * M_PI, 4000);
        CHECK(roots.size() <= 3);
    }
}

TEST_CASE("roots move continuously under membrane displacement") {
    DeviceConfig c;
    c.q1 = 0.15;
    c.q2 = -0.22;
    c.transmission = 0.85;
    auto prev = optical_modes(c, 8.0, 14.0);
    REQUIRE(!prev.empty());
    for (int step = 1; step <= 20; ++step) {
        DeviceConfig cc = c;
        cc.q1 = 0.15 + 1e-3 * step;
        const auto now = optical_modes(cc, 8.0, 14.0);
        REQUIRE(now.size() == prev.size());
        for (size_t i = 0; i < now.size(); ++i)
            CHECK(std::abs(now[i] - prev[i]) < 0.6 / 10.0);
        prev = now;
    }
}

TEST_CASE("coupling formula agrees with finite-difference root motion") {
    DeviceConfig c;
    c.q1 = 0.2;
    c.q2 = -0.3;
    c.transmission = 0.85;
    const auto roots = optical_modes(c, 8.0, 16.0);
    REQUIRE(roots.size() >= 2);
    const double eps = 1e-6;
    for (double k0 : {roots[0], roots[1]}) {
        const auto g = bare_couplings(c, k0);
        for (int j = 0; j < 2; ++j) {
            auto move = [&](double h) {
                DeviceConfig cc = c;
                (j == 0 ? cc.q1 : cc.q2) += h;
                const auto r = optical_modes(cc, k0 - 0.2, k0 + 0.2, 400);
                REQUIRE(r.size() == 1);
                return r[0];
            };
            const double fd = (move(eps) - move(-eps)) / (2.0 * eps);
            const double closed = (j == 0 ? g.g_to_membrane_1 : g.g_to_membrane_2);
            CHECK(std::abs(fd - closed) / std::abs(closed) < 1e-4);
        }
    }
}

TEST_CASE("couplings vanish for transparent membranes") {
    DeviceConfig c;
    c.q1 = 0.2;
    c.q2 = -0.3;
    c.transmission = 1.0 - 1e-14;
    const auto roots = optical_modes(c, 8.0, 12.0);
    REQUIRE(!roots.empty());
    const auto g = bare_couplings(c, roots[0]);
    CHECK(std::abs(g.g_to_membrane_1) < 1e-5);
    CHECK(std::abs(g.g_to_membrane_2) < 1e-5);
}

TEST_CASE("symmetric configuration solve") {
    const auto sol = solve_symmetric_configuration(1.0, 0.85);
    CHECK(sol.converged);
    CHECK(sol.residual_norm < 1e-10);

    DeviceConfig c;
    c.q1 = sol.q1;
    c.q2 = sol.q2;
    c.transmission = 0.85;
    CHECK(std::abs(secular_residual(c, sol.k1)) < 1e-10);
    CHECK(std::abs(secular_residual(c, sol.k2)) < 1e-10);

    // defining symmetry of the ring configuration
    CHECK(std::abs(sol.g12 - sol.g21) < 1e-8 * std::abs(sol.g12));
    CHECK(std::abs(sol.g11 - sol.g22) < 1e-8 * std::abs(sol.g12));

    // cross slopes share one sign, diagonal slopes the opposite one
    CHECK(sol.g12 * sol.g21 > 0.0);
    CHECK(sol.g11 * sol.g22 > 0.0);
    CHECK(sol.g12 * sol.g11 < 0.0);

    CHECK(sol.g1_out > 0.0);
    CHECK(sol.g1_out >= std::abs(sol.g2_out));
    CHECK(sol.ratio_gminus_gplus == doctest::Approx(1.1846).epsilon(2e-3));
}

TEST_CASE("solution is stable under guess perturbation") {
    const auto ref = solve_symmetric_configuration(1.0, 0.85);
    auto guess = default_symmetric_guess();
    std::mt19937 rng(9u);
    std::uniform_real_distribution<double> ud(-0.01, 0.01);
    for (int trial = 0; trial < 5; ++trial) {
        SymmetricGuess g{guess.k1 * (1.0 + ud(rng)), guess.k2 * (1.0 + ud(rng)),
                         guess.q1 * (1.0 + ud(rng)), guess.q2 * (1.0 + ud(rng))};
        const auto sol = solve_symmetric_configuration(1.0, 0.85, g);
        CHECK(sol.converged);
        CHECK(sol.k1 == doctest::Approx(ref.k1).epsilon(1e-8));
        CHECK(sol.k2 == doctest::Approx(ref.k2).epsilon(1e-8));
        CHECK(sol.ratio_gminus_gplus == doctest::Approx(ref.ratio_gminus_gplus).epsilon(1e-8));
    }
}

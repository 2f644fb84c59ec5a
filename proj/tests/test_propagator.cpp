#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ptcav/oracle.hpp"
#include "ptcav/propagator.hpp"

using namespace ptcav;

TEST_CASE("identity at t = 0") {
    const Mat2 q = propagator({1.7, 0.9, 0.0}, 0.0).q;
    REQUIRE(max_abs_diff(q, Mat2::identity()) == 0.0);
}

TEST_CASE("exceptional-point matrix") {
    // (g=1, gamma=1, t=2) -> [[1+gamma*t, -i*g*t], [-i*g*t, 1-gamma*t]]
    const Mat2 q = propagator({1.0, 1.0, 0.0}, 2.0).q;
    REQUIRE(std::abs(q(0, 0) - cplx(3.0, 0.0)) < 1e-12);
    REQUIRE(std::abs(q(0, 1) - cplx(0.0, -2.0)) < 1e-12);
    REQUIRE(std::abs(q(1, 0) - cplx(0.0, -2.0)) < 1e-12);
    REQUIRE(std::abs(q(1, 1) - cplx(-1.0, 0.0)) < 1e-12);
}

TEST_CASE("PTS spot value") {
    const Mat2 q = propagator({1.0, 0.5, 0.0}, 1.0).q;
    REQUIRE(std::abs(q(0, 0).real() - 1.087661675181036) < 1e-14);
    REQUIRE(q(0, 0).imag() == 0.0);
    REQUIRE(std::abs(q(0, 1).imag() + 0.87960466065715781) < 1e-14);
    REQUIRE(q(0, 1).real() == 0.0);
    REQUIRE(std::abs(q(1, 1).real() - 0.20805701452387809) < 1e-14);
}

TEST_CASE("entry structure: diagonal real, off-diagonal imaginary and equal") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ug(0.1, 3.0), ut(0.0, 5.0);
    for (int k = 0; k < 500; ++k) {
        const Mat2 q = propagator({ug(rng), ug(rng), 0.0}, ut(rng)).q;
        REQUIRE(q(0, 0).imag() == 0.0);
        REQUIRE(q(1, 1).imag() == 0.0);
        REQUIRE(q(0, 1).real() == 0.0);
        REQUIRE(q(0, 1) == q(1, 0));
    }
}

TEST_CASE("unit determinant") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> ug(0.1, 3.0), ut(0.0, 5.0);
    for (int k = 0; k < 2000; ++k) {
        const Mat2 q = propagator({ug(rng), ug(rng), 0.0}, ut(rng)).q;
        const double scale = std::max(1.0, q.max_abs() * q.max_abs());
        REQUIRE(std::abs(q.det() - cplx(1.0)) / scale < 1e-12);
    }
}

TEST_CASE("semigroup law") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> ug(0.1, 3.0), ut(0.0, 2.5);
    for (int k = 0; k < 2000; ++k) {
        const SystemParams p{ug(rng), ug(rng), 0.0};
        const double t1 = ut(rng), t2 = ut(rng);
        const Mat2 qa = propagator(p, t1).q;
        const Mat2 qb = propagator(p, t2).q;
        const Mat2 qc = propagator(p, t1 + t2).q;
        const double scale = std::max(1.0, qa.max_abs() * qb.max_abs());
        REQUIRE(max_abs_diff(qc, qa * qb) / scale < 1e-10);
    }
}

TEST_CASE("continuity across gamma = g") {
    for (const double t : {0.5, 1.0, 2.0}) {
        const Mat2 at_ep = propagator({1.0, 1.0, 0.0}, t).q;
        for (const double delta : {-1e-6, 1e-6}) {
            const Mat2 q = propagator({1.0, 1.0 + delta, 0.0}, t).q;
            REQUIRE(max_abs_diff(q, at_ep) < 1e-5);
        }
    }
}

TEST_CASE("agrees with the scaled-Taylor matrix exponential") {
    for (const double gamma : {0.5, 1.0, 1.1}) {
        const SystemParams p{1.0, gamma, 0.0};
        REQUIRE(max_abs_diff(propagator(p, 1.0).q, oracle::expm_taylor(p, 1.0)) < 1e-10);
    }
    // larger ||Kt||, scale-relative
    std::mt19937_64 rng(14);
    std::uniform_real_distribution<double> ug(0.1, 3.0), ut(0.0, 5.0);
    for (int k = 0; k < 200; ++k) {
        const SystemParams p{ug(rng), ug(rng), 0.0};
        const double t = ut(rng);
        const Mat2 a = propagator(p, t).q;
        const Mat2 b = oracle::expm_taylor(p, t);
        REQUIRE(max_abs_diff(a, b) / std::max(1.0, b.max_abs()) < 1e-10);
    }
}

TEST_CASE("propagator rejects negative time") {
    REQUIRE_THROWS_AS(propagator({1.0, 0.5, 0.0}, -1.0), std::invalid_argument);
}

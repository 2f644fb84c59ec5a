#include <catch2/catch_amalgamated.hpp>

#include "ptcav/system.hpp"

using namespace ptcav;

TEST_CASE("regime classification") {
    REQUIRE(classify_regime({1.0, 0.5, 0.0}) == Regime::PTS);
    REQUIRE(classify_regime({1.0, 1.1, 0.0}) == Regime::PTSB);
    REQUIRE(classify_regime({1.0, 1.0, 0.0}) == Regime::ExceptionalPoint);
    // the tolerance band is relative
    REQUIRE(classify_regime({1.0, 1.0 + 1e-14, 0.0}) == Regime::ExceptionalPoint);
    REQUIRE(classify_regime({1.0, 1.0 + 1e-5, 0.0}) == Regime::PTSB);
}

TEST_CASE("eigenvalue pairs per regime") {
    {
        const auto [lp, lm] = eigenvalues({1.0, 0.0, 0.0});  // lossless coupled modes
        REQUIRE(lp == cplx(1.0, 0.0));
        REQUIRE(lm == cplx(-1.0, 0.0));
    }
    {
        const auto [lp, lm] = eigenvalues({1.0, 1.0, 0.0});  // coalescence at the EP
        REQUIRE(lp == cplx(0.0, 0.0));
        REQUIRE(lm == cplx(0.0, 0.0));
    }
    {
        const auto [lp, lm] = eigenvalues({1.0, 1.25, 0.0});  // sqrt(1.5625-1) = 0.75
        REQUIRE(std::abs(lp - cplx(0.0, 0.75)) < 1e-15);
        REQUIRE(std::abs(lm - cplx(0.0, -0.75)) < 1e-15);
    }
    // ordering rule: nonnegative real part first, then nonnegative imaginary
    const auto [lp, lm] = eigenvalues({2.0, 1.0, 0.0});
    REQUIRE(lp.real() >= 0.0);
    REQUIRE(lm.real() <= 0.0);
}

TEST_CASE("parameter validation") {
    REQUIRE_THROWS_AS(validate(SystemParams{-1.0, 0.5, 0.0}), std::invalid_argument);
    REQUIRE_THROWS_AS(validate(SystemParams{1.0, -0.5, 0.0}), std::invalid_argument);
    REQUIRE_NOTHROW(validate(SystemParams{0.0, 0.5, 0.0}));  // zeno baseline
}

TEST_CASE("generator layout") {
    const Mat2 b = dynamics_generator({1.5, 0.25, 0.0});
    REQUIRE(b(0, 0) == cplx(0.25, 0.0));
    REQUIRE(b(1, 1) == cplx(-0.25, 0.0));
    REQUIRE(b(0, 1) == cplx(0.0, -1.5));
    REQUIRE(b(1, 0) == cplx(0.0, -1.5));
}

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "ptcav/noise.hpp"
#include "ptcav/oracle.hpp"

using namespace ptcav;

TEST_CASE("noise integrals vanish at t = 0") {
    const NoiseIntegrals ni = noise_integrals({1.0, 0.7, 0.0}, 0.0);
    REQUIRE(ni.d.max_abs() == 0.0);
    REQUIRE(ni.acomm.max_abs() == 0.0);
}

TEST_CASE("primitive integrals at (g=1, gamma=0.5, t=1)") {
    const auto [icc, ics, iss] = noise_primitives(-0.75, 1.0);
    REQUIRE(std::abs(icc - 0.78493004959125701) < 1e-15);
    REQUIRE(std::abs(ics - 0.38685217952489687) < 1e-15);
    REQUIRE(std::abs(iss - 0.28675993387832405) < 1e-15);
}

TEST_CASE("closed-form entries at (g=1, gamma=0.5, t=1)") {
    const NoiseIntegrals ni = noise_integrals({1.0, 0.5, 0.0}, 1.0);
    REQUIRE(std::abs(ni.d(0, 0).real() - 1.2434722125857349) < 1e-14);
    REQUIRE(std::abs(ni.d(1, 1).real() - 0.28675993387832405) < 1e-14);
    REQUIRE(std::abs(ni.d(0, 1) - cplx(0.0, -0.53023214646405892)) < 1e-14);
    REQUIRE(std::abs(ni.acomm(0, 0).real() - 0.28675993387832405) < 1e-14);
    REQUIRE(std::abs(ni.acomm(1, 1).real() - 0.46976785353594114) < 1e-14);
    REQUIRE(std::abs(ni.acomm(0, 1) - cplx(0.0, -0.24347221258573484)) < 1e-14);
}

TEST_CASE("gain and loss integrals are Hermitian PSD and share D22 = A11") {
    for (const double gamma : {0.25, 1.0, 1.5}) {
        for (const double t : {0.3, 1.0, 2.7}) {
            const NoiseIntegrals ni = noise_integrals({1.0, gamma, 0.0}, t);
            REQUIRE(hermiticity_defect(ni.d) < 1e-13);
            REQUIRE(hermiticity_defect(ni.acomm) < 1e-13);
            REQUIRE(min_eigenvalue_hermitian(ni.d) > -1e-12);
            REQUIRE(min_eigenvalue_hermitian(ni.acomm) > -1e-12);
            REQUIRE(ni.d(1, 1) == ni.acomm(0, 0));
        }
    }
}

TEST_CASE("diagonals are nondecreasing in t") {
    const SystemParams p{1.0, 0.8, 0.0};
    double d11 = -1.0, d22 = -1.0, a11 = -1.0, a22 = -1.0;
    for (int i = 0; i <= 60; ++i) {
        const NoiseIntegrals ni = noise_integrals(p, 0.05 * i);
        REQUIRE(ni.d(0, 0).real() >= d11);
        REQUIRE(ni.d(1, 1).real() >= d22);
        REQUIRE(ni.acomm(0, 0).real() >= a11);
        REQUIRE(ni.acomm(1, 1).real() >= a22);
        d11 = ni.d(0, 0).real();
        d22 = ni.d(1, 1).real();
        a11 = ni.acomm(0, 0).real();
        a22 = ni.acomm(1, 1).real();
    }
}

TEST_CASE("closed forms match Simpson quadrature") {
    for (const double gamma : {0.25, 0.9, 1.0, 1.5}) {
        for (const double t : {0.5, 1.0, 3.0}) {
            const SystemParams p{1.0, gamma, 0.0};
            const NoiseIntegrals cf = noise_integrals(p, t);
            const NoiseIntegrals qd = oracle::quad_noise_integrals(p, t, 2000);
            const double scale = std::max({1.0, qd.d.max_abs(), qd.acomm.max_abs()});
            REQUIRE(max_abs_diff(cf.d, qd.d) / scale < 1e-8);
            REQUIRE(max_abs_diff(cf.acomm, qd.acomm) / scale < 1e-8);
        }
    }
}

// Regression against the reference closed form for the lossy-mode vacuum
// photon number, n_a2 = (g^2 gamma / 2 Omega^2) [-2t + sinh(2 Omega t)/Omega],
// evaluated through complex Omega so one expression covers both regimes.
TEST_CASE("D22 reproduces the lossy-mode reference closed form") {
    for (const double gamma : {0.5, 1.1}) {
        for (const double t : {0.5, 1.0, 2.0}) {
            const std::complex<double> om = std::sqrt(std::complex<double>(gamma * gamma - 1.0));
            const std::complex<double> reference =
                gamma / (2.0 * om * om) * (-2.0 * t + std::sinh(2.0 * om * t) / om);
            const NoiseIntegrals ni = noise_integrals({1.0, gamma, 0.0}, t);
            REQUIRE(std::abs(reference.imag()) < 1e-12);
            REQUIRE(std::abs(ni.d(1, 1).real() - reference.real()) <
                    1e-9 * std::max(1.0, std::abs(reference.real())));
        }
    }
}

TEST_CASE("noise_integrals rejects negative time") {
    REQUIRE_THROWS_AS(noise_integrals({1.0, 0.5, 0.0}, -0.5), std::invalid_argument);
}

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "ptcav/moments.hpp"
#include "ptcav/oracle.hpp"
#include "ptcav/states.hpp"

using namespace ptcav;

namespace {
const InputState kFamilies[] = {Vacuum{},
                                Coherent{1, std::numbers::pi / 4, 1, std::numbers::pi / 4},
                                Noon{1}, Thermal{1.0}};
}

TEST_CASE("vacuum propagation is exactly the noise matrix") {
    const SystemParams p{1.0, 0.5, 0.0};
    for (const double t : {0.4, 1.0, 2.3}) {
        const MomentState st = propagate(p, initial_moments(Vacuum{}), t);
        const NoiseIntegrals ni = noise_integrals(p, t);
        REQUIRE(max_abs_diff(st.nmat, ni.d) < 1e-15);
        REQUIRE(st.mmat.max_abs() == 0.0);
        REQUIRE(std::abs(st.mu.v1) == 0.0);
    }
    const MomentState at1 = propagate(p, initial_moments(Vacuum{}), 1.0);
    REQUIRE(std::abs(at1.nmat(1, 1).real() - 0.28675993387832405) < 1e-12);
}

TEST_CASE("decoupled limit matches the closed scalar solutions") {
    // g -> 0, coherent input: n1 = e^{2 gamma t}(r1^2+1) - 1, n2 = e^{-2 gamma t} r2^2
    const double r1 = 1.2, r2 = 0.7, gamma = 0.6, t = 1.3;
    const SystemParams p{0.0, gamma, 0.0};
    const MomentState st = propagate(p, initial_moments(Coherent{r1, 0.3, r2, 1.1}), t);
    const double n1 = std::exp(2 * gamma * t) * (r1 * r1 + 1) - 1;
    const double n2 = std::exp(-2 * gamma * t) * r2 * r2;
    REQUIRE(std::abs(st.nmat(0, 0).real() - n1) < 1e-12 * n1);
    REQUIRE(std::abs(st.nmat(1, 1).real() - n2) < 1e-12);
}

TEST_CASE("propagation preserves the moment-state invariants") {
    for (const auto& fam : kFamilies) {
        for (const double gamma : {0.25, 1.0, 1.5}) {
            for (const double t : {0.5, 2.0, 3.0}) {
                const MomentState st = propagate({1.0, gamma, 0.0}, initial_moments(fam), t);
                REQUIRE(hermiticity_defect(st.nmat) < 1e-12 * std::max(1.0, st.nmat.max_abs()));
                REQUIRE(symmetry_defect(st.mmat) < 1e-12 * std::max(1.0, st.mmat.max_abs()));
                REQUIRE(nmat_min_eigenvalue(st) > -1e-10);
                REQUIRE(st.t == t);
            }
        }
    }
}

TEST_CASE("propagation keeps arbitrary PSD inputs PSD") {
    // N(t) = conj(Q) N Q^T + D is a congruence of a PSD matrix plus a PSD
    // matrix, so positivity must survive for any admissible input, not just
    // the four state families.
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(-1.0, 1.0), ug(0.1, 2.0), ut(0.0, 3.0);
    for (int k = 0; k < 300; ++k) {
        Mat2 a;
        for (int i = 0; i < 4; ++i) a.m[i] = cplx(u(rng), u(rng));
        MomentState st;
        st.nmat = a.adjoint() * a;
        const MomentState out = propagate({1.0, ug(rng), 0.0}, st, ut(rng));
        REQUIRE(nmat_min_eigenvalue(out) > -1e-10);
        REQUIRE(hermiticity_defect(out.nmat) < 1e-12 * std::max(1.0, out.nmat.max_abs()));
    }
}

TEST_CASE("composition: a mid-trajectory state re-based to t = 0 continues exactly") {
    const SystemParams p{1.0, 0.8, 0.0};
    for (const auto& fam : kFamilies) {
        const double t1 = 0.7, t2 = 1.1;
        const MomentState direct = propagate(p, initial_moments(fam), t1 + t2);
        MomentState mid = propagate(p, initial_moments(fam), t1);
        mid.t = 0.0;  // re-base: linear map + additive noise
        const MomentState stepped = propagate(p, mid, t2);
        const double scale = std::max(1.0, direct.nmat.max_abs());
        REQUIRE(max_abs_diff(direct.nmat, stepped.nmat) / scale < 1e-9);
        REQUIRE(max_abs_diff(direct.mmat, stepped.mmat) / scale < 1e-9);
        REQUIRE(std::abs(direct.mu.v1 - stepped.mu.v1) < 1e-9 * scale);
    }
}

TEST_CASE("agreement with the RK4 oracle across regimes") {
    for (const auto& fam : kFamilies) {
        for (const double gamma : {0.5, 1.0, 1.1}) {
            const SystemParams p{1.0, gamma, 0.0};
            const MomentState a = propagate(p, initial_moments(fam), 2.0);
            const MomentState b = oracle::ode_moments(p, initial_moments(fam), 2.0, 1e-3);
            const double scale = std::max(1.0, b.nmat.max_abs());
            REQUIRE(max_abs_diff(a.nmat, b.nmat) / scale < 1e-6);
            REQUIRE(max_abs_diff(a.mmat, b.mmat) / scale < 1e-6);
        }
    }
}

// Regression of the general-n NOON reference closed form for the lossy mode,
// <a2^dag a2> = [-2 g^2 gamma Om t + n Om^3 cosh^2(Om t)
//               + n Om (g^2+gamma^2) sinh^2(Om t)
//               + gamma (g^2 - n Om^2) sinh(2 Om t)] / (2 Om^3),
// evaluated through complex Omega so both regimes share one expression.
TEST_CASE("NOON lossy-mode photon number matches the reference closed form") {
    for (int n : {1, 2, 3}) {
        for (const double gamma : {0.5, 1.1}) {
            for (const double t : {0.5, 1.0, 2.0}) {
                const std::complex<double> om =
                    std::sqrt(std::complex<double>(gamma * gamma - 1.0));
                const std::complex<double> ch = std::cosh(om * t), sh = std::sinh(om * t);
                const std::complex<double> reference =
                    (-2.0 * gamma * om * t + double(n) * om * om * om * ch * ch +
                     double(n) * om * (1.0 + gamma * gamma) * sh * sh +
                     gamma * (1.0 - double(n) * om * om) * std::sinh(2.0 * om * t)) /
                    (2.0 * om * om * om);
                const MomentState st = propagate({1.0, gamma, 0.0}, initial_moments(Noon{n}), t);
                REQUIRE(std::abs(reference.imag()) < 1e-10);
                REQUIRE(std::abs(st.nmat(1, 1).real() - reference.real()) <
                        1e-9 * std::max(1.0, std::abs(reference.real())));
            }
        }
    }
}

TEST_CASE("commutator defect vanishes") {
    REQUIRE(commutator_defect({1.0, 0.5, 0.0}, 0.0).max_abs() == 0.0);
    for (const double t : {0.5, 1.0, 2.0})
        REQUIRE(commutator_defect({1.0, 0.5, 0.0}, t).max_abs() < 1e-9);
    // and at the exceptional point
    REQUIRE(commutator_defect({1.0, 1.0, 0.0}, 3.0).max_abs() < 1e-9);
}

TEST_CASE("propagate input validation") {
    const SystemParams p{1.0, 0.5, 0.0};
    const MomentState st0 = initial_moments(Thermal{1.0});
    REQUIRE_THROWS_AS(propagate(p, st0, -0.1), std::invalid_argument);

    MomentState shifted = st0;
    shifted.t = 0.5;
    REQUIRE_THROWS_AS(propagate(p, shifted, 1.0), std::invalid_argument);

    MomentState broken = st0;
    broken.nmat(0, 1) = cplx(0.3, 0.0);  // breaks Hermiticity beyond 1e-10
    REQUIRE_THROWS_AS(propagate(p, broken, 1.0), std::invalid_argument);

    MomentState negative = st0;
    negative.nmat(0, 0) = cplx(-0.5, 0.0);  // not PSD
    REQUIRE_THROWS_AS(propagate(p, negative, 1.0), std::invalid_argument);
}

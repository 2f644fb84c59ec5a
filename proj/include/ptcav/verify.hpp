#pragma once

// Self-verification grids: every structural identity of the closed forms is
// checked against either an exact identity or the oracle module.  Used by
// the `verify` CLI subcommand and reused by the acceptance suite.

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "ptcav/moments.hpp"
#include "ptcav/oracle.hpp"
#include "ptcav/witnesses.hpp"

namespace ptcav {

struct VerifyCheck {
    std::string name;
    double tolerance = 0.0;   // tolerance actually applied
    double max_error = 0.0;
    bool pass = false;
    // Checks already at the round-off floor (or limited by a fixed parameter
    // offset) are exempt from --strict tightening.
    bool strict_exempt = false;
    std::string note;
};

struct VerifyOptions {
    bool strict = false;  // tighten non-exempt tolerances by one decade
};

namespace detail {

inline VerifyCheck make_check(std::string name, double base_tol, double max_err, bool exempt,
                              const VerifyOptions& opt, std::string note = "") {
    VerifyCheck c;
    c.name = std::move(name);
    c.tolerance = (opt.strict && !exempt) ? base_tol / 10.0 : base_tol;
    c.max_error = max_err;
    c.pass = max_err <= c.tolerance;
    c.strict_exempt = exempt;
    c.note = std::move(note);
    return c;
}

}  // namespace detail

inline std::vector<VerifyCheck> run_verification(const VerifyOptions& opt = {}) {
    std::vector<VerifyCheck> checks;
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    auto uni = [&rng](double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    };
    constexpr int kPoints = 1200;

    // det Q = 1.  Entries grow like cosh(|Omega| t), so the defect is
    // measured relative to the squared matrix scale.
    {
        double worst = 0.0;
        for (int k = 0; k < kPoints; ++k) {
            const SystemParams p{uni(0.1, 3.0), uni(0.1, 3.0), 0.0};
            const Mat2 q = propagator(p, uni(0.0, 5.0)).q;
            const double scale = std::max(1.0, q.max_abs() * q.max_abs());
            worst = std::max(worst, std::abs(q.det() - cplx(1.0)) / scale);
        }
        checks.push_back(detail::make_check("det-q", 1e-12, worst, true, opt,
                                            "relative to ||Q||^2; round-off limited"));
    }

    // c^2 - s*sh^2 = 1 across both branches and the series window.
    {
        double worst = 0.0;
        for (int k = 0; k < kPoints; ++k) {
            const double s = uni(-9.0, 9.0);
            const double t = uni(0.0, 5.0);
            const auto [c, sh] = hyperbolic_pair(s, t);
            const double scale = std::max(1.0, std::abs(c * c) + std::abs(s) * sh * sh);
            worst = std::max(worst, std::abs(c * c - s * sh * sh - 1.0) / scale);
        }
        checks.push_back(detail::make_check("hyperbolic-identity", 1e-12, worst, true, opt,
                                            "relative; round-off limited"));
    }

    // Q(t1 + t2) = Q(t1) Q(t2); K is time-independent.
    {
        double worst = 0.0;
        for (int k = 0; k < kPoints; ++k) {
            const SystemParams p{uni(0.1, 3.0), uni(0.1, 3.0), 0.0};
            const double t1 = uni(0.0, 2.5), t2 = uni(0.0, 2.5);
            const Mat2 qa = propagator(p, t1).q;
            const Mat2 qb = propagator(p, t2).q;
            const Mat2 qc = propagator(p, t1 + t2).q;
            const double scale = std::max(1.0, qa.max_abs() * qb.max_abs());
            worst = std::max(worst, max_abs_diff(qc, qa * qb) / scale);
        }
        checks.push_back(
            detail::make_check("semigroup", 1e-10, worst, false, opt, "relative to ||Q1||*||Q2||"));
    }

    // Continuity across the exceptional point: gamma = g +- 1e-6 versus the
    // series branch at gamma = g.  Bounded by dQ/dgamma * 1e-6, not round-off.
    {
        constexpr double pinned[] = {0.5, 1.0, 2.0};
        double worst = 0.0;
        for (int k = 0; k < kPoints; ++k) {
            const double delta = uni(-1e-6, 1e-6);
            // every fourth point hits one of the pinned times exactly
            const double t = (k % 4 == 0) ? pinned[(k / 4) % 3] : uni(0.0, 2.0);
            const Mat2 qa = propagator({1.0, 1.0 + delta, 0.0}, t).q;
            const Mat2 qb = propagator({1.0, 1.0, 0.0}, t).q;
            worst = std::max(worst, max_abs_diff(qa, qb));
        }
        checks.push_back(detail::make_check("ep-continuity", 1e-5, worst, true, opt,
                                            "absolute at gamma = g +- 1e-6; offset limited"));
    }

    // QQ^dag - conj(D) + A = I, the canonical-commutator identity.
    {
        double worst = 0.0;
        for (int k = 0; k < kPoints; ++k) {
            const SystemParams p{1.0, uni(0.1, 2.0), 0.0};
            worst = std::max(worst, commutator_defect(p, uni(0.0, 3.0)).max_abs());
        }
        checks.push_back(detail::make_check("commutator-defect", 1e-9, worst, false, opt));
    }

    // Closed-form noise integrals against composite Simpson quadrature.
    {
        double worst = 0.0;
        for (double gamma : {0.25, 0.5, 0.9, 1.0, 1.1, 1.5})
            for (double t : {0.5, 1.0, 2.0, 3.0}) {
                const SystemParams p{1.0, gamma, 0.0};
                const NoiseIntegrals cf = noise_integrals(p, t);
                const NoiseIntegrals qd = oracle::quad_noise_integrals(p, t, 2000);
                const double scale =
                    std::max({1e-30, qd.d.max_abs(), qd.acomm.max_abs()});
                const double err =
                    std::max(max_abs_diff(cf.d, qd.d), max_abs_diff(cf.acomm, qd.acomm));
                worst = std::max(worst, err / scale);
            }
        checks.push_back(detail::make_check("noise-quadrature", 1e-8, worst, false, opt,
                                            "Simpson, 2000 panels"));
    }

    // Closed-form propagation against RK4 moment integration, all families.
    {
        const InputState families[] = {Vacuum{}, Coherent{1.0, std::numbers::pi / 4, 1.0,
                                                          std::numbers::pi / 4},
                                       Noon{1}, Thermal{1.0}};
        double worst = 0.0;
        for (double gamma : {0.25, 0.5, 0.9, 1.0, 1.1, 1.5})
            for (double t : {0.5, 1.0, 2.0, 3.0})
                for (const auto& fam : families) {
                    const SystemParams p{1.0, gamma, 0.0};
                    const MomentState st0 = initial_moments(fam);
                    const MomentState a = propagate(p, st0, t);
                    const MomentState b = oracle::ode_moments(p, st0, t, 1e-3);
                    const double scale = std::max(1.0, b.nmat.max_abs());
                    const double err = std::max(
                        {max_abs_diff(a.nmat, b.nmat), max_abs_diff(a.mmat, b.mmat),
                         std::abs(a.mu.v1 - b.mu.v1), std::abs(a.mu.v2 - b.mu.v2)});
                    worst = std::max(worst, err / scale);
                }
        checks.push_back(
            detail::make_check("ode-agreement", 1e-6, worst, false, opt, "RK4, dt = 1e-3"));
    }

    return checks;
}

}  // namespace ptcav

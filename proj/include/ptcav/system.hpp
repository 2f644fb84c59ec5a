#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

#include "ptcav/mat2.hpp"

namespace ptcav {

// Two coupled cavities with balanced gain/loss.  The rotating frame removes
// the common optical frequency, so omega is carried for bookkeeping only.
struct SystemParams {
    double g = 1.0;       // intermode coupling strength (inverse time)
    double gamma = 0.0;   // common gain (mode 1) / loss (mode 2) rate
    double omega = 0.0;   // optical carrier; never enters the dynamics

    // Regime discriminant: s < 0 PTS, s = 0 exceptional point, s > 0 PTSB.
    double s() const { return gamma * gamma - g * g; }
};

// g = 0 is accepted even though the physical system has g > 0: the
// zero-coupling run is the baseline of the Zeno parameter.
inline void validate(const SystemParams& p) {
    if (!(p.g >= 0.0) || !std::isfinite(p.g))
        throw std::invalid_argument("SystemParams: g must be finite and >= 0");
    if (!(p.gamma >= 0.0) || !std::isfinite(p.gamma))
        throw std::invalid_argument("SystemParams: gamma must be finite and >= 0");
}

enum class Regime { PTS, ExceptionalPoint, PTSB };

inline const char* to_string(Regime r) {
    switch (r) {
        case Regime::PTS: return "PTS";
        case Regime::ExceptionalPoint: return "EP";
        case Regime::PTSB: return "PTSB";
    }
    return "?";
}

// Classification tolerance, relative to the larger of g^2 and gamma^2.
// Informational only: all numerics downstream are branch-free in s.
inline constexpr double kEpRelTol = 1e-12;

inline Regime classify_regime(const SystemParams& p) {
    validate(p);
    const double s = p.s();
    const double scale = std::max(p.g * p.g, p.gamma * p.gamma);
    if (std::abs(s) <= kEpRelTol * scale) return Regime::ExceptionalPoint;
    return s < 0.0 ? Regime::PTS : Regime::PTSB;
}

// Eigenvalues of the effective Hamiltonian K = [[i*gamma, g], [g, -i*gamma]]:
// +-sqrt(g^2 - gamma^2) below the exceptional point, +-i*sqrt(gamma^2 - g^2)
// above it.  The first element has nonnegative real part, then nonnegative
// imaginary part.
inline std::pair<cplx, cplx> eigenvalues(const SystemParams& p) {
    validate(p);
    const double s = p.s();
    if (s <= 0.0) {
        const double w = std::sqrt(-s);
        return {cplx(w, 0.0), cplx(-w, 0.0)};
    }
    const double w = std::sqrt(s);
    return {cplx(0.0, w), cplx(0.0, -w)};
}

// Generator of the rotating-frame dynamics, B = -iK.
inline Mat2 dynamics_generator(const SystemParams& p) {
    Mat2 b;
    b(0, 0) = cplx(p.gamma, 0.0);
    b(0, 1) = cplx(0.0, -p.g);
    b(1, 0) = cplx(0.0, -p.g);
    b(1, 1) = cplx(-p.gamma, 0.0);
    return b;
}

}  // namespace ptcav

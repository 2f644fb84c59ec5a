#pragma once

#include <cmath>
#include <stdexcept>

namespace ptcav {

// Branch-safe evaluation of the mode-mixing kernel.
//
// The 2x2 generator B = -iK satisfies B^2 = s*I with s = gamma^2 - g^2, so
// exp(Bt) = c(s,t)*I + sh(s,t)*B where
//
//   c(s,t)  = cosh(sqrt(s)*t)          (= cos(sqrt(-s)*t) for s < 0, 1 at s = 0)
//   sh(s,t) = sinh(sqrt(s)*t)/sqrt(s)  (= sin(sqrt(-s)*t)/sqrt(-s), t at s = 0)
//
// Both are entire functions of x = s*t^2, which makes the exceptional point
// s = 0 a removable singularity: one formula covers the PTS, EP and PTSB
// regimes without ever materializing a square root of a possibly negative
// number.  Near x = 0 the closed forms lose digits (sinh(x)/x style
// cancellation), so below |x| = 1e-4 we switch to the truncated Taylor
// series; 8 terms keep the relative truncation error under 1e-15 there.

inline constexpr double kSeriesThreshold = 1e-4;

// cosh(sqrt(x)) continued to all real x.
inline double cosh_sqrt(double x) {
    if (std::abs(x) < kSeriesThreshold) {
        double term = 1.0, sum = 1.0;
        for (int k = 1; k < 8; ++k) {
            term *= x / ((2.0 * k - 1.0) * (2.0 * k));
            sum += term;
        }
        return sum;
    }
    return x > 0 ? std::cosh(std::sqrt(x)) : std::cos(std::sqrt(-x));
}

// sinh(sqrt(x))/sqrt(x) continued to all real x; equals 1 at x = 0.
inline double sinhc_sqrt(double x) {
    if (std::abs(x) < kSeriesThreshold) {
        double term = 1.0, sum = 1.0;
        for (int k = 1; k < 8; ++k) {
            term *= x / ((2.0 * k) * (2.0 * k + 1.0));
            sum += term;
        }
        return sum;
    }
    if (x > 0) {
        const double r = std::sqrt(x);
        return std::sinh(r) / r;
    }
    const double r = std::sqrt(-x);
    return std::sin(r) / r;
}

// (sinhc_sqrt(x) - 1)/x = sum_k x^k / (2k+3)!, the next function in the
// ladder; needed by the noise integrals where the subtraction would
// otherwise cancel catastrophically.  Series radius is pushed to |x| < 0.5
// because the cancellation, not the truncation, limits accuracy here.
inline double sinhc3_sqrt(double x) {
    if (std::abs(x) < 0.5) {
        double term = 1.0 / 6.0, sum = term;
        for (int k = 1; k < 12; ++k) {
            term *= x / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
            sum += term;
        }
        return sum;
    }
    return (sinhc_sqrt(x) - 1.0) / x;
}

struct HyperbolicPair {
    double c;   // cosh-like factor, dimensionless
    double sh;  // sinh-like factor, carries one power of time
};

// Evaluate (c, sh) at discriminant s = gamma^2 - g^2 and time t >= 0.
// Satisfies c^2 - s*sh^2 = 1 for all s, t.
inline HyperbolicPair hyperbolic_pair(double s, double t) {
    if (!(t >= 0.0)) throw std::invalid_argument("hyperbolic_pair: t must be >= 0");
    const double x = s * t * t;
    return {cosh_sqrt(x), t * sinhc_sqrt(x)};
}

}  // namespace ptcav

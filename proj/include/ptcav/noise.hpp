#pragma once

#include <stdexcept>

#include "ptcav/hyperbolic.hpp"
#include "ptcav/mat2.hpp"
#include "ptcav/system.hpp"

namespace ptcav {

// Accumulated bath contributions to the second moments at time t:
//
//   d[i][j]     = 2*gamma * int_0^t conj(Q_i1(tau)) Q_j1(tau) dtau
//   acomm[i][j] = 2*gamma * int_0^t Q_i2(tau) conj(Q_j2(tau)) dtau
//
// d feeds the normal-ordered matrix N (gain bath), acomm the anti-normal
// combination <a a^dagger> (loss bath).  Both are Hermitian PSD Gram
// matrices and vanish at t = 0.
struct NoiseIntegrals {
    Mat2 d;
    Mat2 acomm;
    double t = 0.0;
};

// The three primitive integrals over [0, t] of products of the kernel pair
// c(tau), sh(tau); everything in d/acomm is a linear combination of them.
//
//   icc = int c^2   = t/2 + sh(s,2t)/4
//   ics = int c*sh  = sh(s,t)^2/2            (since sh' = c)
//   iss = int sh^2  = (sh(s,2t)/4 - t/2)/s   = 2 t^3 * sinhc3(4 s t^2)
//
// The sinhc3 form removes the 1/s pole at the exceptional point.
struct NoisePrimitives {
    double icc, ics, iss;
};

inline NoisePrimitives noise_primitives(double s, double t) {
    if (!(t >= 0.0)) throw std::invalid_argument("noise_primitives: t must be >= 0");
    const double sh_t = hyperbolic_pair(s, t).sh;
    const double sh_2t = hyperbolic_pair(s, 2.0 * t).sh;
    return {t / 2.0 + sh_2t / 4.0, sh_t * sh_t / 2.0,
            2.0 * t * t * t * sinhc3_sqrt(4.0 * s * t * t)};
}

// Closed forms obtained by term-wise integration of the Q-entry products
// (Q11 = c + gamma*sh, Q22 = c - gamma*sh, Q12 = Q21 = -i*g*sh).  Off-
// diagonals are purely imaginary; the quadrature oracle fixes their sign.
inline NoiseIntegrals noise_integrals(const SystemParams& p, double t) {
    validate(p);
    const auto [icc, ics, iss] = noise_primitives(p.s(), t);
    const double tg = 2.0 * p.gamma;
    const double g = p.g;
    const double ga = p.gamma;

    NoiseIntegrals ni;
    ni.t = t;
    ni.d(0, 0) = cplx(tg * (icc + 2.0 * ga * ics + ga * ga * iss), 0.0);
    ni.d(1, 1) = cplx(tg * g * g * iss, 0.0);
    ni.d(0, 1) = cplx(0.0, -tg * g * (ics + ga * iss));
    ni.d(1, 0) = std::conj(ni.d(0, 1));

    ni.acomm(0, 0) = cplx(tg * g * g * iss, 0.0);
    ni.acomm(1, 1) = cplx(tg * (icc - 2.0 * ga * ics + ga * ga * iss), 0.0);
    ni.acomm(0, 1) = cplx(0.0, -tg * g * (ics - ga * iss));
    ni.acomm(1, 0) = std::conj(ni.acomm(0, 1));
    return ni;
}

}  // namespace ptcav

#pragma once

#include <stdexcept>

#include "ptcav/hyperbolic.hpp"
#include "ptcav/mat2.hpp"
#include "ptcav/system.hpp"

namespace ptcav {

// Q(t) = exp(-iKt).  Q11 and Q22 are real, Q12 = Q21 purely imaginary, and
// det Q = 1 exactly (K is traceless).  At the exceptional point the matrix
// degenerates to [[1+gamma*t, -i*g*t], [-i*g*t, 1-gamma*t]].
struct Propagator {
    Mat2 q;
    double t = 0.0;
    SystemParams params;
};

inline Propagator propagator(const SystemParams& p, double t) {
    validate(p);
    const auto [c, sh] = hyperbolic_pair(p.s(), t);
    Mat2 q;
    q(0, 0) = cplx(c + p.gamma * sh, 0.0);
    q(0, 1) = cplx(0.0, -p.g * sh);
    q(1, 0) = cplx(0.0, -p.g * sh);
    q(1, 1) = cplx(c - p.gamma * sh, 0.0);
    return {q, t, p};
}

}  // namespace ptcav

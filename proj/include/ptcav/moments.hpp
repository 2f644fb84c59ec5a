#pragma once

#include <stdexcept>

#include "ptcav/moment_state.hpp"
#include "ptcav/noise.hpp"
#include "ptcav/propagator.hpp"

namespace ptcav {

// Exact moment map over [0, t]:
//   mu(t) = Q mu(0)
//   N(t)  = conj(Q) N(0) Q^T + D(t)
//   M(t)  = Q M(0) Q^T                (no anomalous noise source)
// state0 must sit at t = 0; a mid-trajectory state can be re-based by
// resetting its time stamp (the dynamics is a time-invariant linear map
// with additive noise).
inline MomentState propagate(const SystemParams& p, const MomentState& state0, double t) {
    if (!(t >= 0.0)) throw std::invalid_argument("propagate: t must be >= 0");
    if (state0.t != 0.0)
        throw std::invalid_argument("propagate: state0 must be an initial (t = 0) state");
    validate(state0, 1e-10);

    const Mat2 q = propagator(p, t).q;
    const NoiseIntegrals ni = noise_integrals(p, t);

    MomentState out;
    out.t = t;
    out.mu = q * state0.mu;
    out.nmat = q.conjugate() * state0.nmat * q.transpose() + ni.d;
    out.mmat = q * state0.mmat * q.transpose();
    return out;
}

// (Q Q^dagger) - D~ + A - I with D~_ij = 2*gamma int Q_i1 conj(Q_j1) = conj(D);
// vanishes identically when the solution preserves [a_i(t), a_j^dagger(t)] =
// delta_ij.  Kept as a numerical diagnostic of the closed forms.
inline Mat2 commutator_defect(const SystemParams& p, double t) {
    const Mat2 q = propagator(p, t).q;
    const NoiseIntegrals ni = noise_integrals(p, t);
    return q * q.adjoint() - ni.d.conjugate() + ni.acomm - Mat2::identity();
}

}  // namespace ptcav

#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "ptcav/moments.hpp"
#include "ptcav/states.hpp"

namespace ptcav {

// One factor of an ordered operator product: a_mode or a_mode^dagger.
struct OperatorSpec {
    int mode = 1;  // 1 or 2
    bool dagger = false;
};

inline constexpr OperatorSpec kA1{1, false};
inline constexpr OperatorSpec kA2{2, false};
inline constexpr OperatorSpec kA1d{1, true};
inline constexpr OperatorSpec kA2d{2, true};

inline void validate(OperatorSpec op) {
    if (op.mode != 1 && op.mode != 2)
        throw std::invalid_argument("OperatorSpec: mode must be 1 or 2");
}

inline cplx first_moment(const MomentState& st, OperatorSpec op) {
    validate(op);
    const cplx mu = st.mu[op.mode - 1];
    return op.dagger ? std::conj(mu) : mu;
}

// Exact second moment of the ordered product a*b from (mu, N, M) and the
// canonical commutator:
//   <a_i^dag a_j>     = N_ij
//   <a_i a_j>         = M_ij
//   <a_i^dag a_j^dag> = conj(M_ij)          (M is symmetric)
//   <a_i a_j^dag>     = delta_ij + N_ji
inline cplx two_op_expectation(const MomentState& st, OperatorSpec a, OperatorSpec b) {
    validate(a);
    validate(b);
    const int i = a.mode - 1, j = b.mode - 1;
    if (a.dagger && !b.dagger) return st.nmat(i, j);
    if (!a.dagger && !b.dagger) return st.mmat(i, j);
    if (a.dagger && b.dagger) return std::conj(st.mmat(i, j));
    return (i == j ? cplx(1.0) : cplx(0.0)) + st.nmat(j, i);
}

// <ABCD> ~ <AB><CD> + <AD><BC> + <AC><BD> - 2<A><B><C><D>, applied uniformly
// to every quartic moment (exact for zero-mean Gaussian states, an
// approximation elsewhere).
inline cplx fourth_moment_decoupled(const MomentState& st,
                                    const std::array<OperatorSpec, 4>& ops) {
    const auto& [a, b, c, d] = ops;
    return two_op_expectation(st, a, b) * two_op_expectation(st, c, d) +
           two_op_expectation(st, a, d) * two_op_expectation(st, b, c) +
           two_op_expectation(st, a, c) * two_op_expectation(st, b, d) -
           2.0 * first_moment(st, a) * first_moment(st, b) * first_moment(st, c) *
               first_moment(st, d);
}

inline std::pair<double, double> photon_numbers(const MomentState& st) {
    return {st.nmat(0, 0).real(), st.nmat(1, 1).real()};
}

// zeta_i = (n_i - n_i|_{g=0}) / (n_1 n_2).  zeta < 0 flags the quantum Zeno
// effect, zeta > 0 the anti-Zeno effect.  The baseline is a second propagate
// with the coupling switched off, so it tracks any input state.
struct ZenoResult {
    double zeta1 = 0.0;
    double zeta2 = 0.0;
    bool defined = false;
};

inline constexpr double kZenoDenominatorFloor = 1e-15;

inline ZenoResult zeno_parameter(const SystemParams& p, const InputState& input, double t) {
    const MomentState st0 = initial_moments(input);
    const auto [n1, n2] = photon_numbers(propagate(p, st0, t));

    SystemParams decoupled = p;
    decoupled.g = 0.0;
    const auto [b1, b2] = photon_numbers(propagate(decoupled, st0, t));

    const double denom = n1 * n2;
    if (std::abs(denom) < kZenoDenominatorFloor)
        return {std::nan(""), std::nan(""), false};
    return {(n1 - b1) / denom, (n2 - b2) / denom, true};
}

// A(a1 a2) = <a1^dag a2^dag a1 a2> - n1 n2, quartic evaluated through the
// decoupling relation; negative values witness intermodal antibunching.
inline double antibunching_witness(const MomentState& st) {
    const auto [n1, n2] = photon_numbers(st);
    return fourth_moment_decoupled(st, {kA1d, kA2d, kA1, kA2}).real() - n1 * n2;
}

// The same witness after expanding the pairings: |M12|^2 + |N12|^2
// - 2|mu1|^2 |mu2|^2.  Kept as the dual route for cross-validation.
inline double antibunching_witness_reduced(const MomentState& st) {
    return std::norm(st.mmat(0, 1)) + std::norm(st.nmat(0, 1)) -
           2.0 * std::norm(st.mu.v1) * std::norm(st.mu.v2);
}

// Hillery sum squeezing along phase phi:
//   V_phi = (e^{-i phi} a1 a2 + e^{i phi} a1^dag a2^dag)/2
//   V = <(dV_phi)^2> - (n1 + n2 + 1)/4,  V < 0 certifies squeezing.
inline double sum_squeezing(const MomentState& st, double phi) {
    const cplx e = std::polar(1.0, -phi);
    const cplx e2 = e * e;
    const cplx vsq = e2 * fourth_moment_decoupled(st, {kA1, kA2, kA1, kA2}) +
                     fourth_moment_decoupled(st, {kA1, kA2, kA1d, kA2d}) +
                     fourth_moment_decoupled(st, {kA1d, kA2d, kA1, kA2}) +
                     std::conj(e2) * fourth_moment_decoupled(st, {kA1d, kA2d, kA1d, kA2d});
    const double mean = (e * st.mmat(0, 1)).real();
    const auto [n1, n2] = photon_numbers(st);
    return 0.25 * vsq.real() - mean * mean - 0.25 * (n1 + n2 + 1.0);
}

// Difference squeezing:
//   W_phi = (e^{i phi} a1 a2^dag + e^{-i phi} a1^dag a2)/2
//   W = <(dW_phi)^2> - |n1 - n2|/4.
inline double difference_squeezing(const MomentState& st, double phi) {
    const cplx f = std::polar(1.0, phi);
    const cplx f2 = f * f;
    const cplx wsq = f2 * fourth_moment_decoupled(st, {kA1, kA2d, kA1, kA2d}) +
                     fourth_moment_decoupled(st, {kA1, kA2d, kA1d, kA2}) +
                     fourth_moment_decoupled(st, {kA1d, kA2, kA1, kA2d}) +
                     std::conj(f2) * fourth_moment_decoupled(st, {kA1d, kA2, kA1d, kA2});
    const double mean = (std::conj(f) * st.nmat(0, 1)).real();
    const auto [n1, n2] = photon_numbers(st);
    return 0.25 * wsq.real() - mean * mean - 0.25 * std::abs(n1 - n2);
}

// Every tracked observable evaluated at one parameter point.
struct WitnessReport {
    double n1 = 0.0, n2 = 0.0;
    double zeta1 = 0.0, zeta2 = 0.0;
    bool zeno_defined = false;
    double antibunch = 0.0;
    double sumsq = 0.0;
    double diffsq = 0.0;
    double phi = 0.0;
    double t = 0.0;
};

inline WitnessReport witness_report(const SystemParams& p, const InputState& input, double t,
                                    double phi) {
    const MomentState st = propagate(p, initial_moments(input), t);
    const auto [n1, n2] = photon_numbers(st);
    const ZenoResult zeno = zeno_parameter(p, input, t);
    WitnessReport r;
    r.n1 = n1;
    r.n2 = n2;
    r.zeta1 = zeno.zeta1;
    r.zeta2 = zeno.zeta2;
    r.zeno_defined = zeno.defined;
    r.antibunch = antibunching_witness(st);
    r.sumsq = sum_squeezing(st, phi);
    r.diffsq = difference_squeezing(st, phi);
    r.phi = phi;
    r.t = t;
    return r;
}

}  // namespace ptcav

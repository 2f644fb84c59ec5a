#pragma once

// Independent numerical ground truth for the closed forms: scaled-Taylor
// matrix exponential, composite Simpson quadrature of the noise integrals,
// fixed-step RK4 integration of the moment ODEs, and a truncated two-mode
// Fock engine for exact t = 0 expectations.  Nothing here reuses the
// closed-form propagator/noise path it is meant to check.

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "ptcav/moment_state.hpp"
#include "ptcav/states.hpp"
#include "ptcav/system.hpp"
#include "ptcav/witnesses.hpp"

namespace ptcav {
namespace oracle {

// exp(-iKt) by scaling-and-squaring with a degree-16 Taylor kernel.
inline Mat2 expm_taylor(const SystemParams& p, double t) {
    if (!(t >= 0.0)) throw std::invalid_argument("expm_taylor: t must be >= 0");
    validate(p);
    Mat2 a = t * dynamics_generator(p);

    int squarings = 0;
    double norm = a.max_abs();
    while (norm > 0.5) {
        norm *= 0.5;
        ++squarings;
    }
    a = std::ldexp(1.0, -squarings) * a;

    Mat2 sum = Mat2::identity();
    Mat2 term = Mat2::identity();
    for (int k = 1; k <= 16; ++k) {
        term = (1.0 / k) * (term * a);
        sum = sum + term;
    }
    for (int i = 0; i < squarings; ++i) sum = sum * sum;
    return sum;
}

// Composite Simpson evaluation of the noise integrals straight from their
// definition, sampling the propagator at panels+1 points.
inline NoiseIntegrals quad_noise_integrals(const SystemParams& p, double t, int panels) {
    if (!(t >= 0.0)) throw std::invalid_argument("quad_noise_integrals: t must be >= 0");
    if (panels < 2 || panels % 2 != 0)
        throw std::invalid_argument("quad_noise_integrals: panels must be even and >= 2");
    validate(p);

    NoiseIntegrals ni;
    ni.t = t;
    if (t == 0.0) return ni;

    const double h = t / panels;
    Mat2 d, a;
    for (int k = 0; k <= panels; ++k) {
        const double w = (k == 0 || k == panels) ? 1.0 : (k % 2 == 1 ? 4.0 : 2.0);
        const Mat2 q = expm_taylor(p, k * h);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                d(i, j) += w * std::conj(q(i, 0)) * q(j, 0);
                a(i, j) += w * q(i, 1) * std::conj(q(j, 1));
            }
    }
    const double scale = 2.0 * p.gamma * h / 3.0;
    ni.d = scale * d;
    ni.acomm = scale * a;
    return ni;
}

namespace detail {

struct MomentDeriv {
    Vec2 mu;
    Mat2 n, m;
};

inline MomentDeriv moment_rhs(const Mat2& b, const Mat2& bc, const Mat2& src,
                              const MomentState& st) {
    return {b * st.mu, bc * st.nmat + st.nmat * b.transpose() + src,
            b * st.mmat + st.mmat * b.transpose()};
}

inline MomentState moment_axpy(const MomentState& st, double h, const MomentDeriv& d) {
    MomentState out = st;
    out.mu = st.mu + h * d.mu;
    out.nmat = st.nmat + h * d.n;
    out.mmat = st.mmat + h * d.m;
    return out;
}

}  // namespace detail

// Classical RK4 at fixed step dt on the moment ODEs
//   d mu/dt = B mu,   dN/dt = conj(B) N + N B^T + 2*gamma E11,
//   dM/dt = B M + M B^T,        with B = -iK.
// The final step is shortened to land exactly on t.
inline MomentState ode_moments(const SystemParams& p, const MomentState& state0, double t,
                               double dt) {
    if (!(t >= 0.0)) throw std::invalid_argument("ode_moments: t must be >= 0");
    if (t == 0.0) return state0;
    if (!(dt > 0.0) || dt > t)
        throw std::invalid_argument("ode_moments: need 0 < dt <= t");
    validate(p);

    const Mat2 b = dynamics_generator(p);
    const Mat2 bc = b.conjugate();
    Mat2 src;
    src(0, 0) = cplx(2.0 * p.gamma, 0.0);

    MomentState st = state0;
    double tcur = 0.0;
    while (tcur < t - 1e-15 * t) {
        const double h = std::min(dt, t - tcur);
        const auto k1 = detail::moment_rhs(b, bc, src, st);
        const auto k2 = detail::moment_rhs(b, bc, src, detail::moment_axpy(st, h / 2, k1));
        const auto k3 = detail::moment_rhs(b, bc, src, detail::moment_axpy(st, h / 2, k2));
        const auto k4 = detail::moment_rhs(b, bc, src, detail::moment_axpy(st, h, k3));
        st.mu = st.mu + (h / 6.0) * (k1.mu + 2.0 * k2.mu + 2.0 * k3.mu + k4.mu);
        st.nmat = st.nmat + (h / 6.0) * (k1.n + 2.0 * k2.n + 2.0 * k3.n + k4.n);
        st.mmat = st.mmat + (h / 6.0) * (k1.m + 2.0 * k2.m + 2.0 * k3.m + k4.m);
        tcur += h;
    }
    st.t = t;
    return st;
}

// ---------------------------------------------------------------------------
// Truncated two-mode Fock engine.
// ---------------------------------------------------------------------------

namespace detail {

// Amplitude grid psi[n1*stride + n2] over 0 <= n1, n2 < stride.  The working
// grid carries headroom above the state-support truncation so that creation
// operators inside a product never push amplitude off the edge.
struct FockGrid {
    int stride = 0;
    std::vector<cplx> amp;
};

inline FockGrid apply(const FockGrid& in, OperatorSpec op) {
    FockGrid out{in.stride, std::vector<cplx>(in.amp.size())};
    const int d = in.stride;
    for (int n1 = 0; n1 < d; ++n1)
        for (int n2 = 0; n2 < d; ++n2) {
            const cplx v = in.amp[n1 * d + n2];
            if (v == cplx(0.0)) continue;
            int m1 = n1, m2 = n2;
            double f;
            if (op.mode == 1) {
                if (op.dagger) {
                    m1 = n1 + 1;
                    f = std::sqrt(double(m1));
                } else {
                    m1 = n1 - 1;
                    f = std::sqrt(double(n1));
                }
            } else {
                if (op.dagger) {
                    m2 = n2 + 1;
                    f = std::sqrt(double(m2));
                } else {
                    m2 = n2 - 1;
                    f = std::sqrt(double(n2));
                }
            }
            if (m1 < 0 || m2 < 0 || m1 >= d || m2 >= d) continue;
            out.amp[m1 * d + m2] += f * v;
        }
    return out;
}

inline cplx inner(const FockGrid& a, const FockGrid& b) {
    cplx r = 0.0;
    for (std::size_t k = 0; k < a.amp.size(); ++k) r += std::conj(a.amp[k]) * b.amp[k];
    return r;
}

inline cplx pure_expectation(const FockGrid& psi, std::span<const OperatorSpec> ops) {
    FockGrid ket = psi;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) ket = apply(ket, *it);
    return inner(psi, ket);
}

inline std::vector<double> coherent_weights(double r, int dim) {
    // |c_n|^2 = e^{-r^2} r^{2n} / n!
    std::vector<double> w(dim);
    double cur = std::exp(-r * r);
    for (int n = 0; n < dim; ++n) {
        w[n] = cur;
        cur *= r * r / (n + 1.0);
    }
    return w;
}

}  // namespace detail

inline constexpr double kFockTailTol = 1e-12;

// Exact expectation of an ordered product of 1..4 mode operators on the
// input state, truncated at dim Fock levels per mode.  Pure states are held
// as amplitude grids; the thermal state is a weighted sum over number
// states, each of which an ordered product maps to a single scaled number
// state.  Throws when the neglected tail mass violates kFockTailTol.
inline cplx fock_expectation(const InputState& state, std::span<const OperatorSpec> ops,
                             int dim) {
    if (dim < 8) throw std::invalid_argument("fock_expectation: dim must be >= 8");
    if (ops.empty() || ops.size() > 4)
        throw std::invalid_argument("fock_expectation: need 1..4 operators");
    for (OperatorSpec op : ops) validate(op);
    validate(state);
    const int headroom = static_cast<int>(ops.size());
    const int work = dim + headroom;

    if (std::holds_alternative<Vacuum>(state) || std::get_if<Coherent>(&state) ||
        std::get_if<Noon>(&state)) {
        detail::FockGrid psi{work, std::vector<cplx>(std::size_t(work) * work)};
        if (std::holds_alternative<Vacuum>(state)) {
            psi.amp[0] = 1.0;
        } else if (const auto* c = std::get_if<Coherent>(&state)) {
            const auto w1 = detail::coherent_weights(c->r1, dim);
            const auto w2 = detail::coherent_weights(c->r2, dim);
            double kept1 = 0.0, kept2 = 0.0;
            for (double w : w1) kept1 += w;
            for (double w : w2) kept2 += w;
            if (1.0 - kept1 > kFockTailTol || 1.0 - kept2 > kFockTailTol)
                throw std::domain_error("fock_expectation: coherent tail mass exceeds 1e-12");
            const cplx a1 = std::polar(1.0, c->theta1);
            const cplx a2 = std::polar(1.0, c->theta2);
            for (int n1 = 0; n1 < dim; ++n1)
                for (int n2 = 0; n2 < dim; ++n2)
                    psi.amp[n1 * work + n2] = std::sqrt(w1[n1]) * std::pow(a1, n1) *
                                              std::sqrt(w2[n2]) * std::pow(a2, n2);
        } else {
            const int n = std::get<Noon>(state).n;
            if (n >= dim)
                throw std::domain_error("fock_expectation: NOON order exceeds truncation");
            const double r = 1.0 / std::sqrt(2.0);
            psi.amp[std::size_t(n) * work + 0] = r;
            psi.amp[0 * work + std::size_t(n)] = r;
        }
        return detail::pure_expectation(psi, ops);
    }

    // Thermal: rho = sum w(n1) w(n2) |n1 n2><n1 n2| with w(n) = (1-q) q^n.
    const double beta = std::get<Thermal>(state).beta;
    const double q = std::exp(-beta);
    const double kept = 1.0 - std::pow(q, dim);
    if (1.0 - kept * kept > kFockTailTol)
        throw std::domain_error("fock_expectation: thermal tail mass exceeds 1e-12");

    cplx total = 0.0;
    double w1 = 1.0 - q;
    for (int n1 = 0; n1 < dim; ++n1) {
        double w2 = 1.0 - q;
        for (int n2 = 0; n2 < dim; ++n2) {
            // Ordered product on |n1, n2>: track (level, coefficient) per mode.
            int m1 = n1, m2 = n2;
            double coef = 1.0;
            bool dead = false;
            for (auto it = ops.rbegin(); it != ops.rend() && !dead; ++it) {
                int& m = it->mode == 1 ? m1 : m2;
                if (it->dagger) {
                    ++m;
                    coef *= std::sqrt(double(m));
                } else {
                    if (m == 0) dead = true;
                    coef *= std::sqrt(double(m));
                    --m;
                }
            }
            if (!dead && m1 == n1 && m2 == n2) total += w1 * w2 * coef;
            w2 *= q;
        }
        w1 *= q;
    }
    return total;
}

// Truncation able to hold each family with tail mass below kFockTailTol:
// 8 levels for vacuum/NOON (exact), adaptive for coherent and thermal.
inline int default_truncation(const InputState& state) {
    if (std::holds_alternative<Vacuum>(state)) return 8;
    if (const auto* n = std::get_if<Noon>(&state)) return std::max(8, n->n + 1);
    if (const auto* c = std::get_if<Coherent>(&state)) {
        const double r = std::max(c->r1, c->r2);
        for (int dim = 8; dim <= 512; dim += 4) {
            const auto w = detail::coherent_weights(r, dim);
            double kept = 0.0;
            for (double v : w) kept += v;
            if (1.0 - kept < 0.5 * kFockTailTol) return dim;
        }
        throw std::domain_error("default_truncation: coherent amplitude too large");
    }
    const double q = std::exp(-std::get<Thermal>(state).beta);
    for (int dim = 8; dim <= 4096; dim += 4) {
        const double kept = 1.0 - std::pow(q, dim);
        if (1.0 - kept * kept < 0.5 * kFockTailTol) return dim;
    }
    throw std::domain_error("default_truncation: thermal state too hot");
}

}  // namespace oracle
}  // namespace ptcav

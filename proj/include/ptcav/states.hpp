#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ptcav/moment_state.hpp"

namespace ptcav {

struct Vacuum {};

// |alpha_1, alpha_2> with alpha_k = r_k * exp(i*theta_k).
struct Coherent {
    double r1 = 0.0, theta1 = 0.0;
    double r2 = 0.0, theta2 = 0.0;
};

// (|n,0> + |0,n>)/sqrt(2).
struct Noon {
    int n = 1;
};

// Two-mode isotropic thermal state at beta = hbar*omega/kT, mean occupation
// nbar = 1/(e^beta - 1) per mode.
struct Thermal {
    double beta = 1.0;
};

using InputState = std::variant<Vacuum, Coherent, Noon, Thermal>;

inline void validate(const InputState& state) {
    if (const auto* c = std::get_if<Coherent>(&state)) {
        if (!(c->r1 >= 0.0) || !(c->r2 >= 0.0) || !std::isfinite(c->theta1) ||
            !std::isfinite(c->theta2))
            throw std::invalid_argument("Coherent: amplitudes must be >= 0 and phases finite");
    } else if (const auto* n = std::get_if<Noon>(&state)) {
        if (n->n < 1) throw std::invalid_argument("Noon: n must be a positive integer");
    } else if (const auto* th = std::get_if<Thermal>(&state)) {
        if (!(th->beta > 0.0)) throw std::invalid_argument("Thermal: beta must be > 0");
    }
}

inline double thermal_occupation(double beta) { return 1.0 / std::expm1(beta); }

// Exact initial moments for each input family.  The NOON cross term
// <a1^dagger a2> = 1/2 exists only at n = 1; it drops out of the photon
// numbers (Q11 real, Q12 imaginary) but matters for the squeezing
// witnesses.
inline MomentState initial_moments(const InputState& state) {
    validate(state);
    MomentState st;
    st.t = 0.0;
    if (std::holds_alternative<Vacuum>(state)) return st;

    if (const auto* c = std::get_if<Coherent>(&state)) {
        const cplx a1 = std::polar(c->r1, c->theta1);
        const cplx a2 = std::polar(c->r2, c->theta2);
        st.mu = {a1, a2};
        const cplx amps[2] = {a1, a2};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                st.nmat(i, j) = std::conj(amps[i]) * amps[j];
                st.mmat(i, j) = amps[i] * amps[j];
            }
        return st;
    }
    if (const auto* noon = std::get_if<Noon>(&state)) {
        const double half_n = 0.5 * noon->n;
        const double x = noon->n == 1 ? 0.5 : 0.0;
        st.nmat(0, 0) = st.nmat(1, 1) = cplx(half_n, 0.0);
        st.nmat(0, 1) = st.nmat(1, 0) = cplx(x, 0.0);
        return st;
    }
    const auto& th = std::get<Thermal>(state);
    const double nbar = thermal_occupation(th.beta);
    st.nmat(0, 0) = st.nmat(1, 1) = cplx(nbar, 0.0);
    return st;
}

// ---------------------------------------------------------------------------
// State specification grammar (CLI surface):
//   "vacuum" | "coherent:r1,theta1,r2,theta2" | "noon:n" | "thermal:beta"
// Angles are radians; "pi/4"-style fraction literals are accepted for them.
// ---------------------------------------------------------------------------

inline double parse_number(const std::string& text) {
    const char* s = text.c_str();
    char* end = nullptr;
    const double v = std::strtod(s, &end);
    if (end == s || *end != '\0')
        throw std::invalid_argument("invalid number: '" + text + "'");
    return v;
}

// Plain decimal, or [sign][coefficient]pi[/denominator], e.g. "pi", "-pi/4",
// "3pi/2", "0.5pi".
inline double parse_angle(const std::string& text) {
    const auto pos = text.find("pi");
    if (pos == std::string::npos) return parse_number(text);

    double coef = 1.0;
    std::string head = text.substr(0, pos);
    if (head == "-")
        coef = -1.0;
    else if (head == "+" || head.empty())
        coef = 1.0;
    else
        coef = parse_number(head);

    double denom = 1.0;
    std::string tail = text.substr(pos + 2);
    if (!tail.empty()) {
        if (tail[0] != '/') throw std::invalid_argument("invalid angle: '" + text + "'");
        denom = parse_number(tail.substr(1));
        if (denom == 0.0) throw std::invalid_argument("invalid angle: '" + text + "'");
    }
    return coef * std::numbers::pi / denom;
}

inline std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(text.substr(start));
            return out;
        }
        out.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

inline InputState parse_state(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);

    InputState state;
    if (head == "vacuum") {
        if (!args.empty()) throw std::invalid_argument("vacuum takes no arguments");
        state = Vacuum{};
    } else if (head == "coherent") {
        const auto parts = split(args, ',');
        if (parts.size() != 4)
            throw std::invalid_argument("coherent requires r1,theta1,r2,theta2");
        state = Coherent{parse_number(parts[0]), parse_angle(parts[1]), parse_number(parts[2]),
                         parse_angle(parts[3])};
    } else if (head == "noon") {
        const double n = parse_number(args);
        if (n != std::floor(n)) throw std::invalid_argument("noon requires an integer n");
        state = Noon{static_cast<int>(n)};
    } else if (head == "thermal") {
        state = Thermal{parse_number(args)};
    } else {
        throw std::invalid_argument("unknown state family: '" + head + "'");
    }
    validate(state);
    return state;
}

inline std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string canonical_state_string(const InputState& state) {
    if (std::holds_alternative<Vacuum>(state)) return "vacuum";
    if (const auto* c = std::get_if<Coherent>(&state))
        return "coherent:" + format_g17(c->r1) + "," + format_g17(c->theta1) + "," +
               format_g17(c->r2) + "," + format_g17(c->theta2);
    if (const auto* n = std::get_if<Noon>(&state)) return "noon:" + std::to_string(n->n);
    return "thermal:" + format_g17(std::get<Thermal>(state).beta);
}

}  // namespace ptcav

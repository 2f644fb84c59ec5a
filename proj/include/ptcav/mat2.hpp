#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

namespace ptcav {

using cplx = std::complex<double>;

struct Vec2 {
    cplx v1{}, v2{};

    cplx& operator[](int i) { return i == 0 ? v1 : v2; }
    const cplx& operator[](int i) const { return i == 0 ? v1 : v2; }
};

inline Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.v1 + b.v1, a.v2 + b.v2}; }
inline Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.v1 - b.v1, a.v2 - b.v2}; }
inline Vec2 operator*(double s, const Vec2& a) { return {s * a.v1, s * a.v2}; }

// Dense complex 2x2 matrix, row-major.
struct Mat2 {
    std::array<cplx, 4> m{};

    cplx& operator()(int i, int j) { return m[2 * i + j]; }
    const cplx& operator()(int i, int j) const { return m[2 * i + j]; }

    static Mat2 identity() { return Mat2{{cplx(1), cplx(0), cplx(0), cplx(1)}}; }
    static Mat2 zero() { return {}; }

    Mat2 transpose() const { return Mat2{{m[0], m[2], m[1], m[3]}}; }
    Mat2 conjugate() const {
        return Mat2{{std::conj(m[0]), std::conj(m[1]), std::conj(m[2]), std::conj(m[3])}};
    }
    Mat2 adjoint() const { return conjugate().transpose(); }

    cplx det() const { return m[0] * m[3] - m[1] * m[2]; }
    cplx trace() const { return m[0] + m[3]; }

    double max_abs() const {
        double r = 0.0;
        for (const auto& e : m) r = std::max(r, std::abs(e));
        return r;
    }
};

inline Mat2 operator+(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int k = 0; k < 4; ++k) r.m[k] = a.m[k] + b.m[k];
    return r;
}

inline Mat2 operator-(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int k = 0; k < 4; ++k) r.m[k] = a.m[k] - b.m[k];
    return r;
}

inline Mat2 operator*(const cplx& s, const Mat2& a) {
    Mat2 r;
    for (int k = 0; k < 4; ++k) r.m[k] = s * a.m[k];
    return r;
}

inline Mat2 operator*(double s, const Mat2& a) { return cplx(s) * a; }

inline Mat2 operator*(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
    return r;
}

inline Vec2 operator*(const Mat2& a, const Vec2& x) {
    return {a(0, 0) * x.v1 + a(0, 1) * x.v2, a(1, 0) * x.v1 + a(1, 1) * x.v2};
}

inline double max_abs_diff(const Mat2& a, const Mat2& b) { return (a - b).max_abs(); }

// ||A - A^dagger||_max; zero for Hermitian A.
inline double hermiticity_defect(const Mat2& a) { return max_abs_diff(a, a.adjoint()); }

// ||A - A^T||_max; zero for symmetric A.
inline double symmetry_defect(const Mat2& a) { return max_abs_diff(a, a.transpose()); }

// Smallest eigenvalue of a (nominally) Hermitian matrix.
inline double min_eigenvalue_hermitian(const Mat2& a) {
    const double t = a.trace().real();
    const double d = a.det().real();
    const double disc = std::max(0.0, t * t - 4.0 * d);
    return 0.5 * (t - std::sqrt(disc));
}

}  // namespace ptcav

#pragma once

#include <stdexcept>

#include "ptcav/mat2.hpp"

namespace ptcav {

// Complete first/second-moment data of the two-mode field at one instant:
//   mu[i]      = <a_i>
//   nmat[i][j] = <a_i^dagger a_j>   (Hermitian, PSD)
//   mmat[i][j] = <a_i a_j>          (symmetric)
struct MomentState {
    Vec2 mu;
    Mat2 nmat;
    Mat2 mmat;
    double t = 0.0;
};

inline double nmat_min_eigenvalue(const MomentState& st) {
    return min_eigenvalue_hermitian(st.nmat);
}

inline void validate(const MomentState& st, double tol = 1e-10) {
    if (hermiticity_defect(st.nmat) > tol)
        throw std::invalid_argument("MomentState: nmat is not Hermitian");
    if (symmetry_defect(st.mmat) > tol)
        throw std::invalid_argument("MomentState: mmat is not symmetric");
    if (nmat_min_eigenvalue(st) < -tol)
        throw std::invalid_argument("MomentState: nmat is not positive semidefinite");
}

}  // namespace ptcav

// schmidt.hpp
// Two-qubit Schmidt decomposition via SVD of the 2x2 amplitude matrix:
// (U1 x U2) psi = N (cos(phi) e1e1 + sin(phi) e2e2) with cos >= sin >= 0.

#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "random.hpp"
#include "state.hpp"

namespace orbitforge {

struct SchmidtForm {
    double N = 0.0;
    double phi = 0.0;  // in [0, pi/4]
    Mat2 u1{}, u2{};
};

namespace detail {

inline Mat2 to_mat2(const Eigen::Matrix2cd& m) {
    return Mat2{{{m(0, 0), m(0, 1)}, {m(1, 0), m(1, 1)}}};
}

// Phase convention: first entry of each right-singular column with
// magnitude above tol made real positive (columns of U follow along).
inline void fix_svd_phases(Eigen::Matrix2cd& u, Eigen::Matrix2cd& v) {
    for (int j = 0; j < 2; ++j) {
        int k = std::abs(v(0, j)) > 1e-12 ? 0 : 1;
        if (std::abs(v(k, j)) == 0.0) continue;
        const cd ph = v(k, j) / std::abs(v(k, j));
        v.col(j) /= ph;
        u.col(j) /= ph;
    }
}

}  // namespace detail

inline SchmidtForm schmidt_2q(const QubitState& psi) {
    if (psi.n != 2) throw DimensionError("Schmidt decomposition is defined for two qubits");
    Eigen::Matrix2cd a;
    a << psi[0], psi[1], psi[2], psi[3];
    Eigen::JacobiSVD<Eigen::Matrix2cd> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::Matrix2cd u = svd.matrixU(), v = svd.matrixV();
    detail::fix_svd_phases(u, v);
    const double s0 = svd.singularValues()(0), s1 = svd.singularValues()(1);
    SchmidtForm f;
    f.N = std::sqrt(s0 * s0 + s1 * s1);
    f.phi = std::atan2(s1, s0);
    // a = U S V^H, so U1 a U2^T = S with U1 = U^H and U2 = V^T
    f.u1 = detail::to_mat2(u.adjoint());
    f.u2 = detail::to_mat2(v.transpose());
    return f;
}

}  // namespace orbitforge

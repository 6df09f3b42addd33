// rank.hpp
// Numerical rank and left-nullspace with an explicit tolerance policy:
// tau = rel_tol * max(sigma_max, floor). Callers rank tangent matrices of
// unit-norm states, where the integer rank gaps sit many orders above
// double-precision noise.

#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "state.hpp"

namespace orbitforge {

struct RankPolicy {
    double rel_tol = 1e-9;
    double floor = 1.0;

    double threshold(double sigma_max) const { return rel_tol * std::max(sigma_max, floor); }
};

inline int numerical_rank(const Eigen::MatrixXd& m, const RankPolicy& policy = {}) {
    if (!m.allFinite()) throw Error("numerical_rank: matrix has non-finite entries");
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& sv = svd.singularValues();
    const double tau = policy.threshold(sv(0));
    int r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > tau) ++r;
    return r;
}

inline std::vector<double> singular_values(const Eigen::MatrixXd& m) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    return {svd.singularValues().data(),
            svd.singularValues().data() + svd.singularValues().size()};
}

// Orthonormal basis (columns) of {x : x^T m ~ 0}, i.e. left-singular
// vectors with sigma <= tau. Singular values padded with zeros when
// rows > cols so every left dimension is accounted for.
inline Eigen::MatrixXd left_nullspace(const Eigen::MatrixXd& m, const RankPolicy& policy = {}) {
    if (!m.allFinite()) throw Error("left_nullspace: matrix has non-finite entries");
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullU);
    const auto& sv = svd.singularValues();
    const double tau = sv.size() ? policy.threshold(sv(0)) : 0.0;
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > tau) ++rank;
    return svd.matrixU().rightCols(m.rows() - rank);
}

}  // namespace orbitforge

// canonical3.hpp
// Reduction of a three-qubit state to the five-angle canonical form
//
//   N cos(a) e1 (cos(b) e1e1 + sin(b) e2e2)
// + N sin(a) cos(g) e2 (sin(b) e1e1 - cos(b) e2e2)
// + N sin(a) sin(g) e2 (cos(d) e1e2 + e^{i eta} sin(d) e2e1)
//
// by a direct sequence of exact steps:
//   1. SVD on the qubit-1 bipartition makes the two 2x2 blocks orthogonal
//      with descending norms (fixes alpha).
//   2. A Schmidt rotation of the top block makes it diagonal nonnegative
//      (fixes beta). Block orthogonality then forces the bottom block's
//      diagonal onto the form's ray automatically.
//   3. The remaining diagonal-phase freedom is solved in closed form: one
//      phase makes the bottom diagonal real (with the form's sign), one
//      makes its (1,2) entry real nonnegative, and the leftover phase on
//      the (2,1) entry is eta.
// The returned residual is the max-norm gap between the transformed state
// and the form evaluated at the extracted parameters.

#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "catalog.hpp"
#include "schmidt.hpp"

namespace orbitforge {

struct OptimizerConfig {
    int restarts = 32;
    double tol = 1e-12;
    int max_iter = 20000;
    std::uint64_t seed = 0;
};

struct CanonicalForm3 {
    double N = 0.0;
    double alpha = 0.0, beta = 0.0, gamma = 0.0, delta = 0.0, eta = 0.0;
    Mat2 u1{}, u2{}, u3{};
    double residual = 0.0;
    bool degenerate = false;

    QubitState form_state() const {
        return canonical3_state(N, alpha, beta, gamma, delta, eta);
    }
};

inline CanonicalForm3 canonical_3q(const QubitState& psi, const OptimizerConfig& config = {}) {
    if (psi.n != 3) throw DimensionError("canonical form is defined for three qubits");
    const double eps = config.tol;

    CanonicalForm3 out;
    out.u1 = out.u2 = out.u3 = Mat2{{{cd{1, 0}, cd{0, 0}}, {cd{0, 0}, cd{1, 0}}}};
    out.N = state_norm(psi);
    if (out.N <= 0.0) {
        out.degenerate = true;
        return out;
    }

    // 1. orthogonalize the qubit-1 blocks
    Eigen::Matrix<cd, 2, 4> t;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 4; ++j) t(i, j) = psi[std::size_t(4) * i + j];
    Eigen::JacobiSVD<Eigen::Matrix<cd, 2, 4>> svd1(t, Eigen::ComputeFullU);
    const Eigen::Matrix2cd u1 = svd1.matrixU().adjoint();
    const Eigen::Matrix<cd, 2, 4> tp = u1 * t;
    const double ca = svd1.singularValues()(0) / out.N;
    const double sa = svd1.singularValues()(1) / out.N;
    out.alpha = std::atan2(sa, ca);

    // 2. Schmidt-diagonalize the top block; carry the bottom block along
    Eigen::Matrix2cd b1, b2;
    b1 << tp(0, 0), tp(0, 1), tp(0, 2), tp(0, 3);
    b2 << tp(1, 0), tp(1, 1), tp(1, 2), tp(1, 3);
    Eigen::JacobiSVD<Eigen::Matrix2cd> svd2(b1, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::Matrix2cd w = svd2.matrixU(), v = svd2.matrixV();
    detail::fix_svd_phases(w, v);
    const Eigen::Matrix2cd u2 = w.adjoint();
    const Eigen::Matrix2cd u3 = v.transpose();
    out.beta = std::atan2(svd2.singularValues()(1), svd2.singularValues()(0));
    const Eigen::Matrix2cd b2p = u2 * b2 * u3.transpose();

    // 3. diagonal-phase gauge: D1 = diag(1, e^{it}), D2 = diag(e^{iv/2}, e^{-iv/2}),
    //    D3 = diag(e^{-iv/2}, e^{iv/2}) preserve the diagonalized top block;
    //    the bottom block picks up t on its diagonal, t+v at (1,2), t-v at (2,1)
    double tph = 0.0;
    if (std::abs(b2p(0, 0)) >= std::abs(b2p(1, 1))) {
        if (std::abs(b2p(0, 0)) > eps) tph = -std::arg(b2p(0, 0));
    } else {
        tph = M_PI - std::arg(b2p(1, 1));
    }
    double vph = 0.0;
    if (std::abs(b2p(0, 1)) > eps) vph = -std::arg(b2p(0, 1) * std::polar(1.0, tph));

    Eigen::Matrix2cd d1 = Eigen::Matrix2cd::Zero(), d2 = Eigen::Matrix2cd::Zero(),
                     d3 = Eigen::Matrix2cd::Zero();
    d1(0, 0) = 1.0;
    d1(1, 1) = std::polar(1.0, tph);
    d2(0, 0) = std::polar(1.0, vph / 2);
    d2(1, 1) = std::polar(1.0, -vph / 2);
    d3(0, 0) = std::polar(1.0, -vph / 2);
    d3(1, 1) = std::polar(1.0, vph / 2);
    out.u1 = detail::to_mat2(d1 * u1);
    out.u2 = detail::to_mat2(d2 * u2);
    out.u3 = detail::to_mat2(d3 * u3);

    const QubitState moved = apply_local_unitary({out.u1, out.u2, out.u3}, psi);

    // parameter extraction; |s4|^2 + |s7|^2 = (N sin(a) cos(g))^2 and
    // |s5|^2 + |s6|^2 = (N sin(a) sin(g))^2 hold identically on the form
    const double nsa = out.N * sa;
    if (nsa <= eps * out.N) {
        out.degenerate = true;  // product across the 1|23 cut: g, d, eta unconstrained
    } else {
        const double cg = std::hypot(std::abs(moved[4]), std::abs(moved[7])) / nsa;
        const double sg = std::hypot(std::abs(moved[5]), std::abs(moved[6])) / nsa;
        out.gamma = std::atan2(sg, cg);
        if (sg <= eps) {
            out.degenerate = true;  // d, eta unconstrained
        } else {
            out.delta = std::atan2(std::abs(moved[6]), moved[5].real());
            if (std::abs(moved[6]) > eps * nsa)
                out.eta = std::arg(moved[6]);
            else
                out.degenerate = true;  // eta unconstrained
        }
    }

    out.residual = distance_max(moved, out.form_state());
    return out;
}

}  // namespace orbitforge

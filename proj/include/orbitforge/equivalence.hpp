// equivalence.hpp
// Local-unitary equivalence decisions: fingerprint comparison (necessary
// condition) plus an explicit witness search maximizing |<phi|(xU)psi>|
// over one 2x2 unitary per site.
//
// The witness objective is linear in each single U_k, so each site update
// has a closed-form optimum (polar factor of the 2x2 environment matrix);
// sweeping sites monotonically increases the overlap. Multi-start: the
// composition of the two states' canonical reductions (n = 1, 2, 3) seeds
// the first start, the rest are Haar random.

#pragma once

#include <limits>
#include <optional>

#include "canonical3.hpp"
#include "invariants.hpp"
#include "schmidt.hpp"

namespace orbitforge {

struct Witness {
    std::vector<Mat2> unitaries;
    double phase = 0.0;     // theta in (xU)psi ~ e^{i theta} phi
    double residual = 0.0;  // ||(xU)psi - e^{i theta} phi||
};

struct EquivVerdict {
    bool fingerprints_match = false;
    double max_component_gap = 0.0;
    std::optional<Witness> witness;
};

namespace detail {

// overlap <phi, (xU)psi>; theta = arg of it
inline cd witness_overlap(const std::vector<Mat2>& us, const QubitState& psi,
                          const QubitState& phi) {
    return inner_product(phi, apply_local_unitary(us, psi));
}

inline double witness_residual(const std::vector<Mat2>& us, const QubitState& psi,
                               const QubitState& phi) {
    const cd mu = witness_overlap(us, psi, phi);
    const double r2 = norm_sq(psi) + norm_sq(phi) - 2.0 * std::abs(mu);
    return std::sqrt(std::max(0.0, r2));
}

// Optimal U maximizing Re Tr(U B) over 2x2 unitaries: the polar factor of B.
inline Mat2 polar_unitary(const Eigen::Matrix2cd& b) {
    Eigen::JacobiSVD<Eigen::Matrix2cd> svd(b, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return to_mat2(svd.matrixV() * svd.matrixU().adjoint());
}

// One pass of per-site closed-form updates. Returns |overlap| afterwards.
inline double polar_sweep(std::vector<Mat2>& us, const QubitState& psi,
                          const QubitState& phi) {
    const int n = psi.n;
    double overlap = 0.0;
    for (int k = 1; k <= n; ++k) {
        QubitState chi = psi;
        for (int l = 1; l <= n; ++l)
            if (l != k) chi = apply_single_site(us[l - 1], l, chi);
        // environment M(i,j) = sum_rest conj(phi[i at k]) chi[j at k]
        Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
        const std::size_t mask = std::size_t(1) << (n - k);
        for (std::size_t idx = 0; idx < psi.dim(); ++idx) {
            if (idx & mask) continue;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    m(i, j) += std::conj(phi.amplitudes[idx | (i ? mask : 0)]) *
                               chi.amplitudes[idx | (j ? mask : 0)];
        }
        us[k - 1] = polar_unitary(m.transpose());
        overlap = std::abs(witness_overlap(us, psi, phi));
    }
    return overlap;
}

// Constructive initial guess from canonical reductions, when available.
inline std::optional<std::vector<Mat2>> compose_start(const QubitState& psi,
                                                      const QubitState& phi) {
    if (psi.n == 1) {
        const QubitState a = normalized(psi), b = normalized(phi);
        // unitary with b = U a: U = b a^H + b_perp a_perp^H
        const cd a0 = a[0], a1 = a[1], b0 = b[0], b1 = b[1];
        const cd ap0 = -std::conj(a1), ap1 = std::conj(a0);
        const cd bp0 = -std::conj(b1), bp1 = std::conj(b0);
        Mat2 u{{{b0 * std::conj(a0) + bp0 * std::conj(ap0),
                 b0 * std::conj(a1) + bp0 * std::conj(ap1)},
                {b1 * std::conj(a0) + bp1 * std::conj(ap0),
                 b1 * std::conj(a1) + bp1 * std::conj(ap1)}}};
        return std::vector<Mat2>{u};
    }
    if (psi.n == 2) {
        const SchmidtForm fa = schmidt_2q(psi), fb = schmidt_2q(phi);
        return std::vector<Mat2>{mat2_mul(adjoint(fb.u1), fa.u1),
                                 mat2_mul(adjoint(fb.u2), fa.u2)};
    }
    if (psi.n == 3) {
        const CanonicalForm3 ca = canonical_3q(psi), cb = canonical_3q(phi);
        return std::vector<Mat2>{mat2_mul(adjoint(cb.u1), ca.u1),
                                 mat2_mul(adjoint(cb.u2), ca.u2),
                                 mat2_mul(adjoint(cb.u3), ca.u3)};
    }
    return std::nullopt;
}

}  // namespace detail

inline Witness witness_search(const QubitState& psi, const QubitState& phi,
                              const OptimizerConfig& config = {}) {
    if (psi.n != phi.n) throw DimensionError("witness search needs equal qubit counts");
    const int n = psi.n;
    const int max_sweeps = std::max(1, config.max_iter / std::max(1, 10 * n));

    Witness best;
    best.residual = std::numeric_limits<double>::infinity();
    auto consider = [&](std::vector<Mat2> us) {
        double prev = -1.0;
        for (int sweep = 0; sweep < max_sweeps; ++sweep) {
            const double cur = detail::polar_sweep(us, psi, phi);
            if (cur - prev < config.tol * 1e-3) break;
            prev = cur;
        }
        const double res = detail::witness_residual(us, psi, phi);
        if (res < best.residual) {
            best.unitaries = std::move(us);
            best.residual = res;
            best.phase = std::arg(detail::witness_overlap(best.unitaries, psi, phi));
        }
    };

    if (auto start = detail::compose_start(psi, phi)) consider(*start);
    consider(std::vector<Mat2>(n, Mat2{{{cd{1, 0}, cd{0, 0}}, {cd{0, 0}, cd{1, 0}}}}));
    for (int r = 0; r < config.restarts; ++r) {
        if (best.residual <= 1e-8) break;
        Rng rng(split_seed(config.seed, r));
        consider(random_local_unitary(n, rng));
    }
    return best;
}

inline EquivVerdict lu_equivalent(const QubitState& psi, const QubitState& phi,
                                  bool search = false, const OptimizerConfig& config = {}) {
    if (psi.n != phi.n) throw DimensionError("equivalence needs equal qubit counts");
    EquivVerdict verdict;
    const FingerprintComparison cmp =
        compare_fingerprints(fingerprint(psi), fingerprint(phi));
    verdict.fingerprints_match = cmp.match;
    verdict.max_component_gap = cmp.max_component_gap;
    if (search && verdict.fingerprints_match) {
        Witness w = witness_search(psi, phi, config);
        if (w.residual <= 1e-6) verdict.witness = std::move(w);
    }
    return verdict;
}

}  // namespace orbitforge

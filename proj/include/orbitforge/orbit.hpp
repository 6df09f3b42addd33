// orbit.hpp
// Orbit dimension at a state (rank of the tangent span), the nonlocal
// parameter count 2^(n+1) - dim, the counting bounds, and the stabilizer
// algebra (nullspace of the tangent map).

#pragma once

#include "lie.hpp"
#include "rank.hpp"

namespace orbitforge {

// States are normalized internally before ranking so tolerances are
// scale-free. Zero state: dimension 0 by convention.
inline int orbit_dimension(const QubitState& psi, GeneratorMode mode = GeneratorMode::reduced,
                           const RankPolicy& policy = {}) {
    if (norm_sq(psi) == 0.0) return 0;
    return numerical_rank(tangent_matrix(generators(psi.n, mode), normalized(psi)), policy);
}

// Number of nonlocal invariants, the norm included.
inline int invariant_count(const QubitState& psi, GeneratorMode mode = GeneratorMode::reduced,
                           const RankPolicy& policy = {}) {
    return (2 << psi.n) - orbit_dimension(psi, mode, policy);
}

struct CountBounds {
    long long naive;    // 2^(n+1) - 4n
    long long reduced;  // 2^(n+1) - (3n+1)
};

inline CountBounds count_bounds(int n) {
    if (n < 1) throw SizeError("count_bounds needs n >= 1");
    const long long total = 2LL << n;
    return CountBounds{total - 4LL * n, total - (3LL * n + 1)};
}

struct StabilizerBasis {
    int n = 0;
    GeneratorMode mode = GeneratorMode::reduced;
    double tol = 0.0;                          // rank threshold used
    std::vector<Eigen::VectorXd> coefficients; // orthonormal, length |G| each
    std::vector<LieElement> elements;          // sum_i lambda_i G_i
};

// All real coefficient vectors lambda over the generator list with
// || sum_i lambda_i tangent_vector(G_i, psi) || <= tau. Zero state: the
// whole algebra stabilizes.
inline StabilizerBasis stabilizer_basis(const QubitState& psi,
                                        GeneratorMode mode = GeneratorMode::reduced,
                                        const RankPolicy& policy = {}) {
    GeneratorSet gens = generators(psi.n, mode);
    StabilizerBasis basis;
    basis.n = psi.n;
    basis.mode = mode;

    Eigen::MatrixXd null;
    if (norm_sq(psi) == 0.0) {
        null = Eigen::MatrixXd::Identity(gens.size(), gens.size());
        basis.tol = policy.threshold(0.0);
    } else {
        Eigen::MatrixXd m = tangent_matrix(gens, normalized(psi));
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullU);
        basis.tol = policy.threshold(svd.singularValues()(0));
        int rank = 0;
        for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
            if (svd.singularValues()(i) > basis.tol) ++rank;
        null = svd.matrixU().rightCols(gens.size() - rank);
    }

    for (Eigen::Index c = 0; c < null.cols(); ++c) {
        Eigen::VectorXd lambda = null.col(c);
        basis.coefficients.push_back(lambda);
        LieElement el{psi.n, "stab" + std::to_string(c), {}};
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (const auto& t : gens.elements[i].terms)
                el.terms.push_back(PauliTerm{t.site, t.axis, lambda(i) * t.coeff});
        basis.elements.push_back(std::move(el));
    }
    return basis;
}

struct OrbitReport {
    int n = 0;
    GeneratorMode mode = GeneratorMode::reduced;
    int orbit_dim = 0;
    int invariant_count = 0;
    int stabilizer_dim = 0;
    double tolerance = 0.0;
    std::vector<double> singular_values;
};

inline OrbitReport analyze_orbit(const QubitState& psi,
                                 GeneratorMode mode = GeneratorMode::reduced,
                                 const RankPolicy& policy = {}) {
    OrbitReport rep;
    rep.n = psi.n;
    rep.mode = mode;
    GeneratorSet gens = generators(psi.n, mode);
    if (norm_sq(psi) == 0.0) {
        rep.orbit_dim = 0;
        rep.singular_values.assign(gens.size(), 0.0);
        rep.tolerance = policy.threshold(0.0);
    } else {
        Eigen::MatrixXd m = tangent_matrix(gens, normalized(psi));
        rep.singular_values = singular_values(m);
        rep.tolerance = policy.threshold(rep.singular_values.empty() ? 0.0
                                                                     : rep.singular_values[0]);
        rep.orbit_dim = 0;
        for (double s : rep.singular_values)
            if (s > rep.tolerance) ++rep.orbit_dim;
    }
    rep.invariant_count = (2 << psi.n) - rep.orbit_dim;
    rep.stabilizer_dim = static_cast<int>(gens.size()) - rep.orbit_dim;
    return rep;
}

}  // namespace orbitforge

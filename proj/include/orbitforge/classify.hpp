// classify.hpp
// Structural classification of stabilizer algebras: dimension, derived
// algebra from closed-form brackets, abelian / su(2) labels, and the
// all-spins flip test.

#pragma once

#include <cstdio>

#include "catalog.hpp"
#include "orbit.hpp"
#include "random.hpp"

namespace orbitforge {

struct FlipResult {
    bool symmetric = false;
    double phase = 0.0;
};

// sigma_x at every site maps flat index i to i ^ (2^n - 1); the state is
// flip symmetric when that equals e^{i theta} psi. The all-sites flip is the
// only discrete symmetry tested; further discrete checks would follow the
// same shape (apply the candidate operator, compare up to one phase).
inline FlipResult flip_symmetry(const QubitState& psi) {
    FlipResult r;
    const std::size_t mask = psi.dim() - 1;
    QubitState flipped = QubitState::zeros(psi.n);
    for (std::size_t i = 0; i < psi.dim(); ++i)
        flipped.amplitudes[i] = psi.amplitudes[i ^ mask];
    const cd ov = inner_product(psi, flipped);
    const double nrm = state_norm(psi);
    if (nrm == 0.0) return r;
    const double theta = std::arg(ov);
    double gap = 0.0;
    const cd ph = std::polar(1.0, theta);
    for (std::size_t i = 0; i < psi.dim(); ++i)
        gap += std::norm(flipped.amplitudes[i] - ph * psi.amplitudes[i]);
    if (std::sqrt(gap) <= 1e-10 * nrm) {
        r.symmetric = true;
        r.phase = theta;
    }
    return r;
}

struct StabilizerReport {
    int n = 0;
    GeneratorMode mode = GeneratorMode::reduced;
    int dim = 0;
    int derived_dim = 0;
    double closure_residual = 0.0;
    std::string label;
    bool flip_symmetric = false;
    double flip_phase = 0.0;
    StabilizerBasis basis;
};

namespace detail {

inline std::string stabilizer_label(int dim, int derived) {
    if (dim == 0) return "trivial";
    if (derived == 0) return dim == 1 ? "u1" : "u1^" + std::to_string(dim);
    if (dim == 3 && derived == 3) return "su2";
    if (dim == 4 && derived == 3) return "u1+su2";
    return "unclassified(" + std::to_string(dim) + "," + std::to_string(derived) + ")";
}

}  // namespace detail

inline StabilizerReport classify_stabilizer(const QubitState& psi,
                                            GeneratorMode mode = GeneratorMode::reduced,
                                            const RankPolicy& policy = {}) {
    StabilizerReport rep;
    rep.n = psi.n;
    rep.mode = mode;
    rep.basis = stabilizer_basis(psi, mode, policy);
    rep.dim = static_cast<int>(rep.basis.coefficients.size());

    // pairwise brackets as coordinate vectors over the reduced generator
    // space; derived dimension is their rank, closure residual the largest
    // component sticking out of the stabilizer span
    const int k = rep.dim;
    if (k >= 2) {
        const int gdim = 3 * psi.n + 1;
        std::vector<Eigen::VectorXd> stab_coords;
        for (const auto& el : rep.basis.elements) stab_coords.push_back(generator_coords(el));
        Eigen::MatrixXd span(k, gdim);
        for (int i = 0; i < k; ++i) span.row(i) = stab_coords[i].transpose();

        Eigen::MatrixXd brackets(k * (k - 1) / 2, gdim);
        int row = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                brackets.row(row++) =
                    generator_coords(bracket(rep.basis.elements[i], rep.basis.elements[j]))
                        .transpose();
        rep.derived_dim = numerical_rank(brackets, policy);

        // project each bracket off the orthonormalized stabilizer span
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(span.transpose(), Eigen::ComputeFullU);
        int span_rank = 0;
        for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
            if (svd.singularValues()(i) > policy.threshold(svd.singularValues()(0)))
                ++span_rank;
        const Eigen::MatrixXd q = svd.matrixU().leftCols(span_rank);
        for (int i = 0; i < brackets.rows(); ++i) {
            const Eigen::VectorXd b = brackets.row(i).transpose();
            rep.closure_residual =
                std::max(rep.closure_residual, (b - q * (q.transpose() * b)).norm());
        }
    }

    rep.label = detail::stabilizer_label(rep.dim, rep.derived_dim);
    const FlipResult flip = flip_symmetry(psi);
    rep.flip_symmetric = flip.symmetric;
    rep.flip_phase = flip.phase;
    return rep;
}

// ---- the four-parameter three-spin family -------------------------------

struct CaseRow {
    std::string name;
    std::array<cd, 4> params;  // a, b, c, d
    int expected_dim = 0;
    int measured_dim = 0;
    int derived_dim = 0;
    std::string label;
    bool flip = false;
};

namespace detail {

struct CaseSpec {
    std::string name;
    int expected_dim;
    // fills (a, b, c, d) from a seeded rng
    std::function<std::array<cd, 4>(Rng&)> draw;
};

// magnitudes log-uniform in [0.3, 3] with uniform phases, so accidental
// extra symmetry has measure zero
inline cd random_coeff(Rng& rng) {
    std::uniform_real_distribution<double> logmag(std::log(0.3), std::log(3.0));
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    return std::polar(std::exp(logmag(rng)), angle(rng));
}

inline std::vector<CaseSpec> family4_cases() {
    using A4 = std::array<cd, 4>;
    const cd zero{0, 0};
    return {
        {"a,b,c,d nonzero", 0,
         [](Rng& r) {
             return A4{random_coeff(r), random_coeff(r), random_coeff(r), random_coeff(r)};
         }},
        {"a=0", 1,
         [](Rng& r) {
             return A4{cd{0, 0}, random_coeff(r), random_coeff(r), random_coeff(r)};
         }},
        {"d=0", 1,
         [](Rng& r) {
             return A4{random_coeff(r), random_coeff(r), random_coeff(r), cd{0, 0}};
         }},
        {"a=b=0, |c|!=|d|", 2,
         [](Rng& r) {
             cd c = random_coeff(r), d = random_coeff(r);
             while (std::abs(std::abs(c) - std::abs(d)) < 0.05) d = random_coeff(r);
             return A4{cd{0, 0}, cd{0, 0}, c, d};
         }},
        {"a=b=0, |c|=|d|", 4,
         [](Rng& r) {
             const cd c = random_coeff(r);
             std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
             return A4{cd{0, 0}, cd{0, 0}, c, std::polar(std::abs(c), angle(r))};
         }},
        {"a=b=d=0", 3,
         [](Rng& r) { return A4{cd{0, 0}, cd{0, 0}, random_coeff(r), cd{0, 0}}; }},
        {"a=b=c=0", 3,
         [](Rng& r) { return A4{cd{0, 0}, cd{0, 0}, cd{0, 0}, random_coeff(r)}; }},
        {"c=d=0, a!=b", 2,
         [](Rng& r) {
             cd a = random_coeff(r), b = random_coeff(r);
             while (std::abs(a - b) < 0.05 || std::abs(a + b) < 0.05) b = random_coeff(r);
             return A4{a, b, cd{0, 0}, cd{0, 0}};
         }},
        {"c=d=0, a=b (GHZ family)", 2,
         [](Rng& r) {
             const cd a = random_coeff(r);
             return A4{a, a, cd{0, 0}, cd{0, 0}};
         }},
    };
}

}  // namespace detail

inline std::vector<CaseRow> family4_case_table(int samples, std::uint64_t seed,
                                               const RankPolicy& policy = {}) {
    std::vector<CaseRow> rows;
    std::uint64_t draw_index = 0;
    for (const auto& spec : detail::family4_cases()) {
        for (int s = 0; s < samples; ++s) {
            Rng rng(split_seed(seed, draw_index++));
            CaseRow row;
            row.name = spec.name;
            row.params = spec.draw(rng);
            const QubitState psi =
                family4_state(row.params[0], row.params[1], row.params[2], row.params[3]);
            const StabilizerReport rep =
                classify_stabilizer(psi, GeneratorMode::reduced, policy);
            row.expected_dim = spec.expected_dim;
            row.measured_dim = rep.dim;
            row.derived_dim = rep.derived_dim;
            row.label = rep.label;
            row.flip = rep.flip_symmetric;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace orbitforge

// lie.hpp
// Hermitian generators of the local-transformation algebra and the tangent
// vector fields they induce on the real embedding of state space.
//
// Every element handled here is a real linear combination of single-site
// Pauli operators (sigma_x/y/z acting on one site, identity elsewhere) and
// the global identity -- the span in which the u(1) x su(2)^n and u(2)^n
// generators and all their stabilizer combinations live. Brackets close on
// this span via the su(2) structure constants, and application to a state
// costs O(2^n) per term, so no 2^n x 2^n matrix is ever required.

#pragma once

#include <Eigen/Core>

#include "state.hpp"

namespace orbitforge {

enum class GeneratorMode { reduced, full };

inline const char* to_string(GeneratorMode m) {
    return m == GeneratorMode::reduced ? "reduced" : "full";
}

// One primitive term: coeff * sigma_axis at `site` (1-based), or
// coeff * identity when site == 0.
struct PauliTerm {
    int site = 0;
    int axis = 0;  // 0 = x, 1 = y, 2 = z
    double coeff = 1.0;
};

struct LieElement {
    int n = 0;
    std::string label;
    std::vector<PauliTerm> terms;

    static LieElement pauli(int n, int site, int axis, const std::string& label) {
        return LieElement{n, label, {PauliTerm{site, axis, 1.0}}};
    }
    static LieElement identity(int n, const std::string& label = "identity") {
        return LieElement{n, label, {PauliTerm{0, 0, 1.0}}};
    }

    bool is_zero(double tol = 0.0) const {
        for (const auto& t : terms)
            if (std::abs(t.coeff) > tol) return false;
        return true;
    }

    // out += coeff * (term applied to in), for each term
    QubitState apply(const QubitState& psi) const {
        if (psi.n != n) throw DimensionError("LieElement and state sizes differ");
        QubitState out = QubitState::zeros(n);
        for (const auto& t : terms) {
            if (t.coeff == 0.0) continue;
            if (t.site == 0) {
                for (std::size_t i = 0; i < psi.dim(); ++i)
                    out.amplitudes[i] += t.coeff * psi.amplitudes[i];
                continue;
            }
            const std::size_t mask = std::size_t(1) << (n - t.site);
            switch (t.axis) {
                case 0:  // sigma_x: swap the two components
                    for (std::size_t i = 0; i < psi.dim(); ++i)
                        out.amplitudes[i] += t.coeff * psi.amplitudes[i ^ mask];
                    break;
                case 1:  // sigma_y: (v0, v1) -> (-i v1, i v0)
                    for (std::size_t i = 0; i < psi.dim(); ++i) {
                        const cd f = (i & mask) ? cd{0, 1} : cd{0, -1};
                        out.amplitudes[i] += t.coeff * f * psi.amplitudes[i ^ mask];
                    }
                    break;
                case 2:  // sigma_z: sign by bit value
                    for (std::size_t i = 0; i < psi.dim(); ++i) {
                        const double s = (i & mask) ? -1.0 : 1.0;
                        out.amplitudes[i] += t.coeff * s * psi.amplitudes[i];
                    }
                    break;
                default:
                    throw Error("invalid Pauli axis");
            }
        }
        return out;
    }

    // Dense 2^n x 2^n materialization (tests, display). Hermitian by
    // construction: real coefficients on Hermitian primitives.
    Eigen::MatrixXcd matrix() const {
        const std::size_t d = std::size_t(1) << n;
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
        QubitState basis = QubitState::zeros(n);
        for (std::size_t j = 0; j < d; ++j) {
            basis.amplitudes.assign(d, cd{0, 0});
            basis.amplitudes[j] = cd{1, 0};
            QubitState col = apply(basis);
            for (std::size_t i = 0; i < d; ++i) m(i, j) = col.amplitudes[i];
        }
        return m;
    }
};

inline LieElement operator*(double s, const LieElement& e) {
    LieElement out = e;
    for (auto& t : out.terms) t.coeff *= s;
    return out;
}

inline LieElement operator+(const LieElement& a, const LieElement& b) {
    if (a.n != b.n) throw DimensionError("adding LieElements with different n");
    LieElement out = a;
    out.label = a.label + "+" + b.label;
    out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
    return out;
}

// -i(AB - BA). Single-site Paulis on different sites commute; on the same
// site -i[sigma_a, sigma_b] = 2 eps_abc sigma_c; identity commutes with all.
inline LieElement bracket(const LieElement& a, const LieElement& b) {
    if (a.n != b.n) throw DimensionError("bracket of LieElements with different n");
    // accumulate coefficients per (site, axis)
    std::vector<double> acc(std::size_t(3) * a.n, 0.0);
    for (const auto& ta : a.terms) {
        if (ta.site == 0) continue;
        for (const auto& tb : b.terms) {
            if (tb.site != ta.site || tb.axis == ta.axis) continue;
            // eps(a,b,c): cyclic (0,1,2) -> +1
            const int c = 3 - ta.axis - tb.axis;
            const double eps = ((tb.axis - ta.axis + 3) % 3 == 1) ? 1.0 : -1.0;
            acc[std::size_t(3) * (ta.site - 1) + c] += 2.0 * eps * ta.coeff * tb.coeff;
        }
    }
    LieElement out{a.n, "[" + a.label + "," + b.label + "]", {}};
    for (int k = 1; k <= a.n; ++k)
        for (int ax = 0; ax < 3; ++ax) {
            const double c = acc[std::size_t(3) * (k - 1) + ax];
            if (c != 0.0) out.terms.push_back(PauliTerm{k, ax, c});
        }
    return out;
}

struct GeneratorSet {
    int n = 0;
    GeneratorMode mode = GeneratorMode::reduced;
    std::vector<LieElement> elements;

    std::size_t size() const { return elements.size(); }
};

// reduced: {sigma_x,y,z at each site} then one global identity (3n+1, the
// algebra of U(1) x SU(2)^n). full: {sigma_x,y,z,1 at each site} (4n, the
// algebra of U(2)^n; the per-site identities all act as the same global
// identity).
inline GeneratorSet generators(int n, GeneratorMode mode = GeneratorMode::reduced) {
    check_qubit_count(n);
    static const char* axis_name[3] = {"sx", "sy", "sz"};
    GeneratorSet g{n, mode, {}};
    for (int k = 1; k <= n; ++k) {
        for (int ax = 0; ax < 3; ++ax)
            g.elements.push_back(LieElement::pauli(
                n, k, ax, std::string(axis_name[ax]) + "@" + std::to_string(k)));
        if (mode == GeneratorMode::full)
            g.elements.push_back(LieElement::identity(n, "id@" + std::to_string(k)));
    }
    if (mode == GeneratorMode::reduced)
        g.elements.push_back(LieElement::identity(n));
    return g;
}

// Coefficient-space coordinates of an element over the reduced generator
// list (sx,sy,sz per site, identity last). Identity terms from any site
// land on the single global-identity coordinate.
inline Eigen::VectorXd generator_coords(const LieElement& e) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(3 * e.n + 1);
    for (const auto& t : e.terms) {
        if (t.site == 0)
            v(3 * e.n) += t.coeff;
        else
            v(3 * (t.site - 1) + t.axis) += t.coeff;
    }
    return v;
}

// The vector field of T at psi: embed_real(i T psi), the coefficient vector
// u with field u . grad on the real coordinates.
inline RealEmbedding tangent_vector(const LieElement& t, const QubitState& psi) {
    QubitState tpsi = t.apply(psi);
    for (cd& a : tpsi.amplitudes) a *= cd{0, 1};
    return embed_real(tpsi);
}

// Row i is tangent_vector(g[i], psi); shape |G| x 2^(n+1).
inline Eigen::MatrixXd tangent_matrix(const GeneratorSet& g, const QubitState& psi) {
    if (g.n != psi.n) throw DimensionError("generator set and state sizes differ");
    Eigen::MatrixXd m(g.size(), 2 * psi.dim());
    for (std::size_t i = 0; i < g.size(); ++i) {
        RealEmbedding u = tangent_vector(g.elements[i], psi);
        for (std::size_t j = 0; j < u.coords.size(); ++j) m(i, j) = u.coords[j];
    }
    return m;
}

}  // namespace orbitforge

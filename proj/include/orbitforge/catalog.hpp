// catalog.hpp
// Named reference states. Amplitude placement follows the global flat-index
// convention (qubit 1 = most significant bit).

#pragma once

#include <cmath>

#include "state.hpp"

namespace orbitforge {

// (e1 x e2 - e2 x e1) / sqrt(2)
inline QubitState singlet_state() {
    QubitState psi = QubitState::zeros(2);
    const double r = 1.0 / std::sqrt(2.0);
    psi[1] = cd{r, 0.0};   // e1 e2
    psi[2] = cd{-r, 0.0};  // e2 e1
    return psi;
}

// N (cos(phi) e1 x e1 + sin(phi) e2 x e2)
inline QubitState schmidt2_state(double N, double phi) {
    QubitState psi = QubitState::zeros(2);
    psi[0] = cd{N * std::cos(phi), 0.0};
    psi[3] = cd{N * std::sin(phi), 0.0};
    return psi;
}

// a e1e1e1 + b e2e2e2 + c e1e1e2 + d e2e1e1 -> flat indices 0, 7, 1, 4
inline QubitState family4_state(cd a, cd b, cd c, cd d) {
    QubitState psi = QubitState::zeros(3);
    psi[0] = a;
    psi[7] = b;
    psi[1] = c;
    psi[4] = d;
    return psi;
}

inline QubitState ghz_state() {
    const double r = 1.0 / std::sqrt(2.0);
    return family4_state(cd{r, 0}, cd{r, 0}, cd{0, 0}, cd{0, 0});
}

inline QubitState product_state(int n) {
    QubitState psi = QubitState::zeros(n);
    psi[0] = cd{1.0, 0.0};
    return psi;
}

// The three-spin canonical form:
//   N cos(a) e1 x (cos(b) e1e1 + sin(b) e2e2)
// + N sin(a) cos(g) e2 x (sin(b) e1e1 - cos(b) e2e2)
// + N sin(a) sin(g) e2 x (cos(d) e1e2 + e^{i eta} sin(d) e2e1)
// Support sits at flat indices {0,3,4,7,5,6}; 1 and 2 vanish.
inline QubitState canonical3_state(double N, double alpha, double beta, double gamma,
                                   double delta, double eta) {
    QubitState psi = QubitState::zeros(3);
    const double ca = std::cos(alpha), sa = std::sin(alpha);
    const double cb = std::cos(beta), sb = std::sin(beta);
    const double cg = std::cos(gamma), sg = std::sin(gamma);
    psi[0] = cd{N * ca * cb, 0.0};
    psi[3] = cd{N * ca * sb, 0.0};
    psi[4] = cd{N * sa * cg * sb, 0.0};
    psi[7] = cd{-N * sa * cg * cb, 0.0};
    psi[5] = cd{N * sa * sg * std::cos(delta), 0.0};
    psi[6] = std::polar(N * sa * sg * std::sin(delta), eta);
    return psi;
}

inline QubitState catalog_state(const std::string& name, const std::vector<double>& params = {}) {
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw ParameterError(name + " takes " + std::to_string(k) +
                                 " parameter(s), got " + std::to_string(params.size()));
    };
    if (name == "singlet") {
        need(0);
        return singlet_state();
    }
    if (name == "schmidt2") {
        need(2);
        return schmidt2_state(params[0], params[1]);
    }
    if (name == "family4") {
        // accepts 4 real values or 8 interleaved (re, im) values
        if (params.size() == 4)
            return family4_state(cd{params[0], 0}, cd{params[1], 0}, cd{params[2], 0},
                                 cd{params[3], 0});
        if (params.size() == 8)
            return family4_state(cd{params[0], params[1]}, cd{params[2], params[3]},
                                 cd{params[4], params[5]}, cd{params[6], params[7]});
        throw ParameterError("family4 takes 4 real or 8 interleaved re,im parameters, got " +
                             std::to_string(params.size()));
    }
    if (name == "ghz") {
        need(0);
        return ghz_state();
    }
    if (name == "product") {
        if (params.empty()) return product_state(3);
        need(1);
        int n = static_cast<int>(params[0]);
        if (static_cast<double>(n) != params[0])
            throw ParameterError("product takes an integer qubit count");
        check_qubit_count(n);
        return product_state(n);
    }
    if (name == "canonical3") {
        need(6);
        return canonical3_state(params[0], params[1], params[2], params[3], params[4],
                                params[5]);
    }
    throw CatalogError("unknown state name '" + name + "'");
}

}  // namespace orbitforge

// state.hpp
// n-qubit pure states as flat complex amplitude vectors, plus the real
// embedding used by the tangent-space machinery.
//
// Index convention (fixed globally): qubit 1 is the most significant bit,
// so flat index i = sum_k b_k * 2^(n-k) with e1 -> bit 0, e2 -> bit 1.
// States are not required to be normalized.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbitforge {

using cd = std::complex<double>;

constexpr int kMaxQubits = 12;  // caps the real embedding at 2^13 coordinates

// Error taxonomy; what() always starts with the category phrase.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : Error {
    explicit ParseError(const std::string& m) : Error("parse error: " + m) {}
};
struct DimensionError : Error {
    explicit DimensionError(const std::string& m) : Error("dimension error: " + m) {}
};
struct SizeError : Error {
    explicit SizeError(const std::string& m) : Error("unsupported size: " + m) {}
};
struct CatalogError : Error {
    explicit CatalogError(const std::string& m) : Error("catalog error: " + m) {}
};
struct ParameterError : Error {
    explicit ParameterError(const std::string& m) : Error("parameter error: " + m) {}
};

inline void check_qubit_count(int n) {
    if (n < 1 || n > kMaxQubits)
        throw SizeError("n must be in [1, " + std::to_string(kMaxQubits) +
                        "], got " + std::to_string(n));
}

struct QubitState {
    int n = 0;
    std::vector<cd> amplitudes;  // size 2^n, flat order as above

    QubitState() = default;
    QubitState(int n_, std::vector<cd> amps) : n(n_), amplitudes(std::move(amps)) {
        check_qubit_count(n);
        if (amplitudes.size() != dim())
            throw DimensionError("expected " + std::to_string(dim()) +
                                 " amplitudes, got " + std::to_string(amplitudes.size()));
    }

    static QubitState zeros(int n_) {
        check_qubit_count(n_);
        return QubitState(n_, std::vector<cd>(std::size_t(1) << n_, cd{0.0, 0.0}));
    }

    std::size_t dim() const { return std::size_t(1) << n; }
    cd& operator[](std::size_t i) { return amplitudes[i]; }
    const cd& operator[](std::size_t i) const { return amplitudes[i]; }
};

// Interleaved real coordinates (c, d) of the amplitudes in flat-index order:
// coords[2i] = Re(amplitudes[i]), coords[2i+1] = Im(amplitudes[i]).
struct RealEmbedding {
    int n = 0;
    std::vector<double> coords;  // size 2^(n+1)
};

inline RealEmbedding embed_real(const QubitState& psi) {
    RealEmbedding e;
    e.n = psi.n;
    e.coords.resize(2 * psi.dim());
    for (std::size_t i = 0; i < psi.dim(); ++i) {
        e.coords[2 * i] = psi.amplitudes[i].real();
        e.coords[2 * i + 1] = psi.amplitudes[i].imag();
    }
    return e;
}

inline QubitState unembed_real(const RealEmbedding& e) {
    QubitState psi = QubitState::zeros(e.n);
    if (e.coords.size() != 2 * psi.dim())
        throw DimensionError("embedding has " + std::to_string(e.coords.size()) +
                             " coordinates, expected " + std::to_string(2 * psi.dim()));
    for (std::size_t i = 0; i < psi.dim(); ++i)
        psi.amplitudes[i] = cd{e.coords[2 * i], e.coords[2 * i + 1]};
    return psi;
}

inline double norm_sq(const QubitState& psi) {
    double s = 0.0;
    for (const cd& a : psi.amplitudes) s += std::norm(a);
    return s;
}

inline double state_norm(const QubitState& psi) { return std::sqrt(norm_sq(psi)); }

inline QubitState normalized(const QubitState& psi) {
    double nrm = state_norm(psi);
    QubitState out = psi;
    if (nrm > 0.0)
        for (cd& a : out.amplitudes) a /= nrm;
    return out;
}

inline cd inner_product(const QubitState& a, const QubitState& b) {
    if (a.n != b.n) throw DimensionError("inner product of states with different n");
    cd s{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i)
        s += std::conj(a.amplitudes[i]) * b.amplitudes[i];
    return s;
}

inline double distance_max(const QubitState& a, const QubitState& b) {
    if (a.n != b.n) throw DimensionError("distance of states with different n");
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        m = std::max(m, std::abs(a.amplitudes[i] - b.amplitudes[i]));
    return m;
}

inline double distance_2(const QubitState& a, const QubitState& b) {
    if (a.n != b.n) throw DimensionError("distance of states with different n");
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        s += std::norm(a.amplitudes[i] - b.amplitudes[i]);
    return std::sqrt(s);
}

}  // namespace orbitforge

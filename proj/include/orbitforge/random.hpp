// random.hpp
// Seeded Gaussian state sampling, Haar-distributed SU(2) unitaries, and
// single-site gate application. All randomness in the library funnels
// through explicit 64-bit seeds; no wall-clock entropy.

#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "state.hpp"

namespace orbitforge {

using Rng = std::mt19937_64;

// Derives a decorrelated child seed, so per-trial streams are reproducible
// independently of evaluation order.
inline std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Gaussian real/imaginary parts, then normalized to unit norm: the
// rotation-invariant distribution on the unit sphere.
inline QubitState random_state(int n, std::uint64_t seed) {
    check_qubit_count(n);
    Rng rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    QubitState psi = QubitState::zeros(n);
    for (std::size_t i = 0; i < psi.dim(); ++i) {
        double re = gauss(rng);
        double im = gauss(rng);
        psi.amplitudes[i] = cd{re, im};
    }
    return normalized(psi);
}

using Mat2 = std::array<std::array<cd, 2>, 2>;

// Haar SU(2) via a uniformly random unit quaternion.
inline Mat2 haar_su2(Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    double a = gauss(rng), b = gauss(rng), c = gauss(rng), d = gauss(rng);
    double nrm = std::sqrt(a * a + b * b + c * c + d * d);
    a /= nrm; b /= nrm; c /= nrm; d /= nrm;
    return Mat2{{{cd{a, b}, cd{c, d}}, {cd{-c, d}, cd{a, -b}}}};
}

// Applies a 2x2 matrix at site k (1-based, site 1 = most significant bit).
inline QubitState apply_single_site(const Mat2& u, int site, const QubitState& psi) {
    if (site < 1 || site > psi.n) throw DimensionError("site out of range");
    QubitState out = QubitState::zeros(psi.n);
    const std::size_t mask = std::size_t(1) << (psi.n - site);
    for (std::size_t i = 0; i < psi.dim(); ++i) {
        const int b = (i & mask) ? 1 : 0;
        out.amplitudes[i] = u[b][0] * psi.amplitudes[i & ~mask] +
                            u[b][1] * psi.amplitudes[i | mask];
    }
    return out;
}

inline QubitState apply_local_unitary(const std::vector<Mat2>& us, const QubitState& psi) {
    if (static_cast<int>(us.size()) != psi.n)
        throw DimensionError("need one 2x2 unitary per site");
    QubitState out = psi;
    for (int k = 1; k <= psi.n; ++k) out = apply_single_site(us[k - 1], k, out);
    return out;
}

inline std::vector<Mat2> random_local_unitary(int n, Rng& rng) {
    std::vector<Mat2> us;
    us.reserve(n);
    for (int k = 0; k < n; ++k) us.push_back(haar_su2(rng));
    return us;
}

inline Mat2 adjoint(const Mat2& u) {
    return Mat2{{{std::conj(u[0][0]), std::conj(u[1][0])},
                 {std::conj(u[0][1]), std::conj(u[1][1])}}};
}

inline Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
    Mat2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return r;
}

}  // namespace orbitforge

#pragma once

#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include "breathseg/errors.hpp"

namespace breathseg::fft {

namespace detail {

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

// iterative radix-2 Cooley-Tukey, n a power of two
inline void fft_pow2(std::vector<std::complex<double>>& a, bool inverse) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    // one full-resolution twiddle table, indexed by stride
    std::vector<std::complex<double>> w(n / 2);
    const double sign = inverse ? 1.0 : -1.0;
    for (std::size_t k = 0; k < n / 2; ++k)
        w[k] = std::polar(1.0, sign * 2.0 * std::numbers::pi * k / n);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t stride = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + len / 2] * w[k * stride];
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
            }
        }
    }
    if (inverse)
        for (auto& x : a) x /= static_cast<double>(n);
}

// Bluestein chirp-z: arbitrary n as a circular convolution of power-of-two size
inline void fft_bluestein(std::vector<std::complex<double>>& a, bool inverse) {
    const std::size_t n = a.size();
    const double sign = inverse ? 1.0 : -1.0;
    // chirp[k] = exp(sign*i*pi*k^2/n); k^2 taken mod 2n keeps the angle exact
    std::vector<std::complex<double>> chirp(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t k2 = (k * k) % (2 * n);
        chirp[k] = std::polar(1.0, sign * std::numbers::pi *
                                       static_cast<double>(k2) / static_cast<double>(n));
    }
    const std::size_t m = next_pow2(2 * n - 1);
    std::vector<std::complex<double>> p(m), q(m);
    for (std::size_t k = 0; k < n; ++k) p[k] = a[k] * chirp[k];
    q[0] = std::conj(chirp[0]);
    for (std::size_t k = 1; k < n; ++k) q[k] = q[m - k] = std::conj(chirp[k]);
    fft_pow2(p, false);
    fft_pow2(q, false);
    for (std::size_t k = 0; k < m; ++k) p[k] *= q[k];
    fft_pow2(p, true);
    for (std::size_t k = 0; k < n; ++k) a[k] = p[k] * chirp[k];
    if (inverse)
        for (auto& x : a) x /= static_cast<double>(n);
}

} // namespace detail

// In-place DFT of arbitrary length (forward: X_k = sum x_j e^{-2pi i jk/n}).
inline void transform(std::vector<std::complex<double>>& a, bool inverse = false) {
    if (a.empty()) throw ValidationError("fft: empty input");
    if (a.size() == 1) return;
    if (detail::is_pow2(a.size()))
        detail::fft_pow2(a, inverse);
    else
        detail::fft_bluestein(a, inverse);
}

} // namespace breathseg::fft

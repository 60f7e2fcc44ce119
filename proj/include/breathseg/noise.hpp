#pragma once

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "breathseg/audio.hpp"
#include "breathseg/errors.hpp"
#include "breathseg/rng.hpp"

namespace breathseg {

enum class NoiseKind { gaussian, pink, file };

inline NoiseKind parse_noise_kind(const std::string& name) {
    if (name == "gaussian") return NoiseKind::gaussian;
    if (name == "pink") return NoiseKind::pink;
    if (name == "file") return NoiseKind::file;
    throw ValidationError("unknown noise type: '" + name + "'");
}

struct NoiseSpec {
    NoiseKind kind = NoiseKind::gaussian;
    std::string path;          // required for kind == file
    std::uint64_t seed = 0;
    double snr_db = 0.0;
};

namespace detail {

inline void normalize_to_unit_power(std::vector<double>& x) {
    double p = 0.0;
    for (double v : x) p += v * v;
    p /= static_cast<double>(x.size());
    const double scale = 1.0 / std::sqrt(p);
    for (double& v : x) v *= scale;
}

} // namespace detail

// i.i.d. standard normal samples, normalized to unit mean-square power.
inline AudioBuffer gen_gaussian(std::size_t n, std::uint64_t seed,
                                int sample_rate = 16000) {
    if (n == 0) throw ValidationError("gen_gaussian: n must be positive");
    Rng rng(seed);
    AudioBuffer buf;
    buf.sample_rate = sample_rate;
    buf.samples.resize(n);
    for (double& v : buf.samples) v = rng.gaussian();
    detail::normalize_to_unit_power(buf.samples);
    return buf;
}

// Voss-McCartney pink noise: 16 held uniform rows where row r refreshes
// every 2^(r+1) samples (trailing-zero selection), plus a fresh white term
// per sample to keep the top octave from flattening. Unit power.
inline AudioBuffer gen_pink(std::size_t n, std::uint64_t seed,
                            int sample_rate = 16000) {
    if (n == 0) throw ValidationError("gen_pink: n must be positive");
    Rng rng(seed);
    constexpr int kRows = 16;
    std::array<double, kRows> rows;
    for (double& r : rows) r = rng.uniform01() - 0.5;

    AudioBuffer buf;
    buf.sample_rate = sample_rate;
    buf.samples.resize(n);
    std::uint64_t counter = 0;
    double row_sum = 0.0;
    for (double r : rows) row_sum += r;
    for (std::size_t i = 0; i < n; ++i) {
        ++counter;
        int idx = std::countr_zero(counter);
        if (idx >= kRows) idx = kRows - 1;
        row_sum -= rows[static_cast<std::size_t>(idx)];
        rows[static_cast<std::size_t>(idx)] = rng.uniform01() - 0.5;
        row_sum += rows[static_cast<std::size_t>(idx)];
        buf.samples[i] = row_sum + (rng.uniform01() - 0.5);
    }
    detail::normalize_to_unit_power(buf.samples);
    return buf;
}

// Additive mix at an exact SNR: the noise is resampled (linear
// interpolation) to the signal rate if needed, looped or truncated to the
// signal length, then scaled so 10*log10(P_signal/P_noise) == snr_db.
inline AudioBuffer mix_at_snr(const AudioBuffer& signal, const AudioBuffer& noise,
                              double snr_db) {
    signal.validate();
    noise.validate();
    if (!std::isfinite(snr_db)) throw ValidationError("mix_at_snr: non-finite SNR");

    std::vector<double> fitted(signal.samples.size());
    if (noise.sample_rate == signal.sample_rate) {
        for (std::size_t i = 0; i < fitted.size(); ++i)
            fitted[i] = noise.samples[i % noise.samples.size()];
    } else {
        const double step =
            static_cast<double>(noise.sample_rate) / signal.sample_rate;
        const std::size_t m = noise.samples.size();
        for (std::size_t i = 0; i < fitted.size(); ++i) {
            const double pos = std::fmod(static_cast<double>(i) * step,
                                         static_cast<double>(m));
            const std::size_t j = static_cast<std::size_t>(pos);
            const double frac = pos - static_cast<double>(j);
            const double a = noise.samples[j];
            const double b = noise.samples[(j + 1) % m]; // wrap: noise is looped
            fitted[i] = a + frac * (b - a);
        }
    }

    double p_sig = 0.0, p_noise = 0.0;
    for (double v : signal.samples) p_sig += v * v;
    for (double v : fitted) p_noise += v * v;
    p_sig /= static_cast<double>(signal.samples.size());
    p_noise /= static_cast<double>(fitted.size());
    if (p_sig <= 0.0) throw ValidationError("mix_at_snr: silent signal");
    if (p_noise <= 0.0) throw ValidationError("mix_at_snr: silent noise");

    const double scale = std::sqrt(p_sig / (p_noise * std::pow(10.0, snr_db / 10.0)));
    AudioBuffer out;
    out.sample_rate = signal.sample_rate;
    out.samples.resize(signal.samples.size());
    for (std::size_t i = 0; i < out.samples.size(); ++i)
        out.samples[i] = signal.samples[i] + scale * fitted[i];
    return out;
}

} // namespace breathseg

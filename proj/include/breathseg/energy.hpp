#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "breathseg/audio.hpp"
#include "breathseg/errors.hpp"

namespace breathseg {

// Frame-wise short-time energy E[n] (sum of squared samples per frame),
// or its block-averaged downsampled form E_d[n].
struct EnergySignal {
    std::vector<double> values;
    double frame_rate = 0.0; // frames per second
    double win_s = 0.0;      // provenance: analysis window
    double hop_s = 0.0;      // provenance: hop between frame starts

    std::size_t size() const { return values.size(); }
    double duration_s() const { return values.size() / frame_rate; }
};

// E[n] = sum x[u]^2 over the frame of floor(win_s*fs) samples starting at
// n*floor(hop_s*fs); frames that would overrun the end are dropped.
inline EnergySignal short_time_energy(const AudioBuffer& audio,
                                      double win_s = 0.1, double hop_s = 0.01) {
    if (!(win_s > 0.0) || !(hop_s > 0.0))
        throw ValidationError("window and hop must be positive");
    const std::size_t win = static_cast<std::size_t>(win_s * audio.sample_rate);
    const std::size_t hop = static_cast<std::size_t>(hop_s * audio.sample_rate);
    if (win == 0 || hop == 0)
        throw ValidationError("window/hop shorter than one sample");
    if (audio.samples.size() < win)
        throw ValidationError("audio shorter than one analysis window");

    const std::size_t n_frames = (audio.samples.size() - win) / hop + 1;
    EnergySignal e;
    e.frame_rate = 1.0 / hop_s;
    e.win_s = win_s;
    e.hop_s = hop_s;
    e.values.resize(n_frames);
    for (std::size_t n = 0; n < n_frames; ++n) {
        double acc = 0.0;
        const double* x = audio.samples.data() + n * hop;
        for (std::size_t u = 0; u < win; ++u) acc += x[u] * x[u];
        e.values[n] = acc;
    }
    return e;
}

// Non-overlapping block means of `factor` consecutive values; a final
// partial block is averaged over its actual length.
inline EnergySignal downsample_energy(const EnergySignal& e, int factor = 10) {
    if (factor < 1) throw ValidationError("downsample factor must be >= 1");
    if (e.values.empty()) throw ValidationError("empty energy signal");
    EnergySignal d;
    d.frame_rate = e.frame_rate / factor;
    d.win_s = e.win_s;
    d.hop_s = e.hop_s * factor;
    const std::size_t n = e.values.size();
    d.values.reserve((n + factor - 1) / factor);
    for (std::size_t i = 0; i < n; i += factor) {
        const std::size_t end = std::min(n, i + factor);
        double acc = 0.0;
        for (std::size_t j = i; j < end; ++j) acc += e.values[j];
        d.values.push_back(acc / static_cast<double>(end - i));
    }
    return d;
}

} // namespace breathseg

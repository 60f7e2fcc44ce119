#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "breathseg/audio.hpp"
#include "breathseg/errors.hpp"
#include "breathseg/filter.hpp"
#include "breathseg/labels.hpp"
#include "breathseg/rng.hpp"

namespace breathseg {

// Synthetic breath recording with construction-time ground truth.
//
// Each phase is band-limited white noise amplitude-modulated by the square
// root of a triangular envelope, so the short-time energy contour is
// approximately triangular. Inhale phases are systematically quieter and
// shorter than exhales (inhale_gain, inhale_frac) the way mouth-recorded
// breathing is; that asymmetry is also what puts the spectral peak of E[n]
// at the breath rate rather than the phase rate.
struct SynthSpec {
    int n_breaths = 4;
    double mean_phase_s = 2.0;
    double jitter = 0.2;                 // per-phase duration in mean*(1 +- jitter)
    double amp_min = 0.15, amp_max = 0.45; // peak RMS amplitude range
    int sample_rate = 16000;
    std::uint64_t seed = 0;
    double inhale_gain = 0.55; // amplitude factor applied to inhales
    double inhale_frac = 0.35; // inhale share of one breath duration

    void validate() const {
        if (n_breaths < 1) throw ValidationError("synth: n_breaths must be >= 1");
        if (!(jitter >= 0.0 && jitter < 1.0))
            throw ValidationError("synth: jitter must lie in [0, 1)");
        if (!(amp_min > 0.0 && amp_min <= amp_max))
            throw ValidationError("synth: need 0 < amp_min <= amp_max");
        if (sample_rate < 4000) throw ValidationError("synth: sample_rate below 4 kHz");
        if (!(mean_phase_s > 0.0)) throw ValidationError("synth: mean_phase_s must be positive");
        if (!(inhale_gain > 0.0)) throw ValidationError("synth: inhale_gain must be positive");
        if (!(inhale_frac > 0.0 && inhale_frac < 1.0))
            throw ValidationError("synth: inhale_frac must lie in (0, 1)");
    }
};

inline std::pair<AudioBuffer, LabelTrack> synth_breath(const SynthSpec& spec) {
    spec.validate();
    Rng rng(spec.seed);

    const int n_phases = 2 * spec.n_breaths;
    std::vector<double> durations(static_cast<std::size_t>(n_phases));
    std::vector<double> amplitudes(static_cast<std::size_t>(n_phases));
    for (int p = 0; p < n_phases; ++p) {
        const bool inhale = (p % 2 == 0);
        const double share = inhale ? 2.0 * spec.inhale_frac : 2.0 * (1.0 - spec.inhale_frac);
        durations[p] = spec.mean_phase_s * share * (1.0 + spec.jitter * rng.uniform(-1.0, 1.0));
        double a = rng.uniform(spec.amp_min, spec.amp_max);
        if (inhale) a *= spec.inhale_gain;
        amplitudes[p] = a;
    }

    std::vector<double> bounds(static_cast<std::size_t>(n_phases) + 1, 0.0);
    for (int p = 0; p < n_phases; ++p) bounds[p + 1] = bounds[p] + durations[p];

    // every phase must hold at least 3 short-time-energy frames (10 ms hop)
    for (int p = 0; p < n_phases; ++p)
        if (durations[p] < 0.03)
            throw ValidationError("synth: phase " + std::to_string(p) +
                                  " shorter than 3 energy frames");

    const std::size_t n_samples =
        static_cast<std::size_t>(std::llround(bounds.back() * spec.sample_rate));

    // carrier: white noise low-passed into the breath band, unit RMS
    const double cutoff = std::min(2000.0, 0.45 * spec.sample_rate);
    const FilterCascade lp = design_butterworth_lowpass(6, cutoff, spec.sample_rate);
    AudioBuffer carrier;
    carrier.sample_rate = spec.sample_rate;
    carrier.samples.resize(n_samples);
    for (double& v : carrier.samples) v = rng.gaussian();
    carrier = filter_signal(carrier, lp);
    double p_car = 0.0;
    for (double v : carrier.samples) p_car += v * v;
    const double car_scale = 1.0 / std::sqrt(p_car / static_cast<double>(n_samples));

    AudioBuffer audio;
    audio.sample_rate = spec.sample_rate;
    audio.samples.assign(n_samples, 0.0);
    LabelTrack track;
    Label label = Label::inhale;
    for (int p = 0; p < n_phases; ++p) {
        const std::size_t s0 =
            static_cast<std::size_t>(std::llround(bounds[p] * spec.sample_rate));
        const std::size_t s1 =
            static_cast<std::size_t>(std::llround(bounds[p + 1] * spec.sample_rate));
        const double mid = (bounds[p] + durations[p] / 2.0) * spec.sample_rate;
        const double half = durations[p] / 2.0 * spec.sample_rate;
        for (std::size_t u = s0; u < s1 && u < n_samples; ++u) {
            const double tri =
                std::max(0.0, 1.0 - std::fabs(static_cast<double>(u) - mid) / half);
            audio.samples[u] =
                amplitudes[p] * std::sqrt(tri) * carrier.samples[u] * car_scale;
        }
        track.phases.push_back({bounds[p], bounds[p + 1], label});
        label = opposite(label);
    }
    return {std::move(audio), std::move(track)};
}

} // namespace breathseg

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "breathseg/audio.hpp"
#include "breathseg/errors.hpp"

namespace breathseg {

// One second-order IIR section, denominator normalized to (1, a1, a2).
struct Biquad {
    double b0 = 1.0, b1 = 0.0, b2 = 0.0;
    double a1 = 0.0, a2 = 0.0;

    bool stable() const {
        // poles strictly inside the unit circle (Schur-Cohn for quadratics)
        return std::fabs(a2) < 1.0 && std::fabs(a1) < 1.0 + a2;
    }
};

struct FilterCascade {
    std::vector<Biquad> sections;
    int order = 0;
    double cutoff_hz = 0.0;
    int sample_rate = 0;

    // |H(f)| of the whole cascade
    double magnitude(double freq_hz) const {
        const std::complex<double> z =
            std::polar(1.0, -2.0 * std::numbers::pi * freq_hz / sample_rate);
        std::complex<double> h = 1.0;
        for (const Biquad& s : sections)
            h *= (s.b0 + s.b1 * z + s.b2 * z * z) /
                 (1.0 + s.a1 * z + s.a2 * z * z);
        return std::abs(h);
    }
};

// Butterworth low-pass as a cascade of biquads: analog prototype poles at
// angles (2k+1)*pi/2N, bilinear transform with the cutoff pre-warped so the
// digital response equals the analog prototype at the warped frequencies.
inline FilterCascade design_butterworth_lowpass(int order, double cutoff_hz,
                                                int sample_rate) {
    if (order < 1) throw ValidationError("filter order must be >= 1");
    if (sample_rate <= 0) throw ValidationError("sample rate must be positive");
    if (!(cutoff_hz > 0.0) || cutoff_hz >= sample_rate / 2.0)
        throw ValidationError("cutoff must lie in (0, Nyquist)");

    const double c = 1.0 / std::tan(std::numbers::pi * cutoff_hz / sample_rate);

    FilterCascade f;
    f.order = order;
    f.cutoff_hz = cutoff_hz;
    f.sample_rate = sample_rate;
    for (int k = 0; k < order / 2; ++k) {
        const double s = std::sin((2 * k + 1) * std::numbers::pi / (2 * order));
        const double a0 = c * c + 2.0 * s * c + 1.0;
        Biquad q;
        q.b0 = 1.0 / a0;
        q.b1 = 2.0 / a0;
        q.b2 = 1.0 / a0;
        q.a1 = 2.0 * (1.0 - c * c) / a0;
        q.a2 = (c * c - 2.0 * s * c + 1.0) / a0;
        f.sections.push_back(q);
    }
    if (order % 2) {
        // real pole at s = -1: first-order section embedded in a biquad
        const double a0 = c + 1.0;
        Biquad q;
        q.b0 = 1.0 / a0;
        q.b1 = 1.0 / a0;
        q.a1 = (1.0 - c) / a0;
        f.sections.push_back(q);
    }
    for (const Biquad& q : f.sections)
        if (!q.stable()) throw ValidationError("designed section unstable");
    return f;
}

// Single causal forward pass, zero initial state (transposed direct form II).
inline AudioBuffer filter_signal(const AudioBuffer& audio, const FilterCascade& filt) {
    if (audio.sample_rate != filt.sample_rate)
        throw ValidationError("filter designed for " +
                              std::to_string(filt.sample_rate) + " Hz, got " +
                              std::to_string(audio.sample_rate) + " Hz audio");
    AudioBuffer out;
    out.sample_rate = audio.sample_rate;
    out.samples = audio.samples;
    for (const Biquad& s : filt.sections) {
        double z1 = 0.0, z2 = 0.0;
        for (double& x : out.samples) {
            const double y = s.b0 * x + z1;
            z1 = s.b1 * x - s.a1 * y + z2;
            z2 = s.b2 * x - s.a2 * y;
            x = y;
        }
    }
    return out;
}

} // namespace breathseg

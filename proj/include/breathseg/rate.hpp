#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "breathseg/energy.hpp"
#include "breathseg/errors.hpp"
#include "breathseg/fft.hpp"

namespace breathseg {

struct Spectrum {
    std::vector<double> freq_hz;   // bins 0..nfft/2
    std::vector<double> magnitude;
    double bin_hz = 0.0;
};

// Magnitude spectrum of the mean-subtracted energy signal, zero-padded to
// nfft (default twice the length). Bin spacing is frame_rate/nfft.
inline Spectrum magnitude_spectrum(const EnergySignal& e, std::size_t nfft = 0) {
    const std::size_t len = e.values.size();
    if (len < 4) throw ValidationError("magnitude_spectrum: need at least 4 frames");
    if (nfft == 0) nfft = 2 * len;
    if (nfft < len)
        throw ValidationError("magnitude_spectrum: nfft smaller than signal");

    double mean = 0.0;
    for (double v : e.values) mean += v;
    mean /= static_cast<double>(len);

    std::vector<std::complex<double>> buf(nfft, 0.0);
    for (std::size_t i = 0; i < len; ++i) buf[i] = e.values[i] - mean;
    fft::transform(buf);

    Spectrum s;
    s.bin_hz = e.frame_rate / static_cast<double>(nfft);
    const std::size_t n_bins = nfft / 2 + 1;
    s.freq_hz.resize(n_bins);
    s.magnitude.resize(n_bins);
    for (std::size_t k = 0; k < n_bins; ++k) {
        s.freq_hz[k] = static_cast<double>(k) * s.bin_hz;
        s.magnitude[k] = std::abs(buf[k]);
    }
    return s;
}

enum class Rounding { nearest, down, up };

inline Rounding parse_rounding(const std::string& name) {
    if (name == "nearest") return Rounding::nearest;
    if (name == "floor") return Rounding::down;
    if (name == "ceil") return Rounding::up;
    throw ValidationError("unknown rounding mode: '" + name + "'");
}

struct RateEstimate {
    double f_peak_hz = 0.0; // breaths per second
    int n_breaths = 0;
    int n_phases = 0;   // P = 2 * n_breaths
    double d_frames = 0.0; // average phase duration in E_d frames
};

// Pick the strongest spectral peak of E[n] inside the physiological band,
// turn it into a breath count over the signal duration, double it for the
// phase count, and express the average phase duration in E_d frames.
inline RateEstimate estimate_rate(const EnergySignal& e, std::size_t len_ed,
                                  double fmin_hz = 0.089, double fmax_hz = 0.833,
                                  Rounding rounding = Rounding::nearest) {
    if (!(fmin_hz > 0.0) || !(fmin_hz < fmax_hz))
        throw ValidationError("estimate_rate: need 0 < fmin < fmax");
    if (len_ed < 3) throw ValidationError("estimate_rate: downsampled signal too short");

    const Spectrum s = magnitude_spectrum(e);

    double sum_mag = 0.0;
    for (double m : s.magnitude) sum_mag += m;

    double best_mag = -1.0;
    std::size_t best_bin = 0;
    bool band_hit = false;
    for (std::size_t k = 0; k < s.freq_hz.size(); ++k) {
        if (s.freq_hz[k] < fmin_hz || s.freq_hz[k] > fmax_hz) continue;
        band_hit = true;
        if (s.magnitude[k] > best_mag) {
            best_mag = s.magnitude[k];
            best_bin = k;
        }
    }
    if (!band_hit)
        throw EstimationError(
            "no spectrum bin falls inside the breathing band; the signal is too "
            "short for this resolution (bin spacing " +
            std::to_string(s.bin_hz) + " Hz)");
    if (best_mag <= 1e-12 * sum_mag)
        throw EstimationError("spectrum is flat inside the breathing band; no "
                              "breath periodicity found");

    const double f_peak = s.freq_hz[best_bin];
    const double duration_s = e.values.size() / e.frame_rate;
    double n_raw = f_peak * duration_s;
    long n = 0;
    switch (rounding) {
        case Rounding::nearest: n = std::llround(n_raw); break;
        case Rounding::down: n = static_cast<long>(std::floor(n_raw)); break;
        case Rounding::up: n = static_cast<long>(std::ceil(n_raw)); break;
    }
    n = std::max(1L, n);

    RateEstimate r;
    r.f_peak_hz = f_peak;
    r.n_breaths = static_cast<int>(n);
    r.n_phases = static_cast<int>(2 * n);
    r.d_frames = static_cast<double>(len_ed) / r.n_phases;
    return r;
}

} // namespace breathseg

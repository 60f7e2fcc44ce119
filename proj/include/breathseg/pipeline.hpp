#pragma once

#include <cstddef>
#include <optional>

#include "breathseg/audio.hpp"
#include "breathseg/energy.hpp"
#include "breathseg/errors.hpp"
#include "breathseg/filter.hpp"
#include "breathseg/labels.hpp"
#include "breathseg/rate.hpp"
#include "breathseg/segmenter.hpp"

namespace breathseg {

// Every tunable of the segmentation chain, with the defaults the method is
// specified at: 2 kHz cutoff, 100 ms frames at 10 ms hop, downsample by 10,
// delta 0.3, breathing band 0.089-0.833 Hz.
struct PipelineConfig {
    double cutoff_hz = 2000.0;
    double win_s = 0.1;
    double hop_s = 0.01;
    int downsample = 10;
    double delta = 0.3;
    double fmin_hz = 0.089;
    double fmax_hz = 0.833;
    double match_threshold_s = 0.5;
    int filter_order = 6;
    Rounding rounding = Rounding::nearest;
    Label first_label = Label::inhale;
    std::optional<int> override_phases;  // bypass the estimator
    std::optional<double> override_d;    // E_d frames; derived from P when absent

    void validate() const {
        if (!(cutoff_hz > 0.0)) throw ValidationError("config: cutoff must be positive");
        if (!(win_s > 0.0 && hop_s > 0.0 && hop_s <= win_s))
            throw ValidationError("config: need 0 < hop_s <= win_s");
        if (downsample < 1) throw ValidationError("config: downsample must be >= 1");
        if (!(delta > 0.0 && delta < 1.0))
            throw ValidationError("config: delta must lie in (0, 1)");
        if (!(fmin_hz > 0.0 && fmin_hz < fmax_hz))
            throw ValidationError("config: need 0 < fmin < fmax");
        if (!(match_threshold_s > 0.0))
            throw ValidationError("config: match threshold must be positive");
        if (filter_order < 1) throw ValidationError("config: filter order must be >= 1");
        if (override_phases && *override_phases < 1)
            throw ValidationError("config: phase override must be >= 1");
        if (override_d && !(*override_d > 0.0))
            throw ValidationError("config: duration override must be positive");
    }
};

struct PipelineResult {
    SegmentationResult seg;
    LabelTrack track;
    std::optional<RateEstimate> rate; // absent when P was overridden
    std::size_t len_e = 0;
    std::size_t len_ed = 0;
};

// read -> filter -> energy -> downsample -> estimate rate -> DP -> labels.
inline PipelineResult run_pipeline(const AudioBuffer& audio,
                                   const PipelineConfig& cfg) {
    cfg.validate();
    audio.validate();

    const FilterCascade lp =
        design_butterworth_lowpass(cfg.filter_order, cfg.cutoff_hz, audio.sample_rate);
    const AudioBuffer filtered = filter_signal(audio, lp);
    const EnergySignal e = short_time_energy(filtered, cfg.win_s, cfg.hop_s);
    const EnergySignal e_d = downsample_energy(e, cfg.downsample);

    PipelineResult out;
    out.len_e = e.values.size();
    out.len_ed = e_d.values.size();

    int P = 0;
    double d = 0.0;
    if (cfg.override_phases) {
        P = *cfg.override_phases;
        d = cfg.override_d ? *cfg.override_d
                           : static_cast<double>(e_d.values.size()) / P;
    } else {
        out.rate = estimate_rate(e, e_d.values.size(), cfg.fmin_hz, cfg.fmax_hz,
                                 cfg.rounding);
        P = out.rate->n_phases;
        d = out.rate->d_frames;
    }

    out.seg = segment(e_d, P, d, cfg.delta);
    out.track = boundaries_to_track(out.seg, cfg.first_label, e_d.frame_rate);
    return out;
}

} // namespace breathseg

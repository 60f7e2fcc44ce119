#pragma once

#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "breathseg/errors.hpp"
#include "breathseg/metrics.hpp"
#include "breathseg/pipeline.hpp"
#include "breathseg/segmenter.hpp"

namespace breathseg {

// Write the whole file or nothing: contents go to a sibling temp file that
// is renamed over the target only after a successful write.
inline void atomic_write_text(const std::filesystem::path& path,
                              const std::string& contents) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw IoError("cannot open for writing: " + tmp.string());
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        if (!out) throw IoError("write failed: " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw IoError("cannot move report into place: " + path.string());
    }
}

namespace detail {

inline double round2(double v) { return std::round(v * 100.0) / 100.0; }

} // namespace detail

inline nlohmann::json to_json(const EvalReport& r) {
    return {
        {"match_pct", detail::round2(r.match_pct)},
        {"deletion_pct", detail::round2(r.deletion_pct)},
        {"insertion_pct", detail::round2(r.insertion_pct)},
        {"segment_match_pct", detail::round2(r.segment_match_pct)},
        {"ovr_mean", r.ovr_mean},
        {"ovr_std", r.ovr_std},
        {"n_ref_boundaries", r.n_ref_boundaries},
        {"n_hyp_boundaries", r.n_hyp_boundaries},
        {"n_segments", r.n_segments},
        {"n_segment_matches", r.n_segment_matches},
        {"boundaries_ref", r.boundaries_ref},
        {"boundaries_hyp", r.boundaries_hyp},
    };
}

inline nlohmann::json to_json(const SegmentationResult& r) {
    return {
        {"boundaries_s", r.boundaries_s},
        {"boundaries_frames", r.boundaries_frames},
        {"n_phases", r.n_phases},
        {"d_frames", r.d},
        {"delta", r.delta},
        {"total_cost", r.total_cost},
    };
}

inline nlohmann::json to_json(const PipelineConfig& c) {
    nlohmann::json j{
        {"cutoff_hz", c.cutoff_hz},
        {"win_s", c.win_s},
        {"hop_s", c.hop_s},
        {"downsample", c.downsample},
        {"delta", c.delta},
        {"fmin_hz", c.fmin_hz},
        {"fmax_hz", c.fmax_hz},
        {"match_threshold_s", c.match_threshold_s},
        {"filter_order", c.filter_order},
        {"rounding", c.rounding == Rounding::nearest
                         ? "nearest"
                         : (c.rounding == Rounding::down ? "floor" : "ceil")},
        {"first_label", to_string(c.first_label)},
    };
    if (c.override_phases) j["override_phases"] = *c.override_phases;
    if (c.override_d) j["override_d"] = *c.override_d;
    return j;
}

// nlohmann::json orders object keys alphabetically, so dumps are stable.
inline void write_report(const EvalReport& r, const std::filesystem::path& path) {
    atomic_write_text(path, to_json(r).dump(2) + "\n");
}

inline void write_report(const SegmentationResult& r,
                         const std::filesystem::path& path) {
    atomic_write_text(path, to_json(r).dump(2) + "\n");
}

} // namespace breathseg

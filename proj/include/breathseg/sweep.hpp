#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "breathseg/audio.hpp"
#include "breathseg/labels.hpp"
#include "breathseg/metrics.hpp"
#include "breathseg/noise.hpp"
#include "breathseg/pipeline.hpp"
#include "breathseg/report.hpp"
#include "breathseg/wav.hpp"

namespace breathseg {

struct SweepRow {
    double snr_db = 0.0;
    bool ok = false;
    std::string error;  // set when !ok
    EvalReport report;  // valid when ok
};

struct SweepTable {
    std::vector<SweepRow> rows;
};

inline std::vector<double> snr_steps(double from_db = -30.0, double to_db = 20.0,
                                     double step_db = 5.0) {
    if (!(step_db > 0.0)) throw ValidationError("snr step must be positive");
    std::vector<double> snrs;
    for (double s = from_db; s <= to_db + 1e-9; s += step_db) snrs.push_back(s);
    return snrs;
}

// Mix -> segment -> score for every SNR. A failing row (e.g. the estimator
// finds no periodicity under heavy noise) is recorded and the sweep goes on.
// Row seeds are derived as spec.seed + row index so reruns reproduce bit for
// bit while rows stay independent.
inline SweepTable noise_sweep(const AudioBuffer& signal, const LabelTrack& ref,
                              const NoiseSpec& spec, const std::vector<double>& snrs,
                              const PipelineConfig& cfg) {
    signal.validate();
    ref.validate();
    AudioBuffer file_noise;
    if (spec.kind == NoiseKind::file) {
        if (spec.path.empty())
            throw ValidationError("noise kind 'file' requires a noise path");
        file_noise = read_wav(spec.path);
    }

    SweepTable table;
    for (std::size_t i = 0; i < snrs.size(); ++i) {
        SweepRow row;
        row.snr_db = snrs[i];
        try {
            AudioBuffer noise;
            switch (spec.kind) {
                case NoiseKind::gaussian:
                    noise = gen_gaussian(signal.samples.size(), spec.seed + i,
                                         signal.sample_rate);
                    break;
                case NoiseKind::pink:
                    noise = gen_pink(signal.samples.size(), spec.seed + i,
                                     signal.sample_rate);
                    break;
                case NoiseKind::file:
                    noise = file_noise;
                    break;
            }
            const AudioBuffer noisy = mix_at_snr(signal, noise, snrs[i]);
            const PipelineResult res = run_pipeline(noisy, cfg);
            row.report = compute_report(ref, res.track, cfg.match_threshold_s);
            row.ok = true;
        } catch (const Error& e) {
            row.error = e.what();
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

inline std::string sweep_to_csv(const SweepTable& table) {
    std::string csv =
        "snr_db,status,match_pct,deletion_pct,insertion_pct,segment_match_pct,"
        "ovr_mean,ovr_std\n";
    char line[256];
    for (const SweepRow& r : table.rows) {
        if (r.ok) {
            std::snprintf(line, sizeof(line), "%g,ok,%.2f,%.2f,%.2f,%.2f,%.4f,%.4f\n",
                          r.snr_db, r.report.match_pct, r.report.deletion_pct,
                          r.report.insertion_pct, r.report.segment_match_pct,
                          r.report.ovr_mean, r.report.ovr_std);
        } else {
            std::snprintf(line, sizeof(line), "%g,failed,,,,,,\n", r.snr_db);
        }
        csv += line;
    }
    return csv;
}

inline nlohmann::json to_json(const SweepTable& table) {
    nlohmann::json rows = nlohmann::json::array();
    for (const SweepRow& r : table.rows) {
        nlohmann::json row{{"snr_db", r.snr_db}, {"ok", r.ok}};
        if (r.ok)
            row["report"] = to_json(r.report);
        else
            row["error"] = r.error;
        rows.push_back(row);
    }
    return {{"rows", rows}};
}

} // namespace breathseg

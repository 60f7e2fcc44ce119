#pragma once

#include <cstdio>
#include <filesystem>
#include <vector>

#include <json.hpp>

#include "breathseg/labels.hpp"
#include "breathseg/report.hpp"
#include "breathseg/synth.hpp"
#include "breathseg/wav.hpp"

namespace breathseg {

inline nlohmann::json to_json(const SynthSpec& s) {
    return {
        {"n_breaths", s.n_breaths},
        {"mean_phase_s", s.mean_phase_s},
        {"jitter", s.jitter},
        {"amp_min", s.amp_min},
        {"amp_max", s.amp_max},
        {"sample_rate", s.sample_rate},
        {"seed", s.seed},
        {"inhale_gain", s.inhale_gain},
        {"inhale_frac", s.inhale_frac},
    };
}

// One WAV + label file per spec plus a manifest.json; per-file failures are
// recorded in the manifest instead of aborting the batch.
inline nlohmann::json synth_corpus(const std::vector<SynthSpec>& specs,
                                   const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    nlohmann::json manifest;
    manifest["files"] = nlohmann::json::array();
    for (std::size_t i = 0; i < specs.size(); ++i) {
        char stem[32];
        std::snprintf(stem, sizeof(stem), "synth_%04zu", i);
        nlohmann::json entry = to_json(specs[i]);
        entry["wav"] = std::string(stem) + ".wav";
        entry["labels"] = std::string(stem) + ".txt";
        try {
            auto [audio, track] = synth_breath(specs[i]);
            write_wav(audio, out_dir / (std::string(stem) + ".wav"));
            write_labels(track, out_dir / (std::string(stem) + ".txt"));
        } catch (const Error& e) {
            entry["error"] = e.what();
        }
        manifest["files"].push_back(entry);
    }
    atomic_write_text(out_dir / "manifest.json", manifest.dump(2) + "\n");
    return manifest;
}

} // namespace breathseg

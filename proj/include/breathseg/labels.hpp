#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "breathseg/errors.hpp"

namespace breathseg {

enum class Label { inhale, exhale };

inline Label opposite(Label l) {
    return l == Label::inhale ? Label::exhale : Label::inhale;
}

inline const char* to_string(Label l) {
    return l == Label::inhale ? "inhale" : "exhale";
}

inline Label parse_label(const std::string& token) {
    if (token == "inhale") return Label::inhale;
    if (token == "exhale") return Label::exhale;
    throw ValidationError("unknown label token: '" + token + "'");
}

struct Phase {
    double start_s = 0.0;
    double end_s = 0.0;
    Label label = Label::inhale;
};

// Contiguous alternating inhale/exhale phases. Boundaries are the sorted
// union of all phase endpoints; with contiguity that is every phase start
// plus the final end.
struct LabelTrack {
    std::vector<Phase> phases;

    void validate() const {
        constexpr double kTimeTol = 1e-9;
        for (std::size_t i = 0; i < phases.size(); ++i) {
            const Phase& p = phases[i];
            if (!(p.start_s < p.end_s))
                throw ValidationError("LabelTrack: phase " + std::to_string(i) +
                                      " has start >= end");
            if (i > 0) {
                if (std::fabs(p.start_s - phases[i - 1].end_s) > kTimeTol)
                    throw ValidationError(
                        "LabelTrack: phases not contiguous at index " +
                        std::to_string(i));
                if (p.label == phases[i - 1].label)
                    throw ValidationError(
                        "LabelTrack: labels do not alternate at index " +
                        std::to_string(i));
            }
        }
    }

    std::vector<double> boundaries() const {
        std::vector<double> b;
        b.reserve(phases.size() + 1);
        for (const Phase& p : phases) b.push_back(p.start_s);
        if (!phases.empty()) b.push_back(phases.back().end_s);
        return b;
    }
};

// Tab-separated `start<TAB>end<TAB>label` lines, times with 6 decimals.
inline void write_labels(const LabelTrack& track, const std::filesystem::path& path) {
    track.validate();
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    char line[96];
    for (const Phase& p : track.phases) {
        std::snprintf(line, sizeof(line), "%.6f\t%.6f\t%s\n", p.start_s, p.end_s,
                      to_string(p.label));
        out << line;
    }
    if (!out) throw IoError("write failed: " + path.string());
}

inline LabelTrack read_labels(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open: " + path.string());
    LabelTrack track;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        // tolerate blank lines and '#' comments
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ss(line);
        double start = 0, end = 0;
        std::string token;
        if (!(ss >> start >> end >> token))
            throw ValidationError("label parse error at " + path.string() + ":" +
                                  std::to_string(lineno));
        track.phases.push_back({start, end, parse_label(token)});
    }
    track.validate();
    return track;
}

} // namespace breathseg

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <tuple>
#include <vector>

#include "breathseg/errors.hpp"
#include "breathseg/labels.hpp"

namespace breathseg {

struct BoundaryPair {
    std::size_t ref_index = 0;
    std::size_t hyp_index = 0;
    double abs_dt_s = 0.0;
};

struct BoundaryMatching {
    std::vector<BoundaryPair> pairs;          // one-to-one
    std::vector<std::size_t> unmatched_ref;   // deletions
    std::vector<std::size_t> unmatched_hyp;   // insertions
    double threshold_s = 0.0;
};

namespace detail {

inline void require_increasing(const std::vector<double>& t, const char* who) {
    for (std::size_t i = 1; i < t.size(); ++i)
        if (!(t[i] > t[i - 1]))
            throw ValidationError(std::string(who) + " boundaries not strictly increasing");
}

} // namespace detail

// Greedy one-to-one matching by globally increasing |dt|: repeatedly pair
// the closest unpaired (ref, hyp) within the threshold; ties break toward
// the earlier ref time, then the earlier hyp time.
inline BoundaryMatching match_boundaries(const std::vector<double>& ref,
                                         const std::vector<double>& hyp,
                                         double threshold_s) {
    if (!(threshold_s > 0.0))
        throw ValidationError("match threshold must be positive");
    detail::require_increasing(ref, "reference");
    detail::require_increasing(hyp, "hypothesis");

    std::vector<std::tuple<double, double, double, std::size_t, std::size_t>> cand;
    for (std::size_t i = 0; i < ref.size(); ++i)
        for (std::size_t j = 0; j < hyp.size(); ++j) {
            const double dt = std::fabs(ref[i] - hyp[j]);
            if (dt <= threshold_s) cand.emplace_back(dt, ref[i], hyp[j], i, j);
        }
    std::sort(cand.begin(), cand.end());

    BoundaryMatching m;
    m.threshold_s = threshold_s;
    std::vector<char> ref_used(ref.size(), 0), hyp_used(hyp.size(), 0);
    for (const auto& [dt, rt, ht, i, j] : cand) {
        if (ref_used[i] || hyp_used[j]) continue;
        ref_used[i] = hyp_used[j] = 1;
        m.pairs.push_back({i, j, dt});
    }
    for (std::size_t i = 0; i < ref.size(); ++i)
        if (!ref_used[i]) m.unmatched_ref.push_back(i);
    for (std::size_t j = 0; j < hyp.size(); ++j)
        if (!hyp_used[j]) m.unmatched_hyp.push_back(j);
    return m;
}

// Common duration divided by the larger of the two durations; 0 if disjoint.
inline double overlap_rate(double ref_start, double ref_end, double hyp_start,
                           double hyp_end) {
    if (!(ref_start < ref_end) || !(hyp_start < hyp_end))
        throw ValidationError("overlap_rate: degenerate segment");
    const double common =
        std::max(0.0, std::min(ref_end, hyp_end) - std::max(ref_start, hyp_start));
    return common / std::max(ref_end - ref_start, hyp_end - hyp_start);
}

struct EvalReport {
    double match_pct = 0.0;
    double deletion_pct = 0.0;
    double insertion_pct = 0.0;
    double segment_match_pct = 0.0;
    double ovr_mean = 0.0; // 0 when no segment matched
    double ovr_std = 0.0;
    std::size_t n_ref_boundaries = 0;
    std::size_t n_hyp_boundaries = 0;
    std::size_t n_segments = 0;
    std::size_t n_segment_matches = 0;
    std::vector<double> boundaries_ref;
    std::vector<double> boundaries_hyp;
};

// M/D/I/S percentages plus overlap-rate statistics. A reference segment is
// matched iff both of its endpoint boundaries matched; its hypothesis
// counterpart is the span between the two matched hyp boundaries.
inline EvalReport compute_report(const LabelTrack& ref, const LabelTrack& hyp,
                                 double threshold_s = 0.5) {
    ref.validate();
    hyp.validate();
    const std::vector<double> rb = ref.boundaries();
    const std::vector<double> hb = hyp.boundaries();
    if (rb.empty()) throw ValidationError("empty reference track");

    const BoundaryMatching m = match_boundaries(rb, hb, threshold_s);
    std::vector<long> hyp_of(rb.size(), -1);
    for (const BoundaryPair& p : m.pairs)
        hyp_of[p.ref_index] = static_cast<long>(p.hyp_index);

    EvalReport rep;
    rep.boundaries_ref = rb;
    rep.boundaries_hyp = hb;
    rep.n_ref_boundaries = rb.size();
    rep.n_hyp_boundaries = hb.size();
    rep.n_segments = ref.phases.size();

    rep.match_pct = 100.0 * m.pairs.size() / rb.size();
    rep.deletion_pct = 100.0 - rep.match_pct;
    rep.insertion_pct = 100.0 * m.unmatched_hyp.size() / rb.size();

    std::vector<double> ovrs;
    for (std::size_t i = 0; i + 1 < rb.size(); ++i) {
        if (hyp_of[i] < 0 || hyp_of[i + 1] < 0) continue;
        ++rep.n_segment_matches;
        double h0 = hb[static_cast<std::size_t>(hyp_of[i])];
        double h1 = hb[static_cast<std::size_t>(hyp_of[i + 1])];
        if (h0 > h1) std::swap(h0, h1); // crossed matches: treat as the spanned interval
        ovrs.push_back(h0 == h1 ? 0.0 : overlap_rate(rb[i], rb[i + 1], h0, h1));
    }
    rep.segment_match_pct =
        rep.n_segments ? 100.0 * rep.n_segment_matches / rep.n_segments : 0.0;

    if (!ovrs.empty()) {
        double mean = 0.0;
        for (double v : ovrs) mean += v;
        mean /= ovrs.size();
        double var = 0.0;
        for (double v : ovrs) var += (v - mean) * (v - mean);
        rep.ovr_mean = mean;
        rep.ovr_std = ovrs.size() > 1 ? std::sqrt(var / ovrs.size()) : 0.0;
    }
    return rep;
}

} // namespace breathseg

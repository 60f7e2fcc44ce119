#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "breathseg/energy.hpp"
#include "breathseg/errors.hpp"
#include "breathseg/labels.hpp"
#include "breathseg/triangle.hpp"

namespace breathseg {

struct IndexRange {
    long lo = 0;
    long hi = -1;
    bool empty() const { return lo > hi; }
};

// Search interval for the boundary that ends phase k (expected near k*d):
// [k*floor(d*(1-delta)), k*floor(d*(1+delta))] clamped to [1, M-1].
inline IndexRange candidate_range(int k, double d, double delta, long M) {
    if (k < 1) throw ValidationError("candidate_range: phase index must be >= 1");
    if (!(delta > 0.0 && delta < 1.0))
        throw ValidationError("candidate_range: delta must lie in (0, 1)");
    if (!(d > 0.0)) throw ValidationError("candidate_range: d must be positive");
    IndexRange r;
    r.lo = std::max(1L, k * static_cast<long>(std::floor(d * (1.0 - delta))));
    r.hi = std::min(M - 1, k * static_cast<long>(std::floor(d * (1.0 + delta))));
    return r;
}

struct SegmentationResult {
    std::vector<long> boundaries_frames; // n1*..n_{P+1}* in E_d frames
    std::vector<double> boundaries_s;
    double total_cost = 0.0;
    int n_phases = 0;  // P
    double d = 0.0;    // average phase duration, E_d frames
    double delta = 0.0;
};

namespace detail {

// Memoized J(a,b) evaluations over E_d; the same segment cost recurs across
// the overlapping candidate ranges of adjacent phases.
class SegmentCost {
  public:
    explicit SegmentCost(std::span<const double> values) : values_(values) {
        memo_.reserve(1024);
    }
    double operator()(long a, long b) {
        const std::uint64_t key =
            (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        const double j =
            fit_triangle(values_.subspan(static_cast<std::size_t>(a),
                                         static_cast<std::size_t>(b - a + 1)),
                         a)
                .cost;
        memo_.emplace(key, j);
        return j;
    }

  private:
    std::span<const double> values_;
    std::unordered_map<std::uint64_t, double> memo_;
};

} // namespace detail

// Place P triangles end-to-end over E_d by dynamic programming: boundary
// n_{k+1} ending phase k is searched within candidate_range(k), every phase
// spans at least 2 frames, the first boundary is pinned to 0 and the last
// to M. Ties resolve toward the smallest candidate index.
inline SegmentationResult segment(const EnergySignal& e_d, int P, double d,
                                  double delta = 0.3) {
    const long M = static_cast<long>(e_d.values.size()) - 1;
    if (P < 1) throw ValidationError("segment: P must be >= 1");
    if (M < 2L * P)
        throw InfeasibleError("segment: signal of " + std::to_string(M + 1) +
                              " frames too short for P=" + std::to_string(P));

    detail::SegmentCost J(e_d.values);
    SegmentationResult res;
    res.n_phases = P;
    res.d = d;
    res.delta = delta;

    if (P == 1) {
        res.boundaries_frames = {0, M};
    } else {
        std::vector<IndexRange> range(P); // range[k] bounds n_{k+1}, k = 1..P-1
        for (int k = 1; k < P; ++k) {
            range[k] = candidate_range(k, d, delta, M);
            if (range[k].empty())
                throw InfeasibleError("segment: empty candidate range for phase " +
                                      std::to_string(k));
        }

        constexpr double kInf = std::numeric_limits<double>::infinity();
        // cost[k][i], pred[k][i] over offsets i into range[k]
        std::vector<std::vector<double>> cost(P);
        std::vector<std::vector<long>> pred(P);

        cost[1].assign(static_cast<std::size_t>(range[1].hi - range[1].lo + 1), kInf);
        for (long n2 = std::max(range[1].lo, 2L); n2 <= range[1].hi; ++n2)
            cost[1][static_cast<std::size_t>(n2 - range[1].lo)] = J(0, n2);

        for (int k = 2; k < P; ++k) {
            const IndexRange cur = range[k];
            const IndexRange prev = range[k - 1];
            cost[k].assign(static_cast<std::size_t>(cur.hi - cur.lo + 1), kInf);
            pred[k].assign(cost[k].size(), -1);
            for (long n = cur.lo; n <= cur.hi; ++n) {
                double best = kInf;
                long arg = -1;
                for (long m = prev.lo; m <= std::min(prev.hi, n - 2); ++m) {
                    const double base = cost[k - 1][static_cast<std::size_t>(m - prev.lo)];
                    if (base == kInf) continue;
                    const double c = base + J(m, n);
                    if (c < best) {
                        best = c;
                        arg = m;
                    }
                }
                cost[k][static_cast<std::size_t>(n - cur.lo)] = best;
                pred[k][static_cast<std::size_t>(n - cur.lo)] = arg;
            }
        }

        // final phase P ends at the pinned boundary M
        const IndexRange prev = range[P - 1];
        double best = kInf;
        long arg = -1;
        for (long m = prev.lo; m <= std::min(prev.hi, M - 2); ++m) {
            const double base = cost[P - 1][static_cast<std::size_t>(m - prev.lo)];
            if (base == kInf) continue;
            const double c = base + J(m, M);
            if (c < best) {
                best = c;
                arg = m;
            }
        }
        if (arg < 0)
            throw InfeasibleError("segment: no admissible boundary for phase " +
                                  std::to_string(P));

        std::vector<long> rev = {M, arg};
        for (int k = P - 1; k >= 2; --k) {
            const long n = rev.back();
            const long m = pred[k][static_cast<std::size_t>(n - range[k].lo)];
            if (m < 0)
                throw InfeasibleError("segment: no admissible boundary for phase " +
                                      std::to_string(k));
            rev.push_back(m);
        }
        rev.push_back(0);
        res.boundaries_frames.assign(rev.rbegin(), rev.rend());
    }

    // recompute the accumulated cost independently of the DP tables
    double total = 0.0;
    for (std::size_t p = 0; p + 1 < res.boundaries_frames.size(); ++p)
        total += fit_triangle(
                     std::span<const double>(e_d.values)
                         .subspan(static_cast<std::size_t>(res.boundaries_frames[p]),
                                  static_cast<std::size_t>(res.boundaries_frames[p + 1] -
                                                           res.boundaries_frames[p] + 1)),
                     res.boundaries_frames[p])
                     .cost;
    res.total_cost = total;

    res.boundaries_s.reserve(res.boundaries_frames.size());
    for (long b : res.boundaries_frames)
        res.boundaries_s.push_back(b / e_d.frame_rate);
    return res;
}

// Consecutive boundary pairs become phases with alternating labels.
inline LabelTrack boundaries_to_track(const SegmentationResult& result,
                                      Label first_label, double frame_rate) {
    LabelTrack track;
    Label label = first_label;
    for (std::size_t p = 0; p + 1 < result.boundaries_frames.size(); ++p) {
        track.phases.push_back({result.boundaries_frames[p] / frame_rate,
                                result.boundaries_frames[p + 1] / frame_rate, label});
        label = opposite(label);
    }
    return track;
}

} // namespace breathseg

#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "breathseg/errors.hpp"

namespace breathseg {

// One triangle fitted to an energy segment: zero-valued endpoints k1, k3,
// apex (k2, alpha), and the squared-residual cost of the fit.
struct TriangleFit {
    long k1 = 0;
    long k2 = 0;
    long k3 = 0;
    double alpha = 0.0;
    double cost = 0.0;
};

// Piecewise-linear triangle through (k1,0), (k2,alpha), (k3,0).
inline double triangle_template(long k1, long k2, long k3, double alpha, long k) {
    if (!(k1 < k2 && k2 < k3))
        throw ValidationError("triangle_template: need k1 < k2 < k3");
    if (k < k1 || k > k3)
        throw ValidationError("triangle_template: k outside [k1, k3]");
    if (k <= k2) return alpha * static_cast<double>(k - k1) / static_cast<double>(k2 - k1);
    return alpha * static_cast<double>(k - k3) / static_cast<double>(k2 - k3);
}

// Least-squares triangle fit over x[0..L] viewed at absolute indices
// k1..k1+L. For each interior apex k2 the optimal height is
// alpha* = sum(x*g) / sum(g*g) with g the unit-apex template; the swept k2
// with minimal residual wins, ties going to the smallest k2.
//
// Per-apex sums come from prefix accumulators, so a call is O(L) instead of
// the O(L^2) of re-summing the template for every candidate.
inline TriangleFit fit_triangle(std::span<const double> x, long k1 = 0) {
    const std::size_t len = x.size();
    if (len < 3)
        throw ValidationError("fit_triangle: segment needs at least 3 points, got " +
                              std::to_string(len));
    const long L = static_cast<long>(len) - 1;

    // prefix sums: p1[i] = sum x[0..i-1], p2[i] = sum j*x[j] for j < i
    std::vector<double> p1(len + 1, 0.0), p2(len + 1, 0.0);
    double sxx = 0.0;
    for (std::size_t j = 0; j < len; ++j) {
        p1[j + 1] = p1[j] + x[j];
        p2[j + 1] = p2[j] + static_cast<double>(j) * x[j];
        sxx += x[j] * x[j];
    }
    const auto sq_sum = [](double m) { // sum of u^2 for u = 0..m
        return m * (m + 1.0) * (2.0 * m + 1.0) / 6.0;
    };

    TriangleFit best;
    bool first = true;
    for (long k2 = 1; k2 < L; ++k2) {
        const double m1 = static_cast<double>(k2);     // rising span length
        const double m2 = static_cast<double>(L - k2); // falling span length
        // sum x*g: rising side g = j/m1 over [0..k2], falling g = (L-j)/m2 over (k2..L]
        const double rise = p2[k2 + 1] / m1;
        const double fall =
            (static_cast<double>(L) * (p1[L + 1] - p1[k2 + 1]) - (p2[L + 1] - p2[k2 + 1])) / m2;
        const double sxg = rise + fall;
        // sum g^2: exact integer-power sums on both slopes
        const double sgg = sq_sum(m1) / (m1 * m1) + sq_sum(m2 - 1.0) / (m2 * m2);
        const double alpha = sxg / sgg;
        const double cost = std::max(0.0, sxx - alpha * sxg);
        if (first || cost < best.cost) {
            best = {k1, k1 + k2, k1 + L, alpha, cost};
            first = false;
        }
    }
    return best;
}

} // namespace breathseg

#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "breathseg/errors.hpp"

namespace breathseg {

// Mono breath recording. Samples are dimensionless amplitudes, nominally
// in [-1, 1]; the sample rate is whatever the source file carried.
struct AudioBuffer {
    std::vector<double> samples;
    int sample_rate = 0;

    std::size_t size() const { return samples.size(); }
    double duration_s() const {
        return static_cast<double>(samples.size()) / sample_rate;
    }

    void validate() const {
        if (sample_rate <= 0)
            throw ValidationError("AudioBuffer: sample_rate must be positive");
        if (samples.empty())
            throw ValidationError("AudioBuffer: no samples");
        for (double v : samples)
            if (!std::isfinite(v))
                throw ValidationError("AudioBuffer: non-finite sample");
    }
};

} // namespace breathseg

#pragma once

#include <stdexcept>
#include <string>

namespace breathseg {

// Error categories map 1:1 onto the CLI exit codes (see tools/).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File/format problems: missing files, malformed WAV headers, unsupported
// encodings, sample rates the pipeline cannot run at. Exit code 2.
struct IoError : Error {
    using Error::Error;
};

// Spectral rate estimation failed (empty search band, no periodicity).
// Exit code 3.
struct EstimationError : Error {
    using Error::Error;
};

// The DP has no admissible boundary sequence for the given P/d/delta.
// Exit code 4.
struct InfeasibleError : Error {
    using Error::Error;
};

// Invariant or parameter violations: bad label files, contract breaches,
// out-of-range arguments. Exit code 5.
struct ValidationError : Error {
    using Error::Error;
};

} // namespace breathseg

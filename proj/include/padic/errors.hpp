#pragma once

#include <stdexcept>
#include <string>

namespace padic {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input (bad rational text, composite "prime",
// zero denominator, unsupported degree, ...).  CLI exit code 2.
struct invalid_input : error {
    using error::error;
};

// Truncated arithmetic ran out of digits: cancellation consumed the tracked
// precision, a comparison against an effective zero was requested, or a
// division by an effective zero occurred.  CLI exit code 4.
struct precision_exhausted : error {
    using error::error;
};

// Norm comparison involving a value indistinguishable from zero at the
// current precision.
struct indeterminate_comparison : precision_exhausted {
    using precision_exhausted::precision_exhausted;
};

// Division by a value indistinguishable from zero at the current precision.
struct effective_zero_division : precision_exhausted {
    using precision_exhausted::precision_exhausted;
};

// A partition function evaluated to (effective) zero; the measure is not
// normalizable for this parameter/law pair.
struct degenerate_normalization : error {
    using error::error;
};

// A guarantee the implementation relies on failed (BFS width cap, residual
// class left ambiguous past the proven depth).  Indicates a bug, not bad input.
struct internal_error : error {
    using error::error;
};

}  // namespace padic

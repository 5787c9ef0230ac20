#pragma once

#include <stdexcept>
#include <string>

namespace isgd {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonFiniteEncountered : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularLyapunov : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EigConvergenceFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CovarianceIllPosed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RegimeUnsupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InsufficientRuns : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoAveragedIterates : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace isgd

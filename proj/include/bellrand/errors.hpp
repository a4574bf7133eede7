#pragma once

#include <stdexcept>
#include <string>

namespace bellrand {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EvenPartyCount : Error {
    explicit EvenPartyCount(int n)
        : Error("operation requires an odd number of parties, got n=" + std::to_string(n)) {}
};

struct SignallingDetected : Error {
    using Error::Error;
};

struct NegativeProbability : Error {
    using Error::Error;
};

struct WeightSumMismatch : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct NotMaximallyViolating : Error {
    using Error::Error;
};

struct NonMerminInput : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct MerminConditionsNotImposed : Error {
    using Error::Error;
};

struct InfeasibleProgram : Error {
    using Error::Error;
};

struct NumericallyUnstable : Error {
    using Error::Error;
};

}  // namespace bellrand

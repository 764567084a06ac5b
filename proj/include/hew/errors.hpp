#pragma once

#include <stdexcept>
#include <string>

namespace hew {

/// Base class for all workbench errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid modulus, dimension, or scheme parameter.
struct ParamError : Error {
    using Error::Error;
};

/// Message outside the scheme's message space.
struct MessageRangeError : Error {
    using Error::Error;
};

/// Element not invertible modulo n.
struct NotInvertibleError : Error {
    using Error::Error;
};

/// Operation not supported by the selected scheme (e.g. ciphertext-ciphertext
/// multiplication under Paillier).
struct CapabilityError : Error {
    using Error::Error;
};

/// Multiplication requested on a ciphertext whose level budget is exhausted.
struct DepthBudgetError : Error {
    using Error::Error;
};

/// Pre-flight analysis detected that encoded integers may wrap past +-q/2.
struct OverflowRiskError : Error {
    using Error::Error;
};

/// Bad experiment configuration (CLI or programmatic).
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace hew

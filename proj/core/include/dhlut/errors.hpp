// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace dhlut {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A scalar argument violates its documented domain.
struct InvalidParameter : Error {
    using Error::Error;
};

/// A requested target lies outside the attainable range.
struct OutOfRange : Error {
    using Error::Error;
};

/// Input data is malformed (shape mismatch, non-finite samples, ...).
struct InvalidInput : Error {
    using Error::Error;
};

/// A ratio metric is undefined because its denominator is zero.
struct DegenerateDenominator : Error {
    using Error::Error;
};

/// Filesystem or serialization failure.
struct IoError : Error {
    using Error::Error;
};

/// Experiment configuration rejected; carries the offending field name.
struct ConfigError : Error {
    ConfigError(std::string field, const std::string& detail)
        : Error("config field '" + field + "': " + detail), field_name(std::move(field)) {}

    std::string field_name;
};

}  // namespace dhlut

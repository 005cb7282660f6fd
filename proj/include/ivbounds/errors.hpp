#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace ivbounds {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ValidationKind {
    NegativeEntry,
    EntryAboveOne,
    ConditionalSumNotOne,
    MalformedNumber,
    MissingEntry,
    UnknownEntry,
};

/// Raised when an input probability table or mass function is rejected.
class ValidationError : public Error {
public:
    ValidationError(ValidationKind kind, std::string what, std::optional<int> z = std::nullopt)
        : Error(std::move(what)), kind_(kind), z_(z) {}

    ValidationKind kind() const noexcept { return kind_; }
    /// Instrument value of the offending conditional distribution, when the error is about one.
    std::optional<int> instrument() const noexcept { return z_; }

private:
    ValidationKind kind_;
    std::optional<int> z_;
};

/// The data violate the nonnegative-margin condition that makes the monotone model nonempty.
class ConsistencyViolated : public Error {
public:
    using Error::Error;
};

class TargetOutsideInterval : public Error {
public:
    using Error::Error;
};

class MalformedTargets : public Error {
public:
    using Error::Error;
};

}  // namespace ivbounds

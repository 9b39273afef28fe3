#pragma once

#include <stdexcept>
#include <string>

namespace cubicmate {

enum class ErrorKind {
    NotInvariant,
    NotRotationSet,
    InvalidSignature,
    InternalNonUnique,
    PreperiodicArgument,
    AmbiguousSearch,
    NotInRotationSet,
    EvenPeriod,
    CoPeriodicAngle,
    InconsistentLamination,
    MissingMarkers,
    InvalidArgument,
};

const char *error_kind_name(ErrorKind kind);

/// Domain failure raised by the combinatorics engine. Parse failures of
/// user-supplied text are reported as std::invalid_argument instead.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {
    }

    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

}  // namespace cubicmate

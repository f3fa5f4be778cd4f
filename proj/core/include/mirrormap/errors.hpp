#pragma once

#include <stdexcept>
#include <string>

namespace mirrormap {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Division by a series whose constant term is zero.
struct NotAUnit : Error {
    using Error::Error;
};

// Precondition violation on an analytic operation (exp/log/compose/revert/...).
struct DomainError : Error {
    using Error::Error;
};

// Forward solve hit P_m(n) = 0 at a positive index.
struct NonsolvableRecurrence : Error {
    long index;
    NonsolvableRecurrence(const std::string& what, long n) : Error(what), index(n) {}
};

// Model data violates a structural condition (Calabi-Yau balance, lattice relation, ...).
struct ModelError : Error {
    using Error::Error;
};

// Operator with A_{d+1}(0) = 0 where a Picard-Fuchs operator is required.
struct NotPicardFuchs : Error {
    using Error::Error;
};

// Instanton extraction is defined for threefolds only.
struct UnsupportedDimension : Error {
    using Error::Error;
};

// The two bivariate recurrences produced conflicting coefficients.
struct InconsistentSystem : Error {
    using Error::Error;
};

// Config file failed schema validation; message names the offending field.
struct ConfigError : Error {
    using Error::Error;
};

// Recurrence fitting failed (empty nullspace / ambiguous fit).
struct FitFailure : Error {
    using Error::Error;
};

}  // namespace mirrormap

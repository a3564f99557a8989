// errors.hpp — error kinds thrown across the library
#pragma once

#include <stdexcept>
#include <string>

namespace qsd {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotHermitian : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct DimMismatch : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct TruncationOverflow : Error { using Error::Error; };
struct InvalidEnsemble : Error { using Error::Error; };
struct UnsupportedEnsemble : Error { using Error::Error; };
struct NotDensityOperator : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

} // namespace qsd

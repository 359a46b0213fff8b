#pragma once

#include <stdexcept>
#include <string>

namespace qv {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPrimePower : Error { using Error::Error; };
struct UnsupportedOrder : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct AmbientMismatch : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };
struct HypothesisViolated : Error { using Error::Error; };
struct EmptyFamily : Error { using Error::Error; };
struct NoCoverWithinBound : Error { using Error::Error; };
struct NoWitness : Error { using Error::Error; };
struct NotMaximal : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };
struct InfeasibleGrid : Error { using Error::Error; };
struct UnknownClaim : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

} // namespace qv

#pragma once

#include <stdexcept>
#include <string>

namespace jscheme {

/// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- input / precondition violations ---
struct NonSquare : Error {
    using Error::Error;
};
struct NotARainbow : Error {
    using Error::Error;
};
struct OrderMismatch : Error {
    using Error::Error;
};
struct NotSymmetric : Error {
    using Error::Error;
};
struct NotIrreflexive : Error {
    using Error::Error;
};
struct NotHomogeneous : Error {
    using Error::Error;
};
struct NotJordan : Error {
    using Error::Error;
};
struct WrongRank : Error {
    using Error::Error;
};
struct LabelMismatch : Error {
    using Error::Error;
};
struct DivisibilityError : Error {
    using Error::Error;
};
struct InfeasibleParams : Error {
    using Error::Error;
};
struct SpecInvalid : Error {
    using Error::Error;
};
struct BaseInvalid : Error {
    using Error::Error;
};
struct BadFiberIndex : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

// --- internal failures (CLI exit code 3) ---

/// A constructed object failed its own self-verification.
struct TableVerificationFailed : Error {
    using Error::Error;
};

/// An invariant that is mathematically guaranteed was observed to fail.
struct InternalError : Error {
    using Error::Error;
};

/// Exact integer arithmetic would have wrapped around.
struct OverflowError : Error {
    using Error::Error;
};

}  // namespace jscheme

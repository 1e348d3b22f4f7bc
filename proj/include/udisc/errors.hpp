#pragma once

#include <stdexcept>
#include <string>

namespace udisc {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- input rejections (CLI exit code 2) ---

/// s < 6 or t < 6.
struct RejectTooSmall : Error {
  using Error::Error;
};

/// t odd while s != t: no unique tiling exists.
struct RejectOddT : Error {
  RejectOddT() : Error("t must be even unless s = t") {}
};

/// s = t = 6: the flat tiling, where P = 2 and the limit formulas are singular.
struct FlatCase : Error {
  using Error::Error;
};

/// Requested disc radius exceeds the configured cap.
struct CapExceeded : Error {
  using Error::Error;
};

/// Sphere index outside the trusted range of a generated disc.
struct RadiusOutOfRange : Error {
  using Error::Error;
};

/// Disc generation is defined for even t only.
struct UnsupportedOddT : Error {
  using Error::Error;
};

/// Sequence not defined for this quantity (odd t supports sphere lengths only).
struct UnsupportedQuantity : Error {
  using Error::Error;
};

/// Empty or inverted sampling range.
struct EmptyRange : Error {
  using Error::Error;
};

/// Render kind not one of disc | hyperbolas | ratio-convergence.
struct UnknownRenderKind : Error {
  using Error::Error;
};

/// Caller violated a documented precondition.
struct InvalidArgument : Error {
  using Error::Error;
};

// --- internal invariant violations (CLI exit code 1) ---

struct InternalError : Error {
  using Error::Error;
};

/// Two construction rules disagreed about the same vertex, or an identity
/// that must hold exactly failed. Always a bug, never a data condition.
struct ContradictionError : InternalError {
  using InternalError::InternalError;
};

/// Closed-form evaluation left a non-negligible imaginary residue.
struct NonRealResult : InternalError {
  using InternalError::InternalError;
};

}  // namespace udisc

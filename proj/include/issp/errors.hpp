// SPDX-License-Identifier: Apache-2.0

#ifndef ISSP_ERRORS_HPP
#define ISSP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace issp {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (x <= 0 for a
// Hankel function, coincident kernel points, |m| > n, ...).
struct DomainError : Error {
  using Error::Error;
};

// A configurable cap (max order, max Sobolev derivative order, spectral
// truncation vs grid size) was exceeded.
struct CapError : Error {
  using Error::Error;
};

// Invalid run configuration (non-positive radius, missing margin r < R, ...).
struct ConfigError : Error {
  using Error::Error;
};

// Operation invoked on data in the wrong state (e.g. Neumann trace missing).
struct StateError : Error {
  using Error::Error;
};

// Mismatched array shapes / grids.
struct ShapeError : Error {
  using Error::Error;
};

// Scalar argument outside the range covered by the supplied data or by a
// lemma hypothesis.
struct RangeError : Error {
  using Error::Error;
};

// I/O failure on datasets, caches or CSV output.
struct IoError : Error {
  using Error::Error;
};

}  // namespace issp

#endif  // ISSP_ERRORS_HPP

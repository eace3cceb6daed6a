// Copyright (C) 2026 The Kronecker Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace kronecker {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation was violated by the caller.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Certified numerics could not separate or match roots within the
/// precision cap.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check failed. Indicates a bug, never bad input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace kronecker

// Copyright 2026 The tardy Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace tardy {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller broke an operation's precondition (index out of range, wrong
/// machine count, mismatched fingerprint parameters, ...).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// The requested universe or enumeration exceeds a configured limit.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A sum operation would move a member outside the universe.
class InvalidStateError : public Error {
 public:
  using Error::Error;
};

/// A reconstruction target is not an achievable total.
class NotAchievableError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace tardy

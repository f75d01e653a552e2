// Copyright 2026 The galois-words Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GALOIS_ERROR_HPP
#define GALOIS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace galois {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public PreconditionViolated {
 public:
  EmptyInput() : PreconditionViolated("input word is empty") {}
  explicit EmptyInput(const std::string& what) : PreconditionViolated(what) {}
};

class NotPrimitive : public PreconditionViolated {
 public:
  NotPrimitive() : PreconditionViolated("input word is not primitive") {}
};

class UseAfterFinish : public Error {
 public:
  UseAfterFinish() : Error("factorizer already finished") {}
};

class InputTooLong : public PreconditionViolated {
 public:
  using PreconditionViolated::PreconditionViolated;
};

/// Raised by the brute-force oracles when a property that must hold for
/// every word is violated (no or several Galois factorizations/rotations).
class OracleInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace galois

#endif  // GALOIS_ERROR_HPP

// Copyright 2026 The frqi-interp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace frqi {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// A gate or register referenced a qubit outside the circuit/state.
class QubitIndexError : public Error {
 public:
  using Error::Error;
};

/// A dense state would exceed the configured qubit budget.
class BudgetExceededError : public Error {
 public:
  BudgetExceededError(const std::string& message, unsigned required_qubits)
      : Error(message), required_qubits_(required_qubits) {}
  unsigned required_qubits() const noexcept { return required_qubits_; }

 private:
  unsigned required_qubits_;
};

/// decompose_gate() was asked to expand a gate it has no network for.
class UnsupportedGateError : public Error {
 public:
  using Error::Error;
};

/// The state handed to a FRQI decoder does not have FRQI block structure.
class NonFrqiStateError : public Error {
 public:
  using Error::Error;
};

/// Bad shapes, sizes or parameters (dimension mismatch, non power of two...).
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

}  // namespace frqi

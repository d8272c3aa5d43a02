// Copyright 2026 The qwl Authors
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

namespace qwl {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Operand dimensions do not fit the operation.
class ShapeError : public Error {
  public:
    using Error::Error;
};

/// Input violates an operation's numerical precondition (Hermitian, unitary, unit norm).
class ContractError : public Error {
  public:
    using Error::Error;
};

/// Parameter outside the supported domain (d < 2, non-prime d, exponent range).
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Requested register exceeds the dense-matrix resource cap.
class CapacityError : public Error {
  public:
    using Error::Error;
};

/// Measurement data do not determine the state.
class UnderdeterminedError : public Error {
  public:
    using Error::Error;
};

/// Malformed JSON matrix or operator file.
class ParseError : public Error {
  public:
    using Error::Error;
};

} // namespace qwl

// Copyright 2026 The DiversiTree Authors
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

#ifndef DIVERSITREE_ERROR_HPP_
#define DIVERSITREE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace diversitree {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition of a public operation was violated by the caller.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// Inputs are well formed but the requested quantity is undefined for them
// (e.g. DBin of a singleton set).
class UndefinedInput : public Error {
 public:
  using Error::Error;
};

// The instance failed structural validation.
class ModelError : public Error {
 public:
  using Error::Error;
};

inline void Expects(bool condition, const std::string& message) {
  if (!condition) throw ContractViolation(message);
}

}  // namespace diversitree

#endif  // DIVERSITREE_ERROR_HPP_

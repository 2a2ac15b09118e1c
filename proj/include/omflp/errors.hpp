// Copyright 2026 The OMFLP Authors
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

#ifndef OMFLP_ERRORS_HPP_
#define OMFLP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace omflp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input shape, e.g. a non-square distance matrix.
class StructuralError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// A Table cost model has no entry for the queried (point, configuration).
class MissingCostError : public Error {
 public:
  using Error::Error;
};

class InfeasibleSolutionError : public Error {
 public:
  using Error::Error;
};

// The exact oracle refuses instances beyond its enumeration limits.
class LimitExceededError : public Error {
 public:
  LimitExceededError(std::string reason, const std::string& message)
      : Error(message), reason_(std::move(reason)) {}
  // Machine-readable reason code, e.g. "too_many_points".
  const std::string& reason() const { return reason_; }

 private:
  std::string reason_;
};

class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

}  // namespace omflp

#endif  // OMFLP_ERRORS_HPP_

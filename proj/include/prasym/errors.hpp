// Copyright 2026 The prasym Authors.
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

namespace prasym {

// Base class for all library errors. The CLI maps the concrete subclasses
// onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid probability, infeasible weights, malformed preference vector, etc.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// The graph does not support the requested operator (isolated vertex, empty
// graph).
class StructuralError : public Error {
 public:
  using Error::Error;
};

// A dense route was requested above the dense size limit.
class SizeError : public Error {
 public:
  using Error::Error;
};

// Iterative method failed to reach its tolerance where that is fatal.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace prasym

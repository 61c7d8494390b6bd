// Copyright 2026 The svcnet Authors
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

#ifndef SVCNET_ERROR_H_
#define SVCNET_ERROR_H_

#include <stdexcept>
#include <string>

namespace svcnet {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input document (XML, TSV, JSON). The message carries the location.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Caller asked for something inconsistent: bad flag combination, unknown
// format, missing ontology for a semantic matcher. Maps to CLI exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Input is well-formed but cannot support the requested computation.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

// The ontology's subclass edges contain a cycle.
class CycleError : public Error {
 public:
  using Error::Error;
};

}  // namespace svcnet

#endif  // SVCNET_ERROR_H_

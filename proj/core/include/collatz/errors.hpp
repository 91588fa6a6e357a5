// Copyright 2026 The collatz_stop Authors.
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

#ifndef COLLATZ_ERRORS_HPP_
#define COLLATZ_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace collatz {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside an operation's mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input (sequence words, numbers, CSV files).
class ParseError : public Error {
 public:
  using Error::Error;
};

// A configured size cap would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Checkpoint or output file could not be read, written or trusted.
class PersistenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace collatz

#endif  // COLLATZ_ERRORS_HPP_

/*
   Copyright 2026 The cayleylab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace cayleylab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed ring spec, non-prime parameter, unreadable input file.
class SpecError : public Error {
 public:
  using Error::Error;
};

/// -1 is not a p-th power of a unit, so G_R(p) would be directed.
class SymmetryError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (e.g. p does not divide q-1).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Ring larger than the configured size guardrail.
class OversizeError : public Error {
 public:
  using Error::Error;
};

/// A computed object contradicts a proven identity. Never expected to fire.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace cayleylab

// Copyright 2026 The blocktool Authors
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

namespace blocktool {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range user input (bad JSON, non-bijective generators,
/// caps exceeded). Maps to CLI exit code 3.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A verification that must hold mathematically did not. Seeing one of these
/// means either a bug or a counterexample; the message carries the witness.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// A p-adic computation could not be decided within the precision budget.
class InconclusiveError : public Error {
 public:
  using Error::Error;
};

/// A value expected to be p-integral has negative valuation.
class NotIntegralError : public Error {
 public:
  using Error::Error;
};

}  // namespace blocktool

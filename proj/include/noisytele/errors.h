// Copyright 2026 The noisytele Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NOISYTELE_ERRORS_H
#define NOISYTELE_ERRORS_H

#include <stdexcept>
#include <string>

namespace noisytele {

/// Raised when a caller violates an operation's preconditions (bad
/// probability, bad qubit slot, malformed CLI token, ...).
class UsageError : public std::invalid_argument {
 public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a matrix that must be a density matrix is not one.
class ValidationError : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

}  // namespace noisytele

#endif

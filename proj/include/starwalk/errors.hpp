// Copyright 2026 The starwalk Authors
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

namespace starwalk {

/// Graph or experiment parameters outside their documented domain.
class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A numeric contract was broken: a basis that should be invariant leaked,
/// two eigensolvers disagreed, a norm drifted.
class NumericContractViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by the reduced-model derivation when U^2 maps a basis vector
/// outside the span.
class NotInvariantError : public NumericContractViolation {
public:
    using NumericContractViolation::NumericContractViolation;
};

/// Too few distinct data points to fit.
class InsufficientData : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace starwalk

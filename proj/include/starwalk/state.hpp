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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace starwalk {

using Amplitude = std::complex<double>;

/// Complex amplitude per directed edge state, indexed by the graph's
/// canonical state index.
class StateVector {
public:
    StateVector() = default;
    explicit StateVector(std::size_t dim) : amps_(dim) {}
    explicit StateVector(std::vector<Amplitude> amps) : amps_(std::move(amps)) {}

    std::size_t size() const { return amps_.size(); }
    Amplitude& operator[](std::size_t i) { return amps_[i]; }
    const Amplitude& operator[](std::size_t i) const { return amps_[i]; }

    std::span<Amplitude> span() { return amps_; }
    std::span<const Amplitude> span() const { return amps_; }
    const std::vector<Amplitude>& amplitudes() const { return amps_; }

    double norm_squared() const;
    double norm() const;
    Amplitude inner(const StateVector& other) const;  ///< <this|other>

    StateVector& operator+=(const StateVector& other);
    StateVector& operator-=(const StateVector& other);
    StateVector& operator*=(Amplitude a);

    friend bool operator==(const StateVector&, const StateVector&) = default;

private:
    std::vector<Amplitude> amps_;
};

StateVector operator+(StateVector a, const StateVector& b);
StateVector operator-(StateVector a, const StateVector& b);
StateVector operator*(Amplitude a, StateVector v);

/// Unit vector on one state.
StateVector basis_state(std::size_t dim, std::size_t index);

/// max_i |a_i - b_i|
double max_abs_diff(const StateVector& a, const StateVector& b);

}  // namespace starwalk

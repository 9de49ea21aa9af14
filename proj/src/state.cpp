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

#include "starwalk/state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace starwalk {

double StateVector::norm_squared() const {
    double s = 0.0;
    for (const auto& a : amps_) {
        s += std::norm(a);
    }
    return s;
}

double StateVector::norm() const { return std::sqrt(norm_squared()); }

Amplitude StateVector::inner(const StateVector& other) const {
    if (other.size() != size()) {
        throw std::invalid_argument("inner product of vectors with different dimensions");
    }
    Amplitude s{};
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        s += std::conj(amps_[i]) * other.amps_[i];
    }
    return s;
}

StateVector& StateVector::operator+=(const StateVector& other) {
    if (other.size() != size()) {
        throw std::invalid_argument("dimension mismatch");
    }
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        amps_[i] += other.amps_[i];
    }
    return *this;
}

StateVector& StateVector::operator-=(const StateVector& other) {
    if (other.size() != size()) {
        throw std::invalid_argument("dimension mismatch");
    }
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        amps_[i] -= other.amps_[i];
    }
    return *this;
}

StateVector& StateVector::operator*=(Amplitude a) {
    for (auto& x : amps_) {
        x *= a;
    }
    return *this;
}

StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
StateVector operator-(StateVector a, const StateVector& b) { return a -= b; }
StateVector operator*(Amplitude a, StateVector v) { return v *= a; }

StateVector basis_state(std::size_t dim, std::size_t index) {
    StateVector v(dim);
    v[index] = 1.0;
    return v;
}

double max_abs_diff(const StateVector& a, const StateVector& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("dimension mismatch");
    }
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d = std::max(d, std::abs(a[i] - b[i]));
    }
    return d;
}

}  // namespace starwalk

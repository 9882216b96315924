// Copyright 2026 The mbcc Authors
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

#include "mbcc/resources/state_vector.h"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace mbcc::resources {

namespace {

constexpr double kBranchEpsilon = 1e-15;
constexpr double kNormTolerance = 1e-9;
const Amplitude kI{0.0, 1.0};

}  // namespace

StateVector::StateVector(size_t num_qubits) : num_qubits_(num_qubits), amplitudes_(size_t{1} << num_qubits) {
    if (num_qubits > 24) {
        throw std::invalid_argument("state vectors are limited to 24 qubits");
    }
    amplitudes_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes) {
    size_t n = 0;
    while ((size_t{1} << n) < amplitudes.size()) {
        n++;
    }
    if (amplitudes.empty() || (size_t{1} << n) != amplitudes.size()) {
        throw std::invalid_argument("amplitude count must be a power of two");
    }
    StateVector result(n);
    result.amplitudes_ = std::move(amplitudes);
    return result;
}

StateVector StateVector::basis(std::string_view label) {
    StateVector result(label.size());
    size_t index = 0;
    for (char c : label) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("basis label must be a bit string");
        }
        index = (index << 1) | static_cast<size_t>(c - '0');
    }
    result.amplitudes_[0] = 0.0;
    result.amplitudes_[index] = 1.0;
    return result;
}

size_t StateVector::bit_of(size_t q) const {
    if (q >= num_qubits_) {
        throw std::out_of_range("qubit index out of range");
    }
    return size_t{1} << (num_qubits_ - 1 - q);
}

double StateVector::norm_squared() const {
    double total = 0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

void StateVector::normalize() {
    double n = std::sqrt(norm_squared());
    if (n == 0) {
        throw std::invalid_argument("cannot normalize the zero vector");
    }
    for (auto &a : amplitudes_) {
        a /= n;
    }
}

void StateVector::apply_1q(size_t q, Amplitude u00, Amplitude u01, Amplitude u10, Amplitude u11) {
    size_t m = bit_of(q);
    for (size_t k = 0; k < amplitudes_.size(); k++) {
        if (k & m) {
            continue;
        }
        Amplitude a0 = amplitudes_[k];
        Amplitude a1 = amplitudes_[k | m];
        amplitudes_[k] = u00 * a0 + u01 * a1;
        amplitudes_[k | m] = u10 * a0 + u11 * a1;
    }
}

void StateVector::h(size_t q) {
    double r = 1.0 / std::sqrt(2.0);
    apply_1q(q, r, r, r, -r);
}

void StateVector::s(size_t q) {
    apply_1q(q, 1.0, 0.0, 0.0, kI);
}

void StateVector::x(size_t q) {
    apply_1q(q, 0.0, 1.0, 1.0, 0.0);
}

void StateVector::y(size_t q) {
    apply_1q(q, 0.0, -kI, kI, 0.0);
}

void StateVector::z(size_t q) {
    apply_1q(q, 1.0, 0.0, 0.0, -1.0);
}

void StateVector::cnot(size_t control, size_t target) {
    if (control == target) {
        throw std::invalid_argument("CNOT control equals target");
    }
    size_t c = bit_of(control);
    size_t t = bit_of(target);
    for (size_t k = 0; k < amplitudes_.size(); k++) {
        if ((k & c) && !(k & t)) {
            std::swap(amplitudes_[k], amplitudes_[k | t]);
        }
    }
}

StateVector StateVector::applied(const PauliString &pauli) const {
    if (pauli.size() != num_qubits_) {
        throw std::invalid_argument("Pauli string size does not match qubit count");
    }
    size_t flip = 0;
    size_t phase_mask = 0;
    size_t y_count = 0;
    for (size_t q = 0; q < num_qubits_; q++) {
        size_t m = bit_of(q);
        switch (pauli.ops[q]) {
            case Pauli::I:
                break;
            case Pauli::X:
                flip |= m;
                break;
            case Pauli::Y:
                flip |= m;
                phase_mask |= m;
                y_count++;
                break;
            case Pauli::Z:
                phase_mask |= m;
                break;
        }
    }
    // Y = i X Z, so each Y contributes a global i on top of X and Z.
    static const Amplitude kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    Amplitude global = kIPow[y_count % 4] * (pauli.negative ? -1.0 : 1.0);
    StateVector out(num_qubits_);
    for (size_t k = 0; k < amplitudes_.size(); k++) {
        double sign = (std::popcount(k & phase_mask) & 1) ? -1.0 : 1.0;
        out.amplitudes_[k ^ flip] = global * sign * amplitudes_[k];
    }
    return out;
}

Amplitude StateVector::inner(const StateVector &other) const {
    if (other.dimension() != dimension()) {
        throw std::invalid_argument("inner product of states with different dimensions");
    }
    Amplitude total = 0;
    for (size_t k = 0; k < amplitudes_.size(); k++) {
        total += std::conj(amplitudes_[k]) * other.amplitudes_[k];
    }
    return total;
}

double StateVector::expectation(const PauliString &pauli) const {
    return inner(applied(pauli)).real() / norm_squared();
}

PauliMeasurement measure_pauli_statevector(const StateVector &state, size_t qubit, Pauli observable) {
    return measure_pauli_statevector(state, PauliString::single(state.num_qubits(), qubit, observable));
}

PauliMeasurement measure_pauli_statevector(const StateVector &state, const PauliString &observable) {
    if (std::abs(state.norm_squared() - 1.0) > kNormTolerance) {
        throw std::invalid_argument("measurement requires a normalized state");
    }
    StateVector flipped = state.applied(observable);
    std::vector<Amplitude> plus(state.dimension());
    std::vector<Amplitude> minus(state.dimension());
    for (size_t k = 0; k < plus.size(); k++) {
        plus[k] = 0.5 * (state.amplitudes()[k] + flipped.amplitudes()[k]);
        minus[k] = 0.5 * (state.amplitudes()[k] - flipped.amplitudes()[k]);
    }
    PauliMeasurement result{};
    StateVector plus_state = StateVector::from_amplitudes(std::move(plus));
    StateVector minus_state = StateVector::from_amplitudes(std::move(minus));
    result.prob_plus = plus_state.norm_squared();
    result.prob_minus = minus_state.norm_squared();
    if (result.prob_plus > kBranchEpsilon) {
        plus_state.normalize();
        result.post_plus = std::move(plus_state);
    }
    if (result.prob_minus > kBranchEpsilon) {
        minus_state.normalize();
        result.post_minus = std::move(minus_state);
    }
    return result;
}

StateVector make_ghz_state() {
    StateVector s(3);
    s.h(0);
    s.cnot(0, 1);
    s.cnot(1, 2);
    s.x(2);
    s.z(0);
    return s;
}

}  // namespace mbcc::resources

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

#ifndef MBCC_RESOURCES_STATE_VECTOR_H
#define MBCC_RESOURCES_STATE_VECTOR_H

#include <complex>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "mbcc/resources/pauli.h"

namespace mbcc::resources {

using Amplitude = std::complex<double>;

/// Pure state of n qubits as 2^n complex amplitudes.
///
/// Qubit 0 is the leftmost character of a basis label, i.e. the most
/// significant bit of the amplitude index: |001> is index 1. The Y operator
/// is [[0, -i], [i, 0]], so its +1 eigenstate is (|0> + i|1>)/sqrt(2).
class StateVector {
   public:
    /// |0...0>
    explicit StateVector(size_t num_qubits);
    /// Takes amplitudes as given (no renormalization). Length must be a power of two.
    static StateVector from_amplitudes(std::vector<Amplitude> amplitudes);
    static StateVector basis(std::string_view label);

    size_t num_qubits() const {
        return num_qubits_;
    }
    size_t dimension() const {
        return amplitudes_.size();
    }
    const std::vector<Amplitude> &amplitudes() const {
        return amplitudes_;
    }
    Amplitude amplitude(size_t index) const {
        return amplitudes_.at(index);
    }

    double norm_squared() const;
    void normalize();

    void h(size_t q);
    void s(size_t q);
    void x(size_t q);
    void y(size_t q);
    void z(size_t q);
    void cnot(size_t control, size_t target);
    /// Arbitrary single-qubit unitary [[u00, u01], [u10, u11]].
    void apply_1q(size_t q, Amplitude u00, Amplitude u01, Amplitude u10, Amplitude u11);

    /// P|psi> for a signed Pauli string.
    StateVector applied(const PauliString &pauli) const;
    Amplitude inner(const StateVector &other) const;
    /// <psi|P|psi> / <psi|psi>. Real for Hermitian P.
    double expectation(const PauliString &pauli) const;

   private:
    size_t num_qubits_;
    std::vector<Amplitude> amplitudes_;

    size_t bit_of(size_t q) const;
};

/// Result of projecting a state onto the +1 and -1 eigenspaces of a Pauli observable.
///
/// Branch states are renormalized; a branch with probability below 1e-15 has
/// no post-state.
struct PauliMeasurement {
    double prob_plus;
    double prob_minus;
    std::optional<StateVector> post_plus;
    std::optional<StateVector> post_minus;
};

/// Measures a single-qubit observable. Rejects states whose norm is off by more than 1e-9.
PauliMeasurement measure_pauli_statevector(const StateVector &state, size_t qubit, Pauli observable);
/// Measures a multi-qubit Pauli product.
PauliMeasurement measure_pauli_statevector(const StateVector &state, const PauliString &observable);

/// (|001> - |110>)/sqrt(2), prepared by H, two CNOTs, X and Z.
StateVector make_ghz_state();

}  // namespace mbcc::resources

#endif

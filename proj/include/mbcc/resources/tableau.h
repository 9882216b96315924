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

#ifndef MBCC_RESOURCES_TABLEAU_H
#define MBCC_RESOURCES_TABLEAU_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mbcc/resources/pauli.h"
#include "mbcc/resources/rng.h"

namespace mbcc::resources {

/// Stabilizer tableau with destabilizers (Aaronson-Gottesman form).
///
/// Rows 0..n-1 are destabilizers, rows n..2n-1 the stabilizer generators.
/// Supports Clifford gates and measurement of arbitrary Pauli products.
class Tableau {
   public:
    /// |0...0>
    explicit Tableau(size_t num_qubits);

    size_t num_qubits() const {
        return n_;
    }

    void h(size_t q);
    void s(size_t q);
    void x(size_t q);
    void y(size_t q);
    void z(size_t q);
    void cnot(size_t control, size_t target);

    /// The n signed stabilizer generators.
    std::vector<PauliString> stabilizers() const;

    /// Outcome bit if measuring `observable` is deterministic (0 for eigenvalue +1), else nullopt.
    std::optional<uint8_t> peek(const PauliString &observable) const;

    struct Outcome {
        uint8_t bit;
        bool deterministic;
    };
    /// Measures `observable` and collapses. When the outcome is random, `forced`
    /// selects it if given; otherwise it is drawn from `rng`.
    Outcome measure(const PauliString &observable, Rng *rng, std::optional<uint8_t> forced = std::nullopt);

    bool operator==(const Tableau &other) const = default;

   private:
    struct Row {
        std::vector<uint8_t> x;
        std::vector<uint8_t> z;
        uint8_t sign = 0;
        bool operator==(const Row &other) const = default;
    };

    size_t n_;
    std::vector<Row> rows_;

    Row row_from(const PauliString &p) const;
    static bool anticommutes(const Row &a, const Row &b);
    /// target <- source * target, tracking the sign of Hermitian products.
    static void multiply_into(const Row &source, Row &target);
    void check_qubit(size_t q) const;
};

struct StabilizerMeasurement {
    uint8_t outcome;
    Tableau updated;
    bool deterministic;
};

/// Value-semantics wrapper around Tableau::measure.
StabilizerMeasurement stabilizer_measure(Tableau tableau, const PauliString &observable, Rng &rng);

/// Tableau for (|001> - |110>)/sqrt(2), stabilized by +ZZI, -IZZ and -XXX.
Tableau make_ghz_tableau_state();

}  // namespace mbcc::resources

#endif

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

#ifndef MBCC_RESOURCES_PAULI_H
#define MBCC_RESOURCES_PAULI_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mbcc::resources {

enum class Pauli : uint8_t { I, X, Y, Z };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

/// A signed tensor product of single-qubit Paulis, e.g. "-XYY".
struct PauliString {
    bool negative = false;
    std::vector<Pauli> ops;

    PauliString() = default;
    PauliString(bool negative, std::vector<Pauli> ops) : negative(negative), ops(std::move(ops)) {
    }
    /// Accepts an optional leading '+' or '-' followed by letters from "IXYZ_".
    static PauliString parse(std::string_view text);
    /// The single-qubit operator `p` on `qubit`, identity elsewhere.
    static PauliString single(size_t num_qubits, size_t qubit, Pauli p);

    size_t size() const {
        return ops.size();
    }
    std::string str() const;
    bool commutes_with(const PauliString &other) const;
    bool operator==(const PauliString &other) const = default;
};

}  // namespace mbcc::resources

#endif

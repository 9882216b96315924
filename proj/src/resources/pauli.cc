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

#include "mbcc/resources/pauli.h"

#include <stdexcept>

#include "mbcc/errors.h"

namespace mbcc::resources {

char pauli_char(Pauli p) {
    switch (p) {
        case Pauli::I:
            return 'I';
        case Pauli::X:
            return 'X';
        case Pauli::Y:
            return 'Y';
        case Pauli::Z:
            return 'Z';
    }
    return '?';
}

Pauli pauli_from_char(char c) {
    switch (c) {
        case 'I':
        case '_':
            return Pauli::I;
        case 'X':
            return Pauli::X;
        case 'Y':
            return Pauli::Y;
        case 'Z':
            return Pauli::Z;
        default:
            throw ParseError(std::string("not a Pauli letter: '") + c + "'");
    }
}

PauliString PauliString::parse(std::string_view text) {
    PauliString result;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        result.negative = text[0] == '-';
        text.remove_prefix(1);
    }
    if (text.empty()) {
        throw ParseError("empty Pauli string");
    }
    for (char c : text) {
        result.ops.push_back(pauli_from_char(c));
    }
    return result;
}

PauliString PauliString::single(size_t num_qubits, size_t qubit, Pauli p) {
    if (qubit >= num_qubits) {
        throw std::out_of_range("qubit out of range");
    }
    PauliString result(false, std::vector<Pauli>(num_qubits, Pauli::I));
    result.ops[qubit] = p;
    return result;
}

std::string PauliString::str() const {
    std::string s(1, negative ? '-' : '+');
    for (Pauli p : ops) {
        s.push_back(pauli_char(p));
    }
    return s;
}

bool PauliString::commutes_with(const PauliString &other) const {
    if (other.size() != size()) {
        throw std::invalid_argument("Pauli strings act on different qubit counts");
    }
    size_t anti = 0;
    for (size_t k = 0; k < ops.size(); k++) {
        if (ops[k] != Pauli::I && other.ops[k] != Pauli::I && ops[k] != other.ops[k]) {
            anti++;
        }
    }
    return anti % 2 == 0;
}

}  // namespace mbcc::resources

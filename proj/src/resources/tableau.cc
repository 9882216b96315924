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

#include "mbcc/resources/tableau.h"

#include <stdexcept>

#include "mbcc/errors.h"

namespace mbcc::resources {

Tableau::Tableau(size_t num_qubits) : n_(num_qubits), rows_(2 * num_qubits) {
    for (size_t r = 0; r < 2 * n_; r++) {
        rows_[r].x.assign(n_, 0);
        rows_[r].z.assign(n_, 0);
    }
    for (size_t q = 0; q < n_; q++) {
        rows_[q].x[q] = 1;
        rows_[n_ + q].z[q] = 1;
    }
}

void Tableau::check_qubit(size_t q) const {
    if (q >= n_) {
        throw std::out_of_range("qubit index out of range");
    }
}

void Tableau::h(size_t q) {
    check_qubit(q);
    for (auto &r : rows_) {
        r.sign ^= r.x[q] & r.z[q];
        std::swap(r.x[q], r.z[q]);
    }
}

void Tableau::s(size_t q) {
    check_qubit(q);
    for (auto &r : rows_) {
        r.sign ^= r.x[q] & r.z[q];
        r.z[q] ^= r.x[q];
    }
}

void Tableau::x(size_t q) {
    check_qubit(q);
    for (auto &r : rows_) {
        r.sign ^= r.z[q];
    }
}

void Tableau::y(size_t q) {
    check_qubit(q);
    for (auto &r : rows_) {
        r.sign ^= r.x[q] ^ r.z[q];
    }
}

void Tableau::z(size_t q) {
    check_qubit(q);
    for (auto &r : rows_) {
        r.sign ^= r.x[q];
    }
}

void Tableau::cnot(size_t control, size_t target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) {
        throw std::invalid_argument("CNOT control equals target");
    }
    for (auto &r : rows_) {
        r.sign ^= r.x[control] & r.z[target] & (r.x[target] ^ r.z[control] ^ 1);
        r.x[target] ^= r.x[control];
        r.z[control] ^= r.z[target];
    }
}

Tableau::Row Tableau::row_from(const PauliString &p) const {
    if (p.size() != n_) {
        throw std::invalid_argument("Pauli string size does not match tableau qubit count");
    }
    Row r;
    r.x.assign(n_, 0);
    r.z.assign(n_, 0);
    r.sign = p.negative ? 1 : 0;
    for (size_t q = 0; q < n_; q++) {
        Pauli op = p.ops[q];
        r.x[q] = (op == Pauli::X || op == Pauli::Y) ? 1 : 0;
        r.z[q] = (op == Pauli::Z || op == Pauli::Y) ? 1 : 0;
    }
    return r;
}

bool Tableau::anticommutes(const Row &a, const Row &b) {
    uint8_t acc = 0;
    for (size_t q = 0; q < a.x.size(); q++) {
        acc ^= (a.x[q] & b.z[q]) ^ (a.z[q] & b.x[q]);
    }
    return acc != 0;
}

void Tableau::multiply_into(const Row &source, Row &target) {
    // Exponent of i picked up when multiplying single-qubit Paulis (x1,z1)*(x2,z2).
    auto g = [](int x1, int z1, int x2, int z2) -> int {
        if (x1 == 0 && z1 == 0) {
            return 0;
        }
        if (x1 == 1 && z1 == 1) {
            return z2 - x2;
        }
        if (x1 == 1) {
            return z2 * (2 * x2 - 1);
        }
        return x2 * (1 - 2 * z2);
    };
    int phase = 2 * source.sign + 2 * target.sign;
    for (size_t q = 0; q < source.x.size(); q++) {
        phase += g(source.x[q], source.z[q], target.x[q], target.z[q]);
        target.x[q] ^= source.x[q];
        target.z[q] ^= source.z[q];
    }
    phase = ((phase % 4) + 4) % 4;
    // Products of anticommuting rows (destabilizer bookkeeping) give odd
    // phases; their sign is never read.
    target.sign = phase >= 2 ? 1 : 0;
}

std::vector<PauliString> Tableau::stabilizers() const {
    std::vector<PauliString> result;
    for (size_t k = 0; k < n_; k++) {
        const Row &r = rows_[n_ + k];
        PauliString p(r.sign != 0, std::vector<Pauli>(n_, Pauli::I));
        for (size_t q = 0; q < n_; q++) {
            if (r.x[q] && r.z[q]) {
                p.ops[q] = Pauli::Y;
            } else if (r.x[q]) {
                p.ops[q] = Pauli::X;
            } else if (r.z[q]) {
                p.ops[q] = Pauli::Z;
            }
        }
        result.push_back(std::move(p));
    }
    return result;
}

std::optional<uint8_t> Tableau::peek(const PauliString &observable) const {
    Row target = row_from(observable);
    for (size_t k = 0; k < n_; k++) {
        if (anticommutes(rows_[n_ + k], target)) {
            return std::nullopt;
        }
    }
    // observable = +-(product of stabilizers whose destabilizer anticommutes with it).
    Row scratch;
    scratch.x.assign(n_, 0);
    scratch.z.assign(n_, 0);
    for (size_t k = 0; k < n_; k++) {
        if (anticommutes(rows_[k], target)) {
            multiply_into(rows_[n_ + k], scratch);
        }
    }
    return static_cast<uint8_t>(scratch.sign ^ target.sign);
}

Tableau::Outcome Tableau::measure(const PauliString &observable, Rng *rng, std::optional<uint8_t> forced) {
    Row target = row_from(observable);
    size_t pivot = 2 * n_;
    for (size_t k = n_; k < 2 * n_; k++) {
        if (anticommutes(rows_[k], target)) {
            pivot = k;
            break;
        }
    }
    if (pivot == 2 * n_) {
        return Outcome{*peek(observable), true};
    }
    for (size_t k = 0; k < 2 * n_; k++) {
        if (k != pivot && anticommutes(rows_[k], target)) {
            multiply_into(rows_[pivot], rows_[k]);
        }
    }
    uint8_t bit;
    if (forced.has_value()) {
        bit = *forced & 1;
    } else if (rng != nullptr) {
        bit = rng->coin() ? 1 : 0;
    } else {
        throw std::invalid_argument("random measurement outcome needs an rng or a forced value");
    }
    rows_[pivot - n_] = rows_[pivot];
    rows_[pivot] = target;
    rows_[pivot].sign = target.sign ^ bit;
    return Outcome{bit, false};
}

StabilizerMeasurement stabilizer_measure(Tableau tableau, const PauliString &observable, Rng &rng) {
    auto outcome = tableau.measure(observable, &rng);
    return StabilizerMeasurement{outcome.bit, std::move(tableau), outcome.deterministic};
}

Tableau make_ghz_tableau_state() {
    Tableau t(3);
    t.h(0);
    t.cnot(0, 1);
    t.cnot(1, 2);
    t.x(2);
    t.z(0);
    return t;
}

}  // namespace mbcc::resources

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

#ifndef MBCC_GADGET_GHZ_GADGET_H
#define MBCC_GADGET_GHZ_GADGET_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mbcc/parity/parity_program.h"
#include "mbcc/resources/joint_distribution.h"
#include "mbcc/resources/resource.h"

namespace mbcc::gadget {

/// Record of one NAND evaluation on a correlated resource.
struct GadgetTranscript {
    uint8_t a;
    uint8_t b;
    /// a ^ b, the input sent to the third party of a GHZ triple. Absent for PR-box slots.
    std::optional<uint8_t> c;
    /// Observable letter per party ('X', 'Y', 'Z'), or '-' when the backend has none.
    std::vector<char> settings;
    std::vector<uint8_t> outcomes;
    uint8_t decoded;

    std::string settings_str() const;
    std::string outcomes_str() const;
    /// {"a":..,"b":..,"c":..,"settings":"XXY","outcomes":"011","decoded":..}
    std::string to_json() const;
};

/// c = a ^ b: width 3, inputs {0, 1}, output {2}.
const parity::ParityProgram &input_fold_program();
/// XOR of `n` outcome bits into an ancilla, followed by a NOT when `negate`.
parity::ParityProgram decode_program(size_t n, bool negate);
/// Single-wire NOT.
const parity::ParityProgram &not_program();

/// Deterministic NAND on one fresh GHZ triple.
///
/// Party 1 receives a, party 2 receives b and party 3 receives c = a ^ b; the
/// decoded bit is m1 ^ m2 ^ m3. Both c and the decoding are computed by
/// parity programs. Throws ResourceError if the resource is not a fresh
/// 3-party resource.
GadgetTranscript nand_via_ghz(resources::Resource &ghz, uint8_t a, uint8_t b);

/// NAND on a fresh 2-party box whose outcome parity is a & b: the decoded
/// bit is NOT(m1 ^ m2).
GadgetTranscript nand_via_pr_box(resources::Resource &box, uint8_t a, uint8_t b);

/// Dispatches on party count: 3 -> nand_via_ghz, 2 -> nand_via_pr_box.
GadgetTranscript nand_via_slot(resources::Resource &resource, uint8_t a, uint8_t b);

/// NOT(nand_via_ghz(...)), with the NOT run by the parity engine.
uint8_t and_via_ghz(resources::Resource &ghz, uint8_t a, uint8_t b);

/// The Pauli string measured by the three parties for inputs (a, b, a ^ b)
/// under the 0 -> X, 1 -> Y settings.
resources::PauliString gadget_observable(uint8_t a, uint8_t b);

/// Rayleigh quotients <psi|O|psi> of XXX, XYY, YXY, YYX.
///
/// Bit p of `y_flip_mask` makes party p use -Y in place of Y, modelling a
/// device with the opposite Y sign convention.
std::array<double, 4> verify_stabilizer_equations(const resources::StateVector &state, uint32_t y_flip_mask = 0);

/// Probability that the slot decoding yields NAND(a, b), from an exact
/// distribution of a 3-party (GHZ-style) or 2-party (box-style) resource.
double nand_success_probability(const resources::JointDistribution &dist, uint8_t a, uint8_t b);

/// Mean of nand_success_probability over the four input pairs.
double gadget_score(const resources::JointDistribution &dist);

/// Score of a fresh resource of the given backend: GHZ triples for the quantum
/// backends, the best 3-party LHV model for lhv, and a PR box for prbox.
double gadget_score(resources::BackendKind backend);

struct LhvGadgetOptimum {
    double score;
    resources::DeterministicStrategy witness;
    size_t strategies_enumerated;
};

/// Brute force over all 64 deterministic 3-party strategies with the GHZ decoding.
LhvGadgetOptimum best_lhv_gadget_strategy();

}  // namespace mbcc::gadget

#endif

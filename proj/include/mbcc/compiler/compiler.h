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

#ifndef MBCC_COMPILER_COMPILER_H
#define MBCC_COMPILER_COMPILER_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "mbcc/compiler/boolean_circuit.h"
#include "mbcc/parity/parity_program.h"

namespace mbcc::compiler {

/// The correlated resource that evaluates each NAND.
enum class SlotKind : uint8_t {
    /// Three parties get (a, b, a^b); NAND = m1^m2^m3.
    GhzTriple,
    /// Two parties get (a, b) from a box with m1^m2 = a&b; NAND = NOT(m1^m2).
    PrBox,
};

size_t slot_parties(SlotKind kind);

/// One NAND gate's exchange with its resource. Wires index the shared register.
struct GadgetSlot {
    std::string gate_id;
    /// Register wire sent to each party.
    std::vector<size_t> party_inputs;
    /// Register wire receiving each party's outcome.
    std::vector<size_t> outcome_wires;
    /// Wire the following parity segment decodes the NAND value into.
    size_t output_wire;
};

/// NAND gates at one NAND-depth. Slots are independent of each other.
struct GadgetLayer {
    size_t depth;
    std::vector<GadgetSlot> slots;
};

/// A parity program over the whole register (every wire is both input and output).
using Segment = std::variant<parity::ParityProgram, GadgetLayer>;

/// Lowered circuit as alternating parity segments and gadget layers.
///
/// Segment order is P0, L1, P1, ..., Ld, Pd for NAND-depth d. Segment P_k
/// decodes the layer-k NAND values, evaluates the XOR/NOT gates available at
/// that depth and folds c = a^b for the next layer's GHZ slots.
struct CompiledProgram {
    SlotKind slot_kind;
    size_t register_width;
    std::vector<std::string> wire_names;
    std::vector<size_t> input_wires;
    std::vector<std::string> output_names;
    std::vector<size_t> output_wires;
    std::vector<Segment> segments;
    /// Number of NAND slots, i.e. resources consumed.
    size_t budget;
    /// Number of gadget layers.
    size_t depth;

    /// Ordered segment listing with layer membership and wire bindings.
    std::string dump() const;
};

/// Requires a lowered circuit (see lower_to_nand_xor). NAND gates are placed
/// ASAP: a NAND's depth is one more than the deepest NAND feeding it.
CompiledProgram compile(const BooleanCircuit &lowered, SlotKind slot_kind = SlotKind::GhzTriple);

struct ResourceBudget {
    size_t ghz_count;
    size_t nand_depth;
    size_t parity_instruction_count;
    bool operator==(const ResourceBudget &other) const = default;
};

ResourceBudget resource_budget(const CompiledProgram &compiled);

}  // namespace mbcc::compiler

#endif

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

#ifndef MBCC_COMPILER_BOOLEAN_CIRCUIT_H
#define MBCC_COMPILER_BOOLEAN_CIRCUIT_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mbcc/bit_vector.h"

namespace mbcc::compiler {

enum class GateOp : uint8_t { Nand, And, Or, Not, Xor };

std::string_view gate_op_name(GateOp op);
GateOp parse_gate_op(std::string_view name);
size_t gate_arity(GateOp op);

struct Gate {
    std::string id;
    GateOp op;
    std::vector<std::string> args;
    bool operator==(const Gate &other) const = default;
};

/// A combinational circuit over named wires.
///
/// The constructor checks that names are unique, every operand and output
/// names an input or a gate, arities match, and the gate graph is acyclic.
/// Gates are stored in a topological order (the given order when it already
/// is one).
class BooleanCircuit {
   public:
    BooleanCircuit(std::vector<std::string> inputs, std::vector<std::string> outputs, std::vector<Gate> gates);

    const std::vector<std::string> &inputs() const {
        return inputs_;
    }
    const std::vector<std::string> &outputs() const {
        return outputs_;
    }
    const std::vector<Gate> &gates() const {
        return gates_;
    }

    size_t count(GateOp op) const;
    /// True when only NAND, XOR and NOT gates remain.
    bool is_lowered() const;

    /// Direct truth-table evaluation; the reference semantics for everything else.
    BitVector evaluate(const BitVector &input) const;

   private:
    std::vector<std::string> inputs_;
    std::vector<std::string> outputs_;
    std::vector<Gate> gates_;
};

/// Netlist JSON:
/// {"inputs":[...], "outputs":[...], "gates":[{"id":..., "op":"NAND|AND|OR|NOT|XOR", "args":[...]}]}
/// Throws ParseError for malformed JSON or an invalid circuit.
BooleanCircuit parse_netlist(std::string_view json_text);
std::string to_netlist_json(const BooleanCircuit &circuit);

/// Rewrites AND(a,b) = NOT(NAND(a,b)) and OR(a,b) = NAND(NOT a, NOT b); NAND,
/// XOR and NOT pass through. Gate ids of rewritten gates keep naming the
/// gate's output; helper gates get fresh ids derived from them.
BooleanCircuit lower_to_nand_xor(const BooleanCircuit &circuit);

/// 1-bit full adder: inputs a, b, cin; outputs sum, carry. Three NANDs for the carry.
BooleanCircuit full_adder_circuit();
/// 2-bit by 2-bit multiplier: inputs a1 a0 b1 b0 (most significant first); outputs p3 p2 p1 p0.
BooleanCircuit two_bit_multiplier_circuit();
/// Chain of n NAND gates, each fed by the previous output and a fresh input.
BooleanCircuit nand_chain_circuit(size_t n);

}  // namespace mbcc::compiler

#endif

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

#ifndef MBCC_PARITY_PARITY_PROGRAM_H
#define MBCC_PARITY_PARITY_PROGRAM_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mbcc/bit_vector.h"
#include "mbcc/parity/bit_matrix.h"

namespace mbcc::parity {

enum class InstructionKind : uint8_t { NOT, CNOT };

struct ParityInstruction {
    InstructionKind kind;
    size_t target;
    /// Only meaningful for CNOT.
    size_t control = 0;

    static ParityInstruction make_not(size_t target) {
        return {InstructionKind::NOT, target, 0};
    }
    static ParityInstruction make_cnot(size_t control, size_t target) {
        return {InstructionKind::CNOT, target, control};
    }
    bool operator==(const ParityInstruction &other) const = default;
};

/// A circuit of NOT and CNOT instructions acting on one flat register.
///
/// Execution starts from an all-zero register, loads the input bits into
/// `input_wires`, runs the instructions in order and reads `output_wires`.
/// Output wires may coincide with input wires. Programs are immutable once
/// constructed; the constructor rejects out-of-range indices, CNOTs whose
/// control equals their target, and repeated wires in either wire list.
class ParityProgram {
   public:
    ParityProgram(
        size_t width,
        std::vector<ParityInstruction> instructions,
        std::vector<size_t> input_wires,
        std::vector<size_t> output_wires);

    /// Width-n program with no instructions whose inputs and outputs are all wires.
    static ParityProgram identity(size_t n);

    size_t width() const {
        return width_;
    }
    const std::vector<ParityInstruction> &instructions() const {
        return instructions_;
    }
    const std::vector<size_t> &input_wires() const {
        return input_wires_;
    }
    const std::vector<size_t> &output_wires() const {
        return output_wires_;
    }

    /// Runs the instructions in place on a full register of `width()` bits.
    void apply_to_register(BitVector &reg) const;

    bool operator==(const ParityProgram &other) const = default;

   private:
    size_t width_;
    std::vector<ParityInstruction> instructions_;
    std::vector<size_t> input_wires_;
    std::vector<size_t> output_wires_;
};

BitVector run_parity(const ParityProgram &program, const BitVector &input);

/// y = matrix * x + offset over GF(2).
struct AffineMap {
    BitMatrix matrix;
    BitVector offset;

    BitVector apply(const BitVector &x) const;
    /// The map x -> outer(inner(x)), i.e. `this` applied after `inner`.
    AffineMap after(const AffineMap &inner) const;
    bool operator==(const AffineMap &other) const = default;
};

/// Action of the program on its whole register (width x width).
AffineMap register_map(const ParityProgram &program);

/// Input-to-output semantics: rows are output wires, columns are input wires.
/// Ancilla columns are dropped because ancillas always start at zero.
AffineMap to_affine(const ParityProgram &program);

/// Sequential composition: runs `first`, then feeds its outputs to `second`.
///
/// The two registers are laid side by side and joined by CNOT copies from
/// each output of `first` into the matching (zeroed) input of `second`.
ParityProgram compose(const ParityProgram &first, const ParityProgram &second);

/// A single-output affine boolean function f(x) = <coefficients, x> + offset.
struct AffineFunction {
    BitVector coefficients;
    uint8_t offset;
    /// f evaluated on x = 0 .. 2^n - 1, with x[0] as the most significant bit.
    std::vector<uint8_t> truth_table;
};

/// Every affine function of n_inputs bits (2^(n_inputs+1) of them). n_inputs <= 4.
std::vector<AffineFunction> enumerate_affine_functions(size_t n_inputs);

/// A program on n+1 wires computing `f` into the last wire.
ParityProgram realize(const AffineFunction &f);

/// Checks f(x^y^z) == f(x)^f(y)^f(z) and agreement with to_affine.
///
/// Exhaustive for at most 4 input wires, otherwise `random_trials` seeded
/// random triples.
bool verify_affine(const ParityProgram &program, uint64_t seed = 0, size_t random_trials = 1000);

/// Text format:
///
///     width W inputs i0,i1,... outputs o0,o1,...
///     NOT t
///     CNOT c t
///
/// An empty wire list is written as '-'. Every line ends with '\n'.
std::string to_text(const ParityProgram &program);
ParityProgram parse_parity_program(std::string_view text);

}  // namespace mbcc::parity

#endif

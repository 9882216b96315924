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

#include "mbcc/parity/parity_program.h"

#include <charconv>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "mbcc/errors.h"

namespace mbcc::parity {

namespace {

void check_wire_list(const std::vector<size_t> &wires, size_t width, const char *what) {
    std::unordered_set<size_t> seen;
    for (size_t w : wires) {
        if (w >= width) {
            throw std::out_of_range(std::string(what) + " wire " + std::to_string(w) + " out of range");
        }
        if (!seen.insert(w).second) {
            throw std::invalid_argument(std::string(what) + " wire " + std::to_string(w) + " repeated");
        }
    }
}

}  // namespace

ParityProgram::ParityProgram(
    size_t width,
    std::vector<ParityInstruction> instructions,
    std::vector<size_t> input_wires,
    std::vector<size_t> output_wires)
    : width_(width),
      instructions_(std::move(instructions)),
      input_wires_(std::move(input_wires)),
      output_wires_(std::move(output_wires)) {
    for (const auto &ins : instructions_) {
        if (ins.target >= width_) {
            throw std::out_of_range("instruction target out of range");
        }
        if (ins.kind == InstructionKind::CNOT) {
            if (ins.control >= width_) {
                throw std::out_of_range("instruction control out of range");
            }
            if (ins.control == ins.target) {
                throw std::invalid_argument("CNOT control equals target");
            }
        }
    }
    check_wire_list(input_wires_, width_, "input");
    check_wire_list(output_wires_, width_, "output");
}

ParityProgram ParityProgram::identity(size_t n) {
    std::vector<size_t> wires(n);
    for (size_t k = 0; k < n; k++) {
        wires[k] = k;
    }
    return ParityProgram(n, {}, wires, wires);
}

void ParityProgram::apply_to_register(BitVector &reg) const {
    if (reg.width() != width_) {
        throw std::invalid_argument("register width mismatch");
    }
    for (const auto &ins : instructions_) {
        if (ins.kind == InstructionKind::NOT) {
            reg.flip(ins.target);
        } else if (reg[ins.control]) {
            reg.flip(ins.target);
        }
    }
}

BitVector run_parity(const ParityProgram &program, const BitVector &input) {
    const auto &in = program.input_wires();
    if (input.width() != in.size()) {
        throw std::invalid_argument(
            "input width " + std::to_string(input.width()) + " does not match " + std::to_string(in.size()) +
            " input wires");
    }
    BitVector reg(program.width());
    for (size_t k = 0; k < in.size(); k++) {
        reg.set(in[k], input[k]);
    }
    program.apply_to_register(reg);
    const auto &out = program.output_wires();
    BitVector result(out.size());
    for (size_t k = 0; k < out.size(); k++) {
        result.set(k, reg[out[k]]);
    }
    return result;
}

BitVector AffineMap::apply(const BitVector &x) const {
    return matrix.apply(x) ^ offset;
}

AffineMap AffineMap::after(const AffineMap &inner) const {
    return AffineMap{matrix * inner.matrix, matrix.apply(inner.offset) ^ offset};
}

AffineMap register_map(const ParityProgram &program) {
    // Row w holds wire w's current value as an affine function of the initial register.
    AffineMap m{BitMatrix::identity(program.width()), BitVector(program.width())};
    for (const auto &ins : program.instructions()) {
        if (ins.kind == InstructionKind::NOT) {
            m.offset.flip(ins.target);
        } else {
            m.matrix.xor_row_into(ins.control, ins.target);
            if (m.offset[ins.control]) {
                m.offset.flip(ins.target);
            }
        }
    }
    return m;
}

AffineMap to_affine(const ParityProgram &program) {
    AffineMap full = register_map(program);
    const auto &in = program.input_wires();
    const auto &out = program.output_wires();
    AffineMap result{BitMatrix(out.size(), in.size()), BitVector(out.size())};
    for (size_t r = 0; r < out.size(); r++) {
        for (size_t c = 0; c < in.size(); c++) {
            result.matrix.set(r, c, full.matrix.get(out[r], in[c]));
        }
        result.offset.set(r, full.offset[out[r]]);
    }
    return result;
}

ParityProgram compose(const ParityProgram &first, const ParityProgram &second) {
    if (first.output_wires().size() != second.input_wires().size()) {
        throw std::invalid_argument(
            "cannot compose: " + std::to_string(first.output_wires().size()) + " outputs feed " +
            std::to_string(second.input_wires().size()) + " inputs");
    }
    size_t shift = first.width();
    std::vector<ParityInstruction> instructions = first.instructions();
    for (size_t k = 0; k < first.output_wires().size(); k++) {
        instructions.push_back(ParityInstruction::make_cnot(first.output_wires()[k], second.input_wires()[k] + shift));
    }
    for (auto ins : second.instructions()) {
        ins.target += shift;
        if (ins.kind == InstructionKind::CNOT) {
            ins.control += shift;
        }
        instructions.push_back(ins);
    }
    std::vector<size_t> outputs;
    outputs.reserve(second.output_wires().size());
    for (size_t w : second.output_wires()) {
        outputs.push_back(w + shift);
    }
    return ParityProgram(shift + second.width(), std::move(instructions), first.input_wires(), std::move(outputs));
}

std::vector<AffineFunction> enumerate_affine_functions(size_t n_inputs) {
    if (n_inputs > 4) {
        throw std::invalid_argument("enumerate_affine_functions is limited to at most 4 inputs");
    }
    size_t rows = size_t{1} << n_inputs;
    std::vector<AffineFunction> result;
    for (uint64_t mask = 0; mask < rows; mask++) {
        for (uint8_t offset = 0; offset < 2; offset++) {
            AffineFunction f{BitVector::from_index(mask, n_inputs), offset, {}};
            f.truth_table.reserve(rows);
            for (uint64_t x = 0; x < rows; x++) {
                BitVector xs = BitVector::from_index(x, n_inputs);
                uint8_t v = offset;
                for (size_t k = 0; k < n_inputs; k++) {
                    v ^= xs[k] & f.coefficients[k];
                }
                f.truth_table.push_back(v);
            }
            result.push_back(std::move(f));
        }
    }
    return result;
}

ParityProgram realize(const AffineFunction &f) {
    size_t n = f.coefficients.width();
    std::vector<ParityInstruction> instructions;
    for (size_t k = 0; k < n; k++) {
        if (f.coefficients[k]) {
            instructions.push_back(ParityInstruction::make_cnot(k, n));
        }
    }
    if (f.offset) {
        instructions.push_back(ParityInstruction::make_not(n));
    }
    std::vector<size_t> inputs(n);
    for (size_t k = 0; k < n; k++) {
        inputs[k] = k;
    }
    return ParityProgram(n + 1, std::move(instructions), std::move(inputs), {n});
}

bool verify_affine(const ParityProgram &program, uint64_t seed, size_t random_trials) {
    size_t n = program.input_wires().size();
    AffineMap semantics = to_affine(program);
    auto check = [&](const BitVector &x, const BitVector &y, const BitVector &z) {
        BitVector fx = run_parity(program, x);
        if (fx != semantics.apply(x)) {
            return false;
        }
        return run_parity(program, x ^ y ^ z) == (fx ^ run_parity(program, y) ^ run_parity(program, z));
    };
    if (n <= 4) {
        uint64_t count = uint64_t{1} << n;
        for (uint64_t x = 0; x < count; x++) {
            for (uint64_t y = 0; y < count; y++) {
                for (uint64_t z = 0; z < count; z++) {
                    if (!check(BitVector::from_index(x, n), BitVector::from_index(y, n), BitVector::from_index(z, n))) {
                        return false;
                    }
                }
            }
        }
        return true;
    }
    std::mt19937_64 rng(seed);
    auto random_bits = [&]() {
        BitVector v(n);
        for (size_t k = 0; k < n; k++) {
            v.set(k, static_cast<uint8_t>(rng() & 1));
        }
        return v;
    };
    for (size_t t = 0; t < random_trials; t++) {
        BitVector x = random_bits();
        BitVector y = random_bits();
        BitVector z = random_bits();
        if (!check(x, y, z)) {
            return false;
        }
    }
    return true;
}

namespace {

std::string join_wires(const std::vector<size_t> &wires) {
    if (wires.empty()) {
        return "-";
    }
    std::string s;
    for (size_t k = 0; k < wires.size(); k++) {
        if (k) {
            s.push_back(',');
        }
        s += std::to_string(wires[k]);
    }
    return s;
}

size_t parse_index(std::string_view token, size_t line_no) {
    size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError("line " + std::to_string(line_no) + ": bad index '" + std::string(token) + "'");
    }
    return value;
}

std::vector<size_t> parse_wires(std::string_view token, size_t line_no) {
    std::vector<size_t> wires;
    if (token == "-") {
        return wires;
    }
    size_t start = 0;
    while (true) {
        size_t comma = token.find(',', start);
        wires.push_back(parse_index(token.substr(start, comma - start), line_no));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return wires;
}

}  // namespace

std::string to_text(const ParityProgram &program) {
    std::string s = "width " + std::to_string(program.width()) + " inputs " + join_wires(program.input_wires()) +
                    " outputs " + join_wires(program.output_wires()) + "\n";
    for (const auto &ins : program.instructions()) {
        if (ins.kind == InstructionKind::NOT) {
            s += "NOT " + std::to_string(ins.target) + "\n";
        } else {
            s += "CNOT " + std::to_string(ins.control) + " " + std::to_string(ins.target) + "\n";
        }
    }
    return s;
}

ParityProgram parse_parity_program(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    size_t line_no = 0;
    bool have_header = false;
    size_t width = 0;
    std::vector<size_t> inputs;
    std::vector<size_t> outputs;
    std::vector<ParityInstruction> instructions;
    while (std::getline(in, line)) {
        line_no++;
        std::istringstream words(line);
        std::vector<std::string> tok;
        for (std::string w; words >> w;) {
            tok.push_back(w);
        }
        if (tok.empty()) {
            continue;
        }
        if (!have_header) {
            if (tok.size() != 6 || tok[0] != "width" || tok[2] != "inputs" || tok[4] != "outputs") {
                throw ParseError("line 1: expected 'width W inputs ... outputs ...'");
            }
            width = parse_index(tok[1], line_no);
            inputs = parse_wires(tok[3], line_no);
            outputs = parse_wires(tok[5], line_no);
            have_header = true;
        } else if (tok[0] == "NOT" && tok.size() == 2) {
            instructions.push_back(ParityInstruction::make_not(parse_index(tok[1], line_no)));
        } else if (tok[0] == "CNOT" && tok.size() == 3) {
            instructions.push_back(
                ParityInstruction::make_cnot(parse_index(tok[1], line_no), parse_index(tok[2], line_no)));
        } else {
            throw ParseError("line " + std::to_string(line_no) + ": unrecognized instruction '" + line + "'");
        }
    }
    if (!have_header) {
        throw ParseError("empty parity program");
    }
    try {
        return ParityProgram(width, std::move(instructions), std::move(inputs), std::move(outputs));
    } catch (const std::logic_error &e) {
        throw ParseError(std::string("invalid program: ") + e.what());
    }
}

}  // namespace mbcc::parity

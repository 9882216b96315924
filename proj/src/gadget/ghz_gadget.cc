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

#include "mbcc/gadget/ghz_gadget.h"

#include <stdexcept>

#include <fmt/format.h>

#include "mbcc/errors.h"

namespace mbcc::gadget {

using parity::ParityInstruction;
using parity::ParityProgram;
using parity::run_parity;
using resources::Pauli;
using resources::PauliString;
using resources::Resource;

namespace {

void check_bits(uint8_t a, uint8_t b) {
    if (a > 1 || b > 1) {
        throw std::invalid_argument("gadget inputs must be bits");
    }
}

void check_slot(const Resource &r, size_t parties, const char *what) {
    if (r.num_parties() != parties) {
        throw ResourceError(fmt::format("{} needs a {}-party resource, got {}", what, parties, r.num_parties()));
    }
    if (!r.is_fresh()) {
        throw ResourceError(std::string(what) + " needs a fresh resource");
    }
}

char setting_char(const Resource &r, size_t party, uint8_t input) {
    auto obs = r.observable(party, input);
    return obs ? resources::pauli_char(*obs) : '-';
}

uint8_t nand(uint8_t a, uint8_t b) {
    return static_cast<uint8_t>(!(a && b));
}

}  // namespace

std::string GadgetTranscript::settings_str() const {
    return std::string(settings.begin(), settings.end());
}

std::string GadgetTranscript::outcomes_str() const {
    std::string s;
    for (uint8_t m : outcomes) {
        s.push_back(m ? '1' : '0');
    }
    return s;
}

std::string GadgetTranscript::to_json() const {
    std::string c_field = c ? fmt::format("{}", *c) : "null";
    return fmt::format(
        R"({{"a":{},"b":{},"c":{},"settings":"{}","outcomes":"{}","decoded":{}}})",
        a,
        b,
        c_field,
        settings_str(),
        outcomes_str(),
        decoded);
}

const ParityProgram &input_fold_program() {
    static const ParityProgram program(
        3, {ParityInstruction::make_cnot(0, 2), ParityInstruction::make_cnot(1, 2)}, {0, 1}, {2});
    return program;
}

ParityProgram decode_program(size_t n, bool negate) {
    std::vector<ParityInstruction> instructions;
    std::vector<size_t> inputs;
    for (size_t k = 0; k < n; k++) {
        instructions.push_back(ParityInstruction::make_cnot(k, n));
        inputs.push_back(k);
    }
    if (negate) {
        instructions.push_back(ParityInstruction::make_not(n));
    }
    return ParityProgram(n + 1, std::move(instructions), std::move(inputs), {n});
}

const ParityProgram &not_program() {
    static const ParityProgram program(1, {ParityInstruction::make_not(0)}, {0}, {0});
    return program;
}

GadgetTranscript nand_via_ghz(Resource &ghz, uint8_t a, uint8_t b) {
    check_bits(a, b);
    check_slot(ghz, 3, "nand_via_ghz");
    static const ParityProgram decode = decode_program(3, false);
    uint8_t c = run_parity(input_fold_program(), BitVector{a, b})[0];
    std::array<uint8_t, 3> inputs{a, b, c};
    GadgetTranscript t{a, b, c, {}, {}, 0};
    BitVector outcomes(3);
    for (size_t party = 0; party < 3; party++) {
        t.settings.push_back(setting_char(ghz, party, inputs[party]));
        outcomes.set(party, ghz.query(party, inputs[party]));
    }
    t.outcomes = outcomes.bits();
    t.decoded = run_parity(decode, outcomes)[0];
    return t;
}

GadgetTranscript nand_via_pr_box(Resource &box, uint8_t a, uint8_t b) {
    check_bits(a, b);
    check_slot(box, 2, "nand_via_pr_box");
    static const ParityProgram decode = decode_program(2, true);
    GadgetTranscript t{a, b, std::nullopt, {}, {}, 0};
    std::array<uint8_t, 2> inputs{a, b};
    BitVector outcomes(2);
    for (size_t party = 0; party < 2; party++) {
        t.settings.push_back(setting_char(box, party, inputs[party]));
        outcomes.set(party, box.query(party, inputs[party]));
    }
    t.outcomes = outcomes.bits();
    t.decoded = run_parity(decode, outcomes)[0];
    return t;
}

GadgetTranscript nand_via_slot(Resource &resource, uint8_t a, uint8_t b) {
    switch (resource.num_parties()) {
        case 3:
            return nand_via_ghz(resource, a, b);
        case 2:
            return nand_via_pr_box(resource, a, b);
        default:
            throw ResourceError(
                fmt::format("a NAND slot needs a 2- or 3-party resource, got {}", resource.num_parties()));
    }
}

uint8_t and_via_ghz(Resource &ghz, uint8_t a, uint8_t b) {
    GadgetTranscript t = nand_via_ghz(ghz, a, b);
    return run_parity(not_program(), BitVector{t.decoded})[0];
}

PauliString gadget_observable(uint8_t a, uint8_t b) {
    check_bits(a, b);
    auto letter = [](uint8_t bit) { return bit ? Pauli::Y : Pauli::X; };
    return PauliString(false, {letter(a), letter(b), letter(a ^ b)});
}

std::array<double, 4> verify_stabilizer_equations(const resources::StateVector &state, uint32_t y_flip_mask) {
    if (state.num_qubits() != 3) {
        throw std::invalid_argument("stabilizer equations act on 3 qubits");
    }
    std::array<double, 4> result{};
    for (uint8_t k = 0; k < 4; k++) {
        PauliString op = gadget_observable(k >> 1, k & 1);
        for (size_t party = 0; party < 3; party++) {
            if (((y_flip_mask >> party) & 1) && op.ops[party] == Pauli::Y) {
                op.negative = !op.negative;
            }
        }
        result[k] = state.expectation(op);
    }
    return result;
}

double nand_success_probability(const resources::JointDistribution &dist, uint8_t a, uint8_t b) {
    check_bits(a, b);
    size_t n = dist.num_parties();
    uint64_t inputs;
    uint8_t negate;
    if (n == 3) {
        inputs = (uint64_t{a} << 2) | (uint64_t{b} << 1) | uint64_t(a ^ b);
        negate = 0;
    } else if (n == 2) {
        inputs = (uint64_t{a} << 1) | b;
        negate = 1;
    } else {
        throw std::invalid_argument("NAND slots have 2 or 3 parties");
    }
    double p = 0;
    for (uint64_t m = 0; m < dist.num_tuples(); m++) {
        uint8_t decoded = static_cast<uint8_t>((BitVector::from_index(m, n).parity()) ^ negate);
        if (decoded == nand(a, b)) {
            p += dist.at(inputs, m);
        }
    }
    return p;
}

double gadget_score(const resources::JointDistribution &dist) {
    double total = 0;
    for (uint8_t a = 0; a < 2; a++) {
        for (uint8_t b = 0; b < 2; b++) {
            total += nand_success_probability(dist, a, b);
        }
    }
    return total / 4;
}

double gadget_score(resources::BackendKind backend) {
    switch (backend) {
        case resources::BackendKind::StateVector:
            return gadget_score(resources::make_ghz(0).joint_distribution());
        case resources::BackendKind::Stabilizer:
            return gadget_score(resources::make_ghz_tableau(0).joint_distribution());
        case resources::BackendKind::Lhv:
            return best_lhv_gadget_strategy().score;
        case resources::BackendKind::PrBox:
            return gadget_score(resources::make_pr_box(0).joint_distribution());
    }
    throw std::invalid_argument("unknown backend");
}

LhvGadgetOptimum best_lhv_gadget_strategy() {
    auto strategies = resources::all_deterministic_strategies(3);
    LhvGadgetOptimum best{-1.0, {}, strategies.size()};
    for (const auto &s : strategies) {
        auto lhv = resources::make_lhv({{1.0, s}}, 0);
        double score = gadget_score(lhv.joint_distribution());
        if (score > best.score) {
            best.score = score;
            best.witness = s;
        }
    }
    return best;
}

}  // namespace mbcc::gadget

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

#include "mbcc/compiler/executor.h"

#include <algorithm>
#include <future>
#include <numeric>
#include <random>
#include <stdexcept>

#include <fmt/format.h>

#include "mbcc/errors.h"

namespace mbcc::compiler {

using parity::ParityProgram;
using resources::Resource;

namespace {

struct SlotResult {
    std::vector<uint8_t> outcomes;
    std::vector<char> settings;
};

/// The raw exchange: one input bit to each party, one outcome bit back.
SlotResult exchange(Resource &resource, const GadgetSlot &slot, const BitVector &reg) {
    SlotResult r;
    for (size_t p = 0; p < slot.party_inputs.size(); p++) {
        uint8_t in = reg[slot.party_inputs[p]];
        auto obs = resource.observable(p, in);
        r.settings.push_back(obs ? resources::pauli_char(*obs) : '-');
        r.outcomes.push_back(resource.query(p, in));
    }
    return r;
}

}  // namespace

std::string ExecutionReport::to_json() const {
    std::string s = fmt::format(R"({{"input":"{}","output":"{}","budget":{{"ghz_count":{},"nand_depth":{},)"
                                R"("parity_instruction_count":{}}},"transcripts":[)",
                                input.str(),
                                output.str(),
                                budget.ghz_count,
                                budget.nand_depth,
                                budget.parity_instruction_count);
    for (size_t k = 0; k < transcripts.size(); k++) {
        s += (k ? "," : "") + transcripts[k].to_json();
    }
    return s + "]}";
}

ExecutionReport execute(
    const CompiledProgram &compiled,
    std::span<const std::unique_ptr<Resource>> supply,
    const BitVector &input,
    const ExecuteOptions &options) {
    if (input.width() != compiled.input_wires.size()) {
        throw std::invalid_argument(fmt::format(
            "program has {} inputs, got {} bits", compiled.input_wires.size(), input.width()));
    }
    if (supply.size() < compiled.budget) {
        throw ResourceError(
            fmt::format("program needs {} resources, supply has {}", compiled.budget, supply.size()));
    }
    size_t parties = slot_parties(compiled.slot_kind);
    for (size_t k = 0; k < compiled.budget; k++) {
        if (!supply[k]) {
            throw ResourceError(fmt::format("supply entry {} is empty", k));
        }
        if (!supply[k]->is_fresh()) {
            throw ResourceError(fmt::format("supply entry {} is stale (already queried)", k));
        }
        if (supply[k]->num_parties() != parties) {
            throw ResourceError(fmt::format(
                "supply entry {} has {} parties, slots need {}", k, supply[k]->num_parties(), parties));
        }
    }

    ExecutionReport report{input, BitVector(), {}, resource_budget(compiled)};
    BitVector reg(compiled.register_width);
    for (size_t k = 0; k < input.width(); k++) {
        reg.set(compiled.input_wires[k], input[k]);
    }
    std::mt19937_64 shuffler(options.shuffle_seed.value_or(0));
    // Transcripts waiting for the next parity segment to decode their value.
    std::vector<std::pair<size_t, size_t>> pending;  // (transcript index, output wire)
    size_t next_resource = 0;

    for (const auto &segment : compiled.segments) {
        if (const auto *program = std::get_if<ParityProgram>(&segment)) {
            program->apply_to_register(reg);
            for (auto [t, wire] : pending) {
                report.transcripts[t].decoded = reg[wire];
            }
            pending.clear();
            continue;
        }
        const auto &layer = std::get<GadgetLayer>(segment);
        size_t first = next_resource;
        next_resource += layer.slots.size();
        std::vector<size_t> order(layer.slots.size());
        std::iota(order.begin(), order.end(), 0);
        if (options.shuffle_seed) {
            std::shuffle(order.begin(), order.end(), shuffler);
        }
        std::vector<SlotResult> results(layer.slots.size());
        if (options.parallel) {
            std::vector<std::future<SlotResult>> futures;
            for (size_t k : order) {
                futures.push_back(std::async(std::launch::async, [&, k]() {
                    return exchange(*supply[first + k], layer.slots[k], reg);
                }));
            }
            for (size_t j = 0; j < order.size(); j++) {
                results[order[j]] = futures[j].get();
            }
        } else {
            for (size_t k : order) {
                results[k] = exchange(*supply[first + k], layer.slots[k], reg);
            }
        }
        for (size_t k = 0; k < layer.slots.size(); k++) {
            const auto &slot = layer.slots[k];
            gadget::GadgetTranscript t;
            t.a = reg[slot.party_inputs[0]];
            t.b = reg[slot.party_inputs[1]];
            if (slot.party_inputs.size() == 3) {
                t.c = reg[slot.party_inputs[2]];
            }
            t.settings = results[k].settings;
            t.outcomes = results[k].outcomes;
            t.decoded = 0;
            for (size_t p = 0; p < slot.outcome_wires.size(); p++) {
                reg.set(slot.outcome_wires[p], results[k].outcomes[p]);
            }
            pending.emplace_back(report.transcripts.size(), slot.output_wire);
            report.transcripts.push_back(std::move(t));
        }
    }

    report.output = BitVector(compiled.output_wires.size());
    for (size_t k = 0; k < compiled.output_wires.size(); k++) {
        report.output.set(k, reg[compiled.output_wires[k]]);
    }
    return report;
}

SlotKind slot_kind_for(resources::BackendKind backend) {
    return backend == resources::BackendKind::PrBox ? SlotKind::PrBox : SlotKind::GhzTriple;
}

std::vector<std::unique_ptr<Resource>> make_supply(resources::BackendKind backend, size_t count, uint64_t seed) {
    std::vector<std::unique_ptr<Resource>> supply;
    supply.reserve(count);
    std::optional<resources::DeterministicStrategy> lhv_witness;
    if (backend == resources::BackendKind::Lhv) {
        lhv_witness = gadget::best_lhv_gadget_strategy().witness;
    }
    for (size_t k = 0; k < count; k++) {
        uint64_t s = derive_seed(seed, k);
        switch (backend) {
            case resources::BackendKind::StateVector:
                supply.push_back(std::make_unique<resources::StateVectorResource>(resources::make_ghz(s)));
                break;
            case resources::BackendKind::Stabilizer:
                supply.push_back(std::make_unique<resources::StabilizerResource>(resources::make_ghz_tableau(s)));
                break;
            case resources::BackendKind::PrBox:
                supply.push_back(std::make_unique<resources::PrBoxResource>(resources::make_pr_box(s)));
                break;
            case resources::BackendKind::Lhv:
                supply.push_back(std::make_unique<resources::LhvResource>(resources::make_lhv({{1.0, *lhv_witness}}, s)));
                break;
        }
    }
    return supply;
}

std::map<BitVector, double> exact_output_distribution(
    const CompiledProgram &compiled, const resources::JointDistribution &slot_distribution, const BitVector &input) {
    if (input.width() != compiled.input_wires.size()) {
        throw std::invalid_argument("input width does not match the program");
    }
    size_t parties = slot_parties(compiled.slot_kind);
    if (slot_distribution.num_parties() != parties) {
        throw std::invalid_argument("slot distribution has the wrong party count");
    }
    BitVector start(compiled.register_width);
    for (size_t k = 0; k < input.width(); k++) {
        start.set(compiled.input_wires[k], input[k]);
    }
    std::map<BitVector, double> states{{start, 1.0}};
    for (const auto &segment : compiled.segments) {
        if (const auto *program = std::get_if<ParityProgram>(&segment)) {
            std::map<BitVector, double> next;
            for (const auto &[reg, p] : states) {
                BitVector r = reg;
                program->apply_to_register(r);
                next[r] += p;
            }
            states = std::move(next);
            continue;
        }
        for (const auto &slot : std::get<GadgetLayer>(segment).slots) {
            std::map<BitVector, double> next;
            for (const auto &[reg, p] : states) {
                uint64_t x = 0;
                for (size_t w : slot.party_inputs) {
                    x = (x << 1) | reg[w];
                }
                auto row = slot_distribution.row(x);
                for (uint64_t m = 0; m < row.size(); m++) {
                    if (row[m] == 0) {
                        continue;
                    }
                    BitVector branch = reg;
                    for (size_t q = 0; q < parties; q++) {
                        branch.set(slot.outcome_wires[q], (m >> (parties - 1 - q)) & 1);
                    }
                    next[branch] += p * row[m];
                }
            }
            states = std::move(next);
        }
    }
    std::map<BitVector, double> outputs;
    for (const auto &[reg, p] : states) {
        BitVector out(compiled.output_wires.size());
        for (size_t k = 0; k < out.width(); k++) {
            out.set(k, reg[compiled.output_wires[k]]);
        }
        outputs[out] += p;
    }
    return outputs;
}

}  // namespace mbcc::compiler

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

#include "mbcc/compiler/compiler.h"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include <fmt/format.h>

namespace mbcc::compiler {

using parity::ParityInstruction;
using parity::ParityProgram;

size_t slot_parties(SlotKind kind) {
    return kind == SlotKind::GhzTriple ? 3 : 2;
}

CompiledProgram compile(const BooleanCircuit &lowered, SlotKind slot_kind) {
    if (!lowered.is_lowered()) {
        throw std::invalid_argument("compile expects a circuit lowered to NAND, XOR and NOT");
    }
    CompiledProgram out;
    out.slot_kind = slot_kind;
    out.output_names = lowered.outputs();

    std::unordered_map<std::string, size_t> wire_of;
    auto new_wire = [&](const std::string &name) {
        out.wire_names.push_back(name);
        return out.wire_names.size() - 1;
    };
    for (const auto &in : lowered.inputs()) {
        wire_of[in] = new_wire(in);
        out.input_wires.push_back(wire_of[in]);
    }
    for (const auto &g : lowered.gates()) {
        wire_of[g.id] = new_wire(g.id);
    }

    // NAND-depth of every wire.
    std::unordered_map<std::string, size_t> level;
    for (const auto &in : lowered.inputs()) {
        level[in] = 0;
    }
    size_t depth = 0;
    for (const auto &g : lowered.gates()) {
        size_t deepest = 0;
        for (const auto &a : g.args) {
            deepest = std::max(deepest, level.at(a));
        }
        level[g.id] = g.op == GateOp::Nand ? deepest + 1 : deepest;
        depth = std::max(depth, level[g.id]);
    }

    // Slots, in gate order within each layer.
    std::vector<GadgetLayer> layers(depth);
    for (size_t d = 0; d < depth; d++) {
        layers[d].depth = d + 1;
    }
    for (const auto &g : lowered.gates()) {
        if (g.op != GateOp::Nand) {
            continue;
        }
        GadgetSlot slot;
        slot.gate_id = g.id;
        slot.output_wire = wire_of.at(g.id);
        slot.party_inputs = {wire_of.at(g.args[0]), wire_of.at(g.args[1])};
        if (slot_kind == SlotKind::GhzTriple) {
            slot.party_inputs.push_back(new_wire(g.id + ".c"));
        }
        for (size_t p = 0; p < slot_parties(slot_kind); p++) {
            slot.outcome_wires.push_back(new_wire(fmt::format("{}.m{}", g.id, p + 1)));
        }
        layers[level.at(g.id) - 1].slots.push_back(std::move(slot));
    }
    out.register_width = out.wire_names.size();

    std::vector<size_t> all_wires(out.register_width);
    for (size_t k = 0; k < all_wires.size(); k++) {
        all_wires[k] = k;
    }
    for (size_t d = 0; d <= depth; d++) {
        std::vector<ParityInstruction> ins;
        if (d > 0) {
            for (const auto &slot : layers[d - 1].slots) {
                for (size_t m : slot.outcome_wires) {
                    ins.push_back(ParityInstruction::make_cnot(m, slot.output_wire));
                }
                if (slot_kind == SlotKind::PrBox) {
                    ins.push_back(ParityInstruction::make_not(slot.output_wire));
                }
            }
        }
        for (const auto &g : lowered.gates()) {
            if (g.op == GateOp::Nand || level.at(g.id) != d) {
                continue;
            }
            size_t t = wire_of.at(g.id);
            for (const auto &a : g.args) {
                ins.push_back(ParityInstruction::make_cnot(wire_of.at(a), t));
            }
            if (g.op == GateOp::Not) {
                ins.push_back(ParityInstruction::make_not(t));
            }
        }
        if (d < depth && slot_kind == SlotKind::GhzTriple) {
            for (const auto &slot : layers[d].slots) {
                ins.push_back(ParityInstruction::make_cnot(slot.party_inputs[0], slot.party_inputs[2]));
                ins.push_back(ParityInstruction::make_cnot(slot.party_inputs[1], slot.party_inputs[2]));
            }
        }
        out.segments.emplace_back(ParityProgram(out.register_width, std::move(ins), all_wires, all_wires));
        if (d < depth) {
            out.segments.emplace_back(layers[d]);
        }
    }

    for (const auto &o : lowered.outputs()) {
        out.output_wires.push_back(wire_of.at(o));
    }
    out.budget = lowered.count(GateOp::Nand);
    out.depth = depth;
    return out;
}

ResourceBudget resource_budget(const CompiledProgram &compiled) {
    size_t instructions = 0;
    for (const auto &seg : compiled.segments) {
        if (const auto *p = std::get_if<ParityProgram>(&seg)) {
            instructions += p->instructions().size();
        }
    }
    return ResourceBudget{compiled.budget, compiled.depth, instructions};
}

namespace {

std::string wire_list(const std::vector<size_t> &wires) {
    std::string s;
    for (size_t k = 0; k < wires.size(); k++) {
        s += (k ? "," : "") + std::to_string(wires[k]);
    }
    return s.empty() ? "-" : s;
}

}  // namespace

std::string CompiledProgram::dump() const {
    auto budget_info = resource_budget(*this);
    std::string s = fmt::format(
        "compiled slot={} width={} budget={} depth={} parity_instructions={}\n",
        slot_kind == SlotKind::GhzTriple ? "ghz" : "prbox",
        register_width,
        budget,
        depth,
        budget_info.parity_instruction_count);
    s += "inputs";
    for (size_t w : input_wires) {
        s += fmt::format(" {}:{}", wire_names[w], w);
    }
    s += "\noutputs";
    for (size_t k = 0; k < output_wires.size(); k++) {
        s += fmt::format(" {}:{}", output_names[k], output_wires[k]);
    }
    s += "\n";
    for (size_t k = 0; k < segments.size(); k++) {
        if (const auto *p = std::get_if<ParityProgram>(&segments[k])) {
            s += fmt::format("segment {} parity instructions={}\n", k, p->instructions().size());
            for (const auto &ins : p->instructions()) {
                if (ins.kind == parity::InstructionKind::NOT) {
                    s += fmt::format("  NOT {}\n", ins.target);
                } else {
                    s += fmt::format("  CNOT {} {}\n", ins.control, ins.target);
                }
            }
        } else {
            const auto &layer = std::get<GadgetLayer>(segments[k]);
            s += fmt::format("segment {} layer {} slots={}\n", k, layer.depth, layer.slots.size());
            for (const auto &slot : layer.slots) {
                s += fmt::format(
                    "  slot {} parties {} outcomes {} -> {}\n",
                    slot.gate_id,
                    wire_list(slot.party_inputs),
                    wire_list(slot.outcome_wires),
                    slot.output_wire);
            }
        }
    }
    return s;
}

}  // namespace mbcc::compiler

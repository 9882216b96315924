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

#include "mbcc/compiler/boolean_circuit.h"

#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "mbcc/errors.h"

namespace mbcc::compiler {

using nlohmann::json;

std::string_view gate_op_name(GateOp op) {
    switch (op) {
        case GateOp::Nand:
            return "NAND";
        case GateOp::And:
            return "AND";
        case GateOp::Or:
            return "OR";
        case GateOp::Not:
            return "NOT";
        case GateOp::Xor:
            return "XOR";
    }
    return "?";
}

GateOp parse_gate_op(std::string_view name) {
    for (auto op : {GateOp::Nand, GateOp::And, GateOp::Or, GateOp::Not, GateOp::Xor}) {
        if (gate_op_name(op) == name) {
            return op;
        }
    }
    throw std::invalid_argument("unknown gate kind '" + std::string(name) + "'");
}

size_t gate_arity(GateOp op) {
    return op == GateOp::Not ? 1 : 2;
}

BooleanCircuit::BooleanCircuit(std::vector<std::string> inputs, std::vector<std::string> outputs, std::vector<Gate> gates)
    : inputs_(std::move(inputs)), outputs_(std::move(outputs)) {
    std::unordered_set<std::string> names;
    for (const auto &in : inputs_) {
        if (!names.insert(in).second) {
            throw std::invalid_argument("duplicate wire name '" + in + "'");
        }
    }
    std::unordered_map<std::string, size_t> gate_index;
    for (size_t k = 0; k < gates.size(); k++) {
        if (!names.insert(gates[k].id).second) {
            throw std::invalid_argument("duplicate wire name '" + gates[k].id + "'");
        }
        gate_index[gates[k].id] = k;
    }
    for (const auto &g : gates) {
        if (g.args.size() != gate_arity(g.op)) {
            throw std::invalid_argument(
                "gate '" + g.id + "' (" + std::string(gate_op_name(g.op)) + ") takes " +
                std::to_string(gate_arity(g.op)) + " argument(s)");
        }
        for (const auto &a : g.args) {
            if (!names.contains(a)) {
                throw std::invalid_argument("gate '" + g.id + "' uses undefined wire '" + a + "'");
            }
        }
    }
    for (const auto &o : outputs_) {
        if (!names.contains(o)) {
            throw std::invalid_argument("output '" + o + "' is not a defined wire");
        }
    }

    // Depth-first topological sort; keeps the given order when it is already topological.
    std::vector<uint8_t> state(gates.size(), 0);  // 0 new, 1 on stack, 2 done
    gates_.reserve(gates.size());
    auto visit = [&](auto &self, size_t k) -> void {
        if (state[k] == 2) {
            return;
        }
        if (state[k] == 1) {
            throw std::invalid_argument("cyclic dependency through gate '" + gates[k].id + "'");
        }
        state[k] = 1;
        for (const auto &a : gates[k].args) {
            auto it = gate_index.find(a);
            if (it != gate_index.end()) {
                self(self, it->second);
            }
        }
        state[k] = 2;
        gates_.push_back(gates[k]);
    };
    for (size_t k = 0; k < gates.size(); k++) {
        visit(visit, k);
    }
}

size_t BooleanCircuit::count(GateOp op) const {
    size_t n = 0;
    for (const auto &g : gates_) {
        n += g.op == op ? 1 : 0;
    }
    return n;
}

bool BooleanCircuit::is_lowered() const {
    return count(GateOp::And) == 0 && count(GateOp::Or) == 0;
}

BitVector BooleanCircuit::evaluate(const BitVector &input) const {
    if (input.width() != inputs_.size()) {
        throw std::invalid_argument(
            "circuit has " + std::to_string(inputs_.size()) + " inputs, got " + std::to_string(input.width()));
    }
    std::unordered_map<std::string, uint8_t> value;
    for (size_t k = 0; k < inputs_.size(); k++) {
        value[inputs_[k]] = input[k];
    }
    for (const auto &g : gates_) {
        uint8_t a = value.at(g.args[0]);
        uint8_t b = g.args.size() > 1 ? value.at(g.args[1]) : 0;
        uint8_t v = 0;
        switch (g.op) {
            case GateOp::Nand:
                v = !(a && b);
                break;
            case GateOp::And:
                v = a && b;
                break;
            case GateOp::Or:
                v = a || b;
                break;
            case GateOp::Not:
                v = !a;
                break;
            case GateOp::Xor:
                v = a ^ b;
                break;
        }
        value[g.id] = v;
    }
    BitVector out(outputs_.size());
    for (size_t k = 0; k < outputs_.size(); k++) {
        out.set(k, value.at(outputs_[k]));
    }
    return out;
}

BooleanCircuit parse_netlist(std::string_view json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception &e) {
        throw ParseError(std::string("netlist is not valid JSON: ") + e.what());
    }
    try {
        if (!j.is_object()) {
            throw ParseError("netlist must be a JSON object");
        }
        auto inputs = j.at("inputs").get<std::vector<std::string>>();
        auto outputs = j.at("outputs").get<std::vector<std::string>>();
        std::vector<Gate> gates;
        for (const auto &g : j.value("gates", json::array())) {
            gates.push_back(Gate{
                g.at("id").get<std::string>(),
                parse_gate_op(g.at("op").get<std::string>()),
                g.at("args").get<std::vector<std::string>>()});
        }
        return BooleanCircuit(std::move(inputs), std::move(outputs), std::move(gates));
    } catch (const json::exception &e) {
        throw ParseError(std::string("malformed netlist: ") + e.what());
    } catch (const std::invalid_argument &e) {
        throw ParseError(std::string("invalid netlist: ") + e.what());
    }
}

std::string to_netlist_json(const BooleanCircuit &circuit) {
    json gates = json::array();
    for (const auto &g : circuit.gates()) {
        gates.push_back({{"id", g.id}, {"op", std::string(gate_op_name(g.op))}, {"args", g.args}});
    }
    json j{{"inputs", circuit.inputs()}, {"outputs", circuit.outputs()}, {"gates", gates}};
    return j.dump();
}

BooleanCircuit lower_to_nand_xor(const BooleanCircuit &circuit) {
    std::unordered_set<std::string> taken(circuit.inputs().begin(), circuit.inputs().end());
    for (const auto &g : circuit.gates()) {
        taken.insert(g.id);
    }
    auto fresh = [&](const std::string &base) {
        std::string name = base;
        for (size_t k = 2; taken.contains(name); k++) {
            name = base + std::to_string(k);
        }
        taken.insert(name);
        return name;
    };
    std::vector<Gate> out;
    for (const auto &g : circuit.gates()) {
        switch (g.op) {
            case GateOp::And: {
                std::string inner = fresh(g.id + "~nand");
                out.push_back({inner, GateOp::Nand, g.args});
                out.push_back({g.id, GateOp::Not, {inner}});
                break;
            }
            case GateOp::Or: {
                std::string na = fresh(g.id + "~not0");
                std::string nb = fresh(g.id + "~not1");
                out.push_back({na, GateOp::Not, {g.args[0]}});
                out.push_back({nb, GateOp::Not, {g.args[1]}});
                out.push_back({g.id, GateOp::Nand, {na, nb}});
                break;
            }
            case GateOp::Nand:
            case GateOp::Not:
            case GateOp::Xor:
                out.push_back(g);
                break;
        }
    }
    return BooleanCircuit(circuit.inputs(), circuit.outputs(), std::move(out));
}

BooleanCircuit full_adder_circuit() {
    return BooleanCircuit(
        {"a", "b", "cin"},
        {"sum", "carry"},
        {
            {"ab", GateOp::Xor, {"a", "b"}},
            {"sum", GateOp::Xor, {"ab", "cin"}},
            {"n1", GateOp::Nand, {"a", "b"}},
            {"n2", GateOp::Nand, {"cin", "ab"}},
            {"carry", GateOp::Nand, {"n1", "n2"}},
        });
}

BooleanCircuit two_bit_multiplier_circuit() {
    return BooleanCircuit(
        {"a1", "a0", "b1", "b0"},
        {"p3", "p2", "p1", "p0"},
        {
            {"p0", GateOp::And, {"a0", "b0"}},
            {"a1b0", GateOp::And, {"a1", "b0"}},
            {"a0b1", GateOp::And, {"a0", "b1"}},
            {"a1b1", GateOp::And, {"a1", "b1"}},
            {"p1", GateOp::Xor, {"a1b0", "a0b1"}},
            {"k", GateOp::And, {"a1b0", "a0b1"}},
            {"p2", GateOp::Xor, {"a1b1", "k"}},
            {"p3", GateOp::And, {"a1b1", "k"}},
        });
}

BooleanCircuit nand_chain_circuit(size_t n) {
    if (n == 0) {
        throw std::invalid_argument("a NAND chain needs at least one gate");
    }
    std::vector<std::string> inputs{"x0"};
    std::vector<Gate> gates;
    std::string prev = "x0";
    for (size_t k = 1; k <= n; k++) {
        std::string in = "x" + std::to_string(k);
        std::string id = "g" + std::to_string(k);
        inputs.push_back(in);
        gates.push_back({id, GateOp::Nand, {prev, in}});
        prev = id;
    }
    return BooleanCircuit(std::move(inputs), {prev}, std::move(gates));
}

}  // namespace mbcc::compiler

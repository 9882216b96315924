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

#include "mbcc/resources/resource_spec.h"

#include <stdexcept>

#include "json.hpp"
#include "mbcc/errors.h"

namespace mbcc::resources {

using nlohmann::json;

namespace {

Pauli parse_setting(const json &j) {
    std::string s = j.get<std::string>();
    if (s.size() != 1) {
        throw ParseError("setting must be a single Pauli letter, got '" + s + "'");
    }
    return pauli_from_char(s[0]);
}

template <typename T>
T apply_circuit(T state, const std::vector<CliffordOp> &circuit) {
    for (const auto &op : circuit) {
        auto need = [&](size_t k) {
            if (op.qubits.size() != k) {
                throw std::invalid_argument("gate " + op.gate + " takes " + std::to_string(k) + " qubit(s)");
            }
        };
        if (op.gate == "CNOT") {
            need(2);
            state.cnot(op.qubits[0], op.qubits[1]);
            continue;
        }
        need(1);
        size_t q = op.qubits[0];
        if (op.gate == "H") {
            state.h(q);
        } else if (op.gate == "S") {
            state.s(q);
        } else if (op.gate == "X") {
            state.x(q);
        } else if (op.gate == "Y") {
            state.y(q);
        } else if (op.gate == "Z") {
            state.z(q);
        } else {
            throw std::invalid_argument("unknown gate '" + op.gate + "'");
        }
    }
    return state;
}

}  // namespace

ResourceSpec parse_resource_spec(std::string_view json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception &e) {
        throw ParseError(std::string("resource spec is not valid JSON: ") + e.what());
    }
    ResourceSpec spec;
    try {
        if (!j.is_object() || !j.contains("backend")) {
            throw ParseError("resource spec needs a \"backend\" field");
        }
        try {
            spec.backend = parse_backend(j.at("backend").get<std::string>());
        } catch (const std::invalid_argument &e) {
            throw ParseError(e.what());
        }
        spec.parties = spec.backend == BackendKind::PrBox ? 2 : j.value("parties", size_t{0});
        if (spec.parties == 0) {
            throw ParseError("resource spec needs a positive \"parties\" field");
        }
        if (j.contains("state")) {
            if (j.at("state").get<std::string>() != "ghz") {
                throw ParseError("the only named state is \"ghz\"");
            }
            spec.ghz = true;
        }
        if (j.contains("circuit")) {
            for (const auto &g : j.at("circuit")) {
                if (!g.is_array() || g.empty()) {
                    throw ParseError("circuit entries look like [\"CNOT\", 0, 1]");
                }
                CliffordOp op{g[0].get<std::string>(), {}};
                for (size_t k = 1; k < g.size(); k++) {
                    op.qubits.push_back(g[k].get<size_t>());
                }
                spec.circuit.push_back(std::move(op));
            }
        }
        if (j.contains("amplitudes")) {
            for (const auto &a : j.at("amplitudes")) {
                if (!a.is_array() || a.size() != 2) {
                    throw ParseError("amplitudes are [re, im] pairs");
                }
                spec.amplitudes.emplace_back(a[0].get<double>(), a[1].get<double>());
            }
        }
        if (j.contains("settings")) {
            for (const auto &pair : j.at("settings")) {
                if (!pair.is_array() || pair.size() != 2) {
                    throw ParseError("settings are [observable for 0, observable for 1] pairs");
                }
                spec.settings.push_back({parse_setting(pair[0]), parse_setting(pair[1])});
            }
        }
        if (j.contains("strategies")) {
            for (const auto &s : j.at("strategies")) {
                WeightedStrategy w{s.at("probability").get<double>(), {}};
                for (const auto &r : s.at("responses")) {
                    if (!r.is_array() || r.size() != 2) {
                        throw ParseError("responses are [outcome for 0, outcome for 1] pairs");
                    }
                    w.strategy.responses.push_back({r[0].get<uint8_t>(), r[1].get<uint8_t>()});
                }
                spec.strategies.push_back(std::move(w));
            }
        }
        if (j.contains("convention")) {
            std::string c = j.at("convention").get<std::string>();
            if (c == "and") {
                spec.convention = PrBoxConvention::And;
            } else if (c == "nand") {
                spec.convention = PrBoxConvention::Nand;
            } else {
                throw ParseError("convention must be \"and\" or \"nand\"");
            }
        }
    } catch (const json::exception &e) {
        throw ParseError(std::string("malformed resource spec: ") + e.what());
    }
    return spec;
}

std::string to_json(const ResourceSpec &spec) {
    json j;
    j["backend"] = std::string(backend_name(spec.backend));
    j["parties"] = spec.parties;
    if (spec.ghz) {
        j["state"] = "ghz";
    }
    if (!spec.circuit.empty()) {
        json c = json::array();
        for (const auto &op : spec.circuit) {
            json g = json::array({op.gate});
            for (size_t q : op.qubits) {
                g.push_back(q);
            }
            c.push_back(g);
        }
        j["circuit"] = c;
    }
    if (!spec.amplitudes.empty()) {
        json a = json::array();
        for (const auto &z : spec.amplitudes) {
            a.push_back({z.real(), z.imag()});
        }
        j["amplitudes"] = a;
    }
    if (!spec.settings.empty()) {
        json s = json::array();
        for (const auto &pair : spec.settings) {
            s.push_back({std::string(1, pauli_char(pair[0])), std::string(1, pauli_char(pair[1]))});
        }
        j["settings"] = s;
    }
    if (!spec.strategies.empty()) {
        json s = json::array();
        for (const auto &w : spec.strategies) {
            json r = json::array();
            for (const auto &resp : w.strategy.responses) {
                r.push_back({resp[0], resp[1]});
            }
            s.push_back({{"probability", w.probability}, {"responses", r}});
        }
        j["strategies"] = s;
    }
    if (spec.backend == BackendKind::PrBox) {
        j["convention"] = spec.convention == PrBoxConvention::And ? "and" : "nand";
    }
    return j.dump();
}

std::unique_ptr<Resource> instantiate(const ResourceSpec &spec, uint64_t seed) {
    Settings settings = spec.settings.empty() ? xy_settings(spec.parties) : spec.settings;
    auto check_quantum_source = [&]() {
        int sources = (spec.ghz ? 1 : 0) + (spec.circuit.empty() ? 0 : 1) + (spec.amplitudes.empty() ? 0 : 1);
        if (sources > 1) {
            throw std::invalid_argument("give only one of state, circuit, amplitudes");
        }
        if (spec.ghz && spec.parties != 3) {
            throw std::invalid_argument("the GHZ state has 3 parties");
        }
    };
    switch (spec.backend) {
        case BackendKind::StateVector: {
            check_quantum_source();
            StateVector state(spec.parties);
            if (spec.ghz) {
                state = make_ghz_state();
            } else if (!spec.amplitudes.empty()) {
                state = StateVector::from_amplitudes(spec.amplitudes);
                if (state.num_qubits() != spec.parties) {
                    throw std::invalid_argument("amplitude count does not match the party count");
                }
            } else {
                state = apply_circuit(std::move(state), spec.circuit);
            }
            return std::make_unique<StateVectorResource>(std::move(state), std::move(settings), seed);
        }
        case BackendKind::Stabilizer: {
            check_quantum_source();
            if (!spec.amplitudes.empty()) {
                throw std::invalid_argument("stabilizer resources are prepared by a Clifford circuit");
            }
            Tableau t = spec.ghz ? make_ghz_tableau_state() : apply_circuit(Tableau(spec.parties), spec.circuit);
            return std::make_unique<StabilizerResource>(std::move(t), std::move(settings), seed);
        }
        case BackendKind::Lhv: {
            auto r = std::make_unique<LhvResource>(make_lhv(spec.strategies, seed));
            if (r->num_parties() != spec.parties) {
                throw std::invalid_argument("strategy table does not match the party count");
            }
            return r;
        }
        case BackendKind::PrBox:
            return std::make_unique<PrBoxResource>(seed, spec.convention);
    }
    throw std::invalid_argument("unknown backend");
}

}  // namespace mbcc::resources

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

#include "mbcc/resources/resource.h"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "mbcc/errors.h"

namespace mbcc::resources {

namespace {

constexpr double kNormalizationTolerance = 1e-12;

void check_settings(const Settings &settings, size_t n_parties) {
    if (settings.size() != n_parties) {
        throw std::invalid_argument("settings must list one observable pair per party");
    }
    for (const auto &pair : settings) {
        for (Pauli p : pair) {
            if (p == Pauli::I) {
                throw std::invalid_argument("identity is not a measurement setting");
            }
        }
    }
}

}  // namespace

std::string_view backend_name(BackendKind kind) {
    switch (kind) {
        case BackendKind::StateVector:
            return "statevector";
        case BackendKind::Stabilizer:
            return "stabilizer";
        case BackendKind::Lhv:
            return "lhv";
        case BackendKind::PrBox:
            return "prbox";
    }
    return "?";
}

BackendKind parse_backend(std::string_view name) {
    for (auto kind : {BackendKind::StateVector, BackendKind::Stabilizer, BackendKind::Lhv, BackendKind::PrBox}) {
        if (backend_name(kind) == name) {
            return kind;
        }
    }
    throw std::invalid_argument("unknown backend '" + std::string(name) + "'");
}

Settings xy_settings(size_t n_parties) {
    return Settings(n_parties, {Pauli::X, Pauli::Y});
}

Resource::Resource(ResourceDescriptor descriptor) : descriptor_(descriptor), used_(descriptor.n_parties, false) {
    if (descriptor_.n_parties == 0) {
        throw std::invalid_argument("a resource needs at least one party");
    }
    if (descriptor_.input_alphabet != 2 || descriptor_.output_alphabet != 2) {
        throw std::invalid_argument("only binary input and output alphabets are supported");
    }
}

uint8_t Resource::query(size_t party, uint8_t input_bit) {
    if (party >= used_.size()) {
        throw ResourceError("party " + std::to_string(party) + " out of range");
    }
    if (input_bit > 1) {
        throw std::invalid_argument("input must be a bit");
    }
    if (used_[party]) {
        throw ResourceError("party " + std::to_string(party) + " was already queried");
    }
    used_[party] = true;
    return respond(party, input_bit);
}

bool Resource::is_used(size_t party) const {
    return used_.at(party);
}

bool Resource::is_fresh() const {
    for (bool u : used_) {
        if (u) {
            return false;
        }
    }
    return true;
}

std::optional<Pauli> Resource::observable(size_t, uint8_t) const {
    return std::nullopt;
}

void Resource::require_fresh() const {
    if (!is_fresh()) {
        throw ResourceError("joint distribution requested from a resource that was already queried");
    }
}

// ---------------------------------------------------------------------------
// State vector

StateVectorResource::StateVectorResource(StateVector state, Settings settings, uint64_t seed)
    : StateVectorResource(std::move(state), std::move(settings), {}, seed) {
}

StateVectorResource::StateVectorResource(
    StateVector state, Settings settings, std::vector<size_t> party_to_qubit, uint64_t seed)
    : Resource({state.num_qubits(), 2, 2, BackendKind::StateVector}),
      state_(std::move(state)),
      settings_(std::move(settings)),
      party_to_qubit_(std::move(party_to_qubit)),
      rng_(seed) {
    size_t n = state_.num_qubits();
    if (std::abs(state_.norm_squared() - 1.0) > kNormalizationTolerance) {
        throw std::invalid_argument("state vector resource requires a normalized state");
    }
    check_settings(settings_, n);
    if (party_to_qubit_.empty()) {
        for (size_t k = 0; k < n; k++) {
            party_to_qubit_.push_back(k);
        }
    }
    std::vector<bool> hit(n, false);
    if (party_to_qubit_.size() != n) {
        throw std::invalid_argument("party_to_qubit must be a bijection");
    }
    for (size_t q : party_to_qubit_) {
        if (q >= n || hit[q]) {
            throw std::invalid_argument("party_to_qubit must be a bijection");
        }
        hit[q] = true;
    }
}

std::optional<Pauli> StateVectorResource::observable(size_t party, uint8_t input_bit) const {
    return settings_.at(party).at(input_bit);
}

uint8_t StateVectorResource::respond(size_t party, uint8_t input_bit) {
    auto m = measure_pauli_statevector(state_, party_to_qubit_[party], settings_[party][input_bit]);
    uint8_t bit = rng_.uniform() < m.prob_plus ? 0 : 1;
    if (bit == 0 && !m.post_plus) {
        bit = 1;
    } else if (bit == 1 && !m.post_minus) {
        bit = 0;
    }
    state_ = bit == 0 ? std::move(*m.post_plus) : std::move(*m.post_minus);
    return bit;
}

JointDistribution StateVectorResource::joint_distribution() const {
    require_fresh();
    size_t n = num_parties();
    if (n > kMaxExactQubits) {
        throw std::invalid_argument("exact enumeration is limited to 12 qubits");
    }
    JointDistribution dist(n);
    for (uint64_t x = 0; x < dist.num_tuples(); x++) {
        BitVector inputs = BitVector::from_index(x, n);
        std::function<void(const StateVector &, size_t, uint64_t, double)> branch =
            [&](const StateVector &s, size_t party, uint64_t outcomes, double p) {
                if (party == n) {
                    dist.at(x, outcomes) += p;
                    return;
                }
                auto m = measure_pauli_statevector(s, party_to_qubit_[party], settings_[party][inputs[party]]);
                if (m.post_plus) {
                    branch(*m.post_plus, party + 1, outcomes << 1, p * m.prob_plus);
                }
                if (m.post_minus) {
                    branch(*m.post_minus, party + 1, (outcomes << 1) | 1, p * m.prob_minus);
                }
            };
        branch(state_, 0, 0, 1.0);
    }
    return dist;
}

// ---------------------------------------------------------------------------
// Stabilizer

StabilizerResource::StabilizerResource(Tableau tableau, Settings settings, uint64_t seed)
    : Resource({tableau.num_qubits(), 2, 2, BackendKind::Stabilizer}),
      tableau_(std::move(tableau)),
      settings_(std::move(settings)),
      rng_(seed) {
    check_settings(settings_, tableau_.num_qubits());
}

std::optional<Pauli> StabilizerResource::observable(size_t party, uint8_t input_bit) const {
    return settings_.at(party).at(input_bit);
}

uint8_t StabilizerResource::respond(size_t party, uint8_t input_bit) {
    auto obs = PauliString::single(num_parties(), party, settings_[party][input_bit]);
    return tableau_.measure(obs, &rng_).bit;
}

JointDistribution StabilizerResource::joint_distribution() const {
    require_fresh();
    size_t n = num_parties();
    JointDistribution dist(n);
    for (uint64_t x = 0; x < dist.num_tuples(); x++) {
        BitVector inputs = BitVector::from_index(x, n);
        std::function<void(const Tableau &, size_t, uint64_t, double)> branch =
            [&](const Tableau &t, size_t party, uint64_t outcomes, double p) {
                if (party == n) {
                    dist.at(x, outcomes) += p;
                    return;
                }
                auto obs = PauliString::single(n, party, settings_[party][inputs[party]]);
                if (auto fixed = t.peek(obs)) {
                    branch(t, party + 1, (outcomes << 1) | *fixed, p);
                    return;
                }
                for (uint8_t bit = 0; bit < 2; bit++) {
                    Tableau next = t;
                    next.measure(obs, nullptr, bit);
                    branch(next, party + 1, (outcomes << 1) | bit, p * 0.5);
                }
            };
        branch(tableau_, 0, 0, 1.0);
    }
    return dist;
}

// ---------------------------------------------------------------------------
// Local hidden variables

uint64_t DeterministicStrategy::outcomes_for(uint64_t inputs) const {
    size_t n = responses.size();
    uint64_t outcomes = 0;
    for (size_t party = 0; party < n; party++) {
        uint8_t in = (inputs >> (n - 1 - party)) & 1;
        outcomes = (outcomes << 1) | responses[party][in];
    }
    return outcomes;
}

std::vector<DeterministicStrategy> all_deterministic_strategies(size_t n_parties) {
    if (n_parties == 0 || n_parties > 6) {
        throw std::invalid_argument("strategy enumeration supports 1 to 6 parties");
    }
    std::vector<DeterministicStrategy> result;
    uint64_t count = uint64_t{1} << (2 * n_parties);
    for (uint64_t code = 0; code < count; code++) {
        DeterministicStrategy s;
        for (size_t party = 0; party < n_parties; party++) {
            // Two bits per party, party 0 most significant: (response to 0, response to 1).
            uint64_t f = (code >> (2 * (n_parties - 1 - party))) & 3;
            s.responses.push_back({static_cast<uint8_t>(f >> 1), static_cast<uint8_t>(f & 1)});
        }
        result.push_back(std::move(s));
    }
    return result;
}

LhvResource::LhvResource(std::vector<WeightedStrategy> strategies, uint64_t seed)
    : Resource({strategies.empty() ? 0 : strategies.front().strategy.responses.size(), 2, 2, BackendKind::Lhv}),
      strategies_(std::move(strategies)),
      chosen_(0) {
    double total = 0;
    for (const auto &w : strategies_) {
        if (w.strategy.responses.size() != num_parties()) {
            throw std::invalid_argument("strategies disagree on the party count");
        }
        if (!(w.probability >= 0)) {
            throw std::invalid_argument("strategy probabilities must be nonnegative");
        }
        for (const auto &r : w.strategy.responses) {
            if (r[0] > 1 || r[1] > 1) {
                throw std::invalid_argument("strategy responses must be bits");
            }
        }
        total += w.probability;
    }
    if (std::abs(total - 1.0) > kNormalizationTolerance) {
        throw std::invalid_argument("strategy probabilities must sum to 1");
    }
    Rng rng(seed);
    double u = rng.uniform();
    double acc = 0;
    for (size_t k = 0; k < strategies_.size(); k++) {
        if (strategies_[k].probability > 0) {
            chosen_ = k;  // fallback when rounding leaves u >= acc
        }
    }
    for (size_t k = 0; k < strategies_.size(); k++) {
        acc += strategies_[k].probability;
        if (u < acc) {
            chosen_ = k;
            break;
        }
    }
}

uint8_t LhvResource::respond(size_t party, uint8_t input_bit) {
    return strategies_[chosen_].strategy.responses[party][input_bit];
}

JointDistribution LhvResource::joint_distribution() const {
    require_fresh();
    JointDistribution dist(num_parties());
    for (uint64_t x = 0; x < dist.num_tuples(); x++) {
        for (const auto &w : strategies_) {
            dist.at(x, w.strategy.outcomes_for(x)) += w.probability;
        }
    }
    return dist;
}

// ---------------------------------------------------------------------------
// PR box

PrBoxResource::PrBoxResource(uint64_t seed, PrBoxConvention convention)
    : Resource({2, 2, 2, BackendKind::PrBox}), convention_(convention), rng_(seed) {
}

uint8_t PrBoxResource::respond(size_t, uint8_t input_bit) {
    if (!first_) {
        uint8_t bit = rng_.coin() ? 1 : 0;
        first_ = std::make_pair(input_bit, bit);
        return bit;
    }
    uint8_t parity = first_->first & input_bit;
    if (convention_ == PrBoxConvention::Nand) {
        parity ^= 1;
    }
    return first_->second ^ parity;
}

JointDistribution PrBoxResource::joint_distribution() const {
    require_fresh();
    JointDistribution dist(2);
    for (uint64_t x = 0; x < 4; x++) {
        uint8_t parity = static_cast<uint8_t>((x >> 1) & x & 1);
        if (convention_ == PrBoxConvention::Nand) {
            parity ^= 1;
        }
        for (uint64_t m = 0; m < 4; m++) {
            uint8_t mp = static_cast<uint8_t>(((m >> 1) ^ m) & 1);
            dist.at(x, m) = mp == parity ? 0.5 : 0.0;
        }
    }
    return dist;
}

// ---------------------------------------------------------------------------

StateVectorResource make_ghz(uint64_t seed) {
    return StateVectorResource(make_ghz_state(), xy_settings(3), seed);
}

StabilizerResource make_ghz_tableau(uint64_t seed) {
    return StabilizerResource(make_ghz_tableau_state(), xy_settings(3), seed);
}

PrBoxResource make_pr_box(uint64_t seed, PrBoxConvention convention) {
    return PrBoxResource(seed, convention);
}

LhvResource make_lhv(std::vector<WeightedStrategy> strategy_table, uint64_t seed) {
    if (strategy_table.empty()) {
        throw std::invalid_argument("empty strategy table");
    }
    return LhvResource(std::move(strategy_table), seed);
}

}  // namespace mbcc::resources

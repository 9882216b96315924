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

#ifndef MBCC_RESOURCES_RESOURCE_H
#define MBCC_RESOURCES_RESOURCE_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mbcc/resources/joint_distribution.h"
#include "mbcc/resources/pauli.h"
#include "mbcc/resources/rng.h"
#include "mbcc/resources/state_vector.h"
#include "mbcc/resources/tableau.h"

namespace mbcc::resources {

enum class BackendKind : uint8_t { StateVector, Stabilizer, Lhv, PrBox };

std::string_view backend_name(BackendKind kind);
/// Accepts "statevector", "stabilizer", "lhv", "prbox".
BackendKind parse_backend(std::string_view name);

struct ResourceDescriptor {
    size_t n_parties;
    /// Input and output alphabet sizes; every shipped backend is binary.
    size_t input_alphabet = 2;
    size_t output_alphabet = 2;
    BackendKind backend;
};

/// Per party, the observable measured for input bit 0 and for input bit 1.
using Settings = std::vector<std::array<Pauli, 2>>;

/// X for input 0 and Y for input 1 on every party.
Settings xy_settings(size_t n_parties);

/// A single-use correlated multiparty resource.
///
/// The controller may exchange data with each party exactly once: it sends
/// one input bit and receives one outcome bit. Measured eigenvalue +1 is
/// reported as bit 0 and -1 as bit 1. A second query to the same party throws
/// ResourceError.
class Resource {
   public:
    virtual ~Resource() = default;

    const ResourceDescriptor &descriptor() const {
        return descriptor_;
    }
    size_t num_parties() const {
        return descriptor_.n_parties;
    }

    uint8_t query(size_t party, uint8_t input_bit);

    bool is_used(size_t party) const;
    bool is_fresh() const;

    /// Exact P(outcomes | inputs) of the fresh resource, by enumeration.
    /// Throws ResourceError once any party has been queried.
    virtual JointDistribution joint_distribution() const = 0;

    /// The observable a party measures for the given input, for quantum backends.
    virtual std::optional<Pauli> observable(size_t party, uint8_t input_bit) const;

   protected:
    explicit Resource(ResourceDescriptor descriptor);
    virtual uint8_t respond(size_t party, uint8_t input_bit) = 0;
    void require_fresh() const;

   private:
    ResourceDescriptor descriptor_;
    std::vector<bool> used_;
};

/// Pure qubit state with one qubit per party; queries measure and collapse.
class StateVectorResource : public Resource {
   public:
    static constexpr size_t kMaxExactQubits = 12;

    StateVectorResource(StateVector state, Settings settings, uint64_t seed);
    StateVectorResource(
        StateVector state, Settings settings, std::vector<size_t> party_to_qubit, uint64_t seed);

    const StateVector &state() const {
        return state_;
    }
    JointDistribution joint_distribution() const override;
    std::optional<Pauli> observable(size_t party, uint8_t input_bit) const override;

   protected:
    uint8_t respond(size_t party, uint8_t input_bit) override;

   private:
    StateVector state_;
    Settings settings_;
    std::vector<size_t> party_to_qubit_;
    Rng rng_;
};

/// Stabilizer state with one qubit per party; queries are tableau measurements.
class StabilizerResource : public Resource {
   public:
    StabilizerResource(Tableau tableau, Settings settings, uint64_t seed);

    const Tableau &tableau() const {
        return tableau_;
    }
    JointDistribution joint_distribution() const override;
    std::optional<Pauli> observable(size_t party, uint8_t input_bit) const override;

   protected:
    uint8_t respond(size_t party, uint8_t input_bit) override;

   private:
    Tableau tableau_;
    Settings settings_;
    Rng rng_;
};

/// Per party, the outcome returned for input 0 and for input 1.
struct DeterministicStrategy {
    std::vector<std::array<uint8_t, 2>> responses;

    uint64_t outcomes_for(uint64_t inputs) const;
};

struct WeightedStrategy {
    double probability;
    DeterministicStrategy strategy;
};

/// Every deterministic strategy for n parties (4^n of them), in lexicographic order.
std::vector<DeterministicStrategy> all_deterministic_strategies(size_t n_parties);

/// Local hidden variable model: a shared random choice of deterministic strategy.
class LhvResource : public Resource {
   public:
    /// The strategy is drawn once, at construction, from `strategies`.
    LhvResource(std::vector<WeightedStrategy> strategies, uint64_t seed);

    const std::vector<WeightedStrategy> &strategies() const {
        return strategies_;
    }
    JointDistribution joint_distribution() const override;

   protected:
    uint8_t respond(size_t party, uint8_t input_bit) override;

   private:
    std::vector<WeightedStrategy> strategies_;
    size_t chosen_;
};

/// Which parity the box produces: a AND b (the traditional definition) or NAND.
enum class PrBoxConvention : uint8_t { And, Nand };

/// Popescu-Rohrlich box: uniform marginals, m1 ^ m2 = a & b (or its negation).
class PrBoxResource : public Resource {
   public:
    explicit PrBoxResource(uint64_t seed, PrBoxConvention convention = PrBoxConvention::And);

    PrBoxConvention convention() const {
        return convention_;
    }
    JointDistribution joint_distribution() const override;

   protected:
    uint8_t respond(size_t party, uint8_t input_bit) override;

   private:
    PrBoxConvention convention_;
    Rng rng_;
    std::optional<std::pair<uint8_t, uint8_t>> first_;  // (input, outcome) of the first party queried
};

/// GHZ triple (|001> - |110>)/sqrt(2) with settings 0 -> X, 1 -> Y.
StateVectorResource make_ghz(uint64_t seed);
StabilizerResource make_ghz_tableau(uint64_t seed);
PrBoxResource make_pr_box(uint64_t seed, PrBoxConvention convention = PrBoxConvention::And);
/// Validates that probabilities are nonnegative and sum to 1 within 1e-12.
LhvResource make_lhv(std::vector<WeightedStrategy> strategy_table, uint64_t seed);

}  // namespace mbcc::resources

#endif

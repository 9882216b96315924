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

#ifndef MBCC_BOUNDS_CHSH_H
#define MBCC_BOUNDS_CHSH_H

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mbcc/resources/joint_distribution.h"
#include "mbcc/resources/resource.h"
#include "mbcc/resources/rng.h"

namespace mbcc::bounds {

/// (2 + sqrt 2) / 4.
inline constexpr double kTsirelsonBound = 0.85355339059327376220;
inline constexpr double kClassicalBound = 0.75;

/// Target parity m1 ^ m2 for each input pair, indexed 2a + b.
using GameTable = std::array<uint8_t, 4>;
inline constexpr GameTable kNandGame{1, 1, 1, 0};

/// Unit vector on the Bloch sphere; the observable is n.sigma.
struct BlochDirection {
    double theta;
    double phi;
};

/// Two-qubit state plus, per party and input bit, a measurement direction.
/// Party 0 is the high qubit. Outcome bit 0 is the +1 eigenvalue.
struct CHSHStrategy {
    std::array<std::complex<double>, 4> state;
    std::array<std::array<BlochDirection, 2>, 2> measurements;

    /// Throws std::invalid_argument when the state norm is off by more than
    /// 1e-12 or an angle is not finite.
    void validate() const;
    resources::JointDistribution to_distribution() const;
    std::string str() const;
};

struct GameScore {
    /// P(a, b), indexed 2a + b.
    std::array<double, 4> p;
    double average;

    std::string str() const;
};

/// Sum of P(m1, m2 | a, b) over outcomes with m1 ^ m2 = game[2a + b].
double success_probability(
    const resources::JointDistribution &dist, uint8_t a, uint8_t b, const GameTable &game = kNandGame);

GameScore chsh_score(const resources::JointDistribution &dist, const GameTable &game = kNandGame);
GameScore chsh_score(const CHSHStrategy &strategy, const GameTable &game = kNandGame);

/// Singlet with A0 = Z, A1 = X, B0/B1 = (Z +- X)/sqrt 2.
CHSHStrategy optimal_quantum_strategy();

/// The AND-convention PR box with party 0's outcome negated, so that the
/// outcome parity is NAND(a, b).
resources::JointDistribution pr_box_game_distribution();

struct LhvMaximum {
    double score;
    resources::DeterministicStrategy witness;
    size_t strategies_enumerated;
};

/// Exhaustive maximum over the 16 deterministic bipartite strategies.
LhvMaximum lhv_maximum(const GameTable &game = kNandGame);

/// lhv_maximum for each of the 16 input/output relabelings of the two parties.
/// Relabeling k flips party 0's input (bit 3), party 0's output (bit 2),
/// party 1's input (bit 1) and party 1's output (bit 0).
std::array<double, 16> lhv_relabeling_audit(const GameTable &game = kNandGame);

/// The game a relabeled pair of players is effectively playing.
GameTable relabel_game(const GameTable &game, unsigned relabeling);

/// |00> with each measurement along +z or -z reproducing a deterministic strategy.
CHSHStrategy classical_embedding(const resources::DeterministicStrategy &strategy);

enum class Ansatz : uint8_t {
    /// Any normalized two-qubit state.
    General,
    /// Product states only.
    Product,
};

struct OptimizeOptions {
    uint64_t seed = 1;
    size_t restarts = 20;
    /// Line searches per restart (one coordinate each).
    size_t iterations = 500;
    Ansatz ansatz = Ansatz::General;
    bool parallel = false;
    /// Start every restart from the all-zero parameter vector.
    bool identity_start = false;
};

struct OptimizeResult {
    double score;
    CHSHStrategy strategy;
    /// Best score of each restart, in restart order.
    std::vector<double> restart_scores;
    size_t evaluations;
};

/// Multi-restart coordinate ascent with golden-section line searches.
/// Restart r is seeded with derive_seed(seed, r), so results do not depend on `parallel`.
OptimizeResult quantum_optimize(const OptimizeOptions &options = {});

/// Number of real parameters for an ansatz: 14 (general) or 12 (product).
size_t parameter_count(Ansatz ansatz);
CHSHStrategy strategy_from_parameters(Ansatz ansatz, const std::vector<double> &params);

/// d average / d angle for measurement (party, input, 0 = theta / 1 = phi),
/// from the derivative of the projectors.
double analytic_angle_derivative(const CHSHStrategy &strategy, size_t party, size_t input, size_t which);
/// Central difference with step h.
double finite_difference_derivative(
    const CHSHStrategy &strategy, size_t party, size_t input, size_t which, double h = 1e-6);

struct TsirelsonReport {
    double score;
    double bound;
    /// bound - score.
    double margin;
    bool ok;
};

/// ok iff score <= (2 + sqrt 2)/4 + 1e-9.
TsirelsonReport check_tsirelson(const CHSHStrategy &strategy);

/// Haar-like random state and uniformly random measurement directions.
CHSHStrategy random_strategy(Rng &rng);

enum class NandResource : uint8_t { Quantum, PrBox };

struct NandFeasibility {
    size_t n_parties;
    NandResource resource;
    double max_score;
    bool deterministic;
    /// Score above Tsirelson's bound: no quantum resource can produce it.
    bool super_quantum;
    std::string witness;
};

/// n = 2: best quantum score (or PR box); n = 3: the GHZ gadget.
/// Throws std::invalid_argument for other n, or for n = 3 with a PR box.
NandFeasibility deterministic_nand_feasibility(
    size_t n_parties, NandResource resource = NandResource::Quantum, const OptimizeOptions &options = {});

}  // namespace mbcc::bounds

#endif

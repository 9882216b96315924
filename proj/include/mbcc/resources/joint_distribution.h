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

#ifndef MBCC_RESOURCES_JOINT_DISTRIBUTION_H
#define MBCC_RESOURCES_JOINT_DISTRIBUTION_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mbcc/bit_vector.h"

namespace mbcc::resources {

/// P(outcomes | inputs) for an n-party resource with binary inputs and outcomes.
///
/// Input and outcome tuples are indexed like BitVector::from_index: party 0 is
/// the most significant bit.
class JointDistribution {
   public:
    static constexpr size_t kMaxParties = 12;

    explicit JointDistribution(size_t num_parties);

    size_t num_parties() const {
        return n_;
    }
    size_t num_tuples() const {
        return size_t{1} << n_;
    }

    double &at(uint64_t inputs, uint64_t outcomes);
    double at(uint64_t inputs, uint64_t outcomes) const;
    double probability(const BitVector &inputs, const BitVector &outcomes) const;
    std::span<const double> row(uint64_t inputs) const;

    /// Throws std::invalid_argument unless every entry is in [0,1] and every
    /// row sums to 1 within `tolerance`.
    void validate(double tolerance = 1e-9) const;

    /// The distribution after the controller negates one party's outcome bit.
    JointDistribution with_outcome_flipped(size_t party) const;

    double max_abs_difference(const JointDistribution &other) const;

    /// One line per entry, `inputs|outcomes probability`, probabilities with
    /// 15 significant digits, preceded by a `parties N` header line.
    std::string to_text() const;
    static JointDistribution parse(std::string_view text);

   private:
    size_t n_;
    std::vector<double> table_;
};

struct NonSignallingReport {
    double max_violation = 0;
    bool passed = true;
    /// Worst case: subset of parties (bitmask, party 0 = highest bit), its inputs and outcomes.
    uint64_t worst_subset = 0;
    uint64_t worst_inputs = 0;
    uint64_t worst_outcomes = 0;
};

/// For every nonempty proper subset S of parties, checks that the marginal of
/// S's outcomes given S's inputs does not depend on the other parties' inputs.
NonSignallingReport check_nonsignalling(const JointDistribution &dist, double tolerance = 1e-9);

}  // namespace mbcc::resources

#endif

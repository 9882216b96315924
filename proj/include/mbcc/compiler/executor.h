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

#ifndef MBCC_COMPILER_EXECUTOR_H
#define MBCC_COMPILER_EXECUTOR_H

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mbcc/bit_vector.h"
#include "mbcc/compiler/compiler.h"
#include "mbcc/gadget/ghz_gadget.h"
#include "mbcc/resources/joint_distribution.h"
#include "mbcc/resources/resource.h"

namespace mbcc::compiler {

struct ExecuteOptions {
    /// Invoke the slots of each layer in a seeded random order.
    std::optional<uint64_t> shuffle_seed;
    /// Run the slots of each layer on separate threads.
    bool parallel = false;
};

struct ExecutionReport {
    BitVector input;
    BitVector output;
    /// One per slot, in program order (layer by layer).
    std::vector<gadget::GadgetTranscript> transcripts;
    ResourceBudget budget;

    std::string to_json() const;
};

/// Runs a compiled program. Slot k (in program order) consumes supply[k].
///
/// Throws ResourceError when the supply is shorter than the budget or holds a
/// resource that is not fresh or has the wrong party count; nothing is
/// queried in that case.
ExecutionReport execute(
    const CompiledProgram &compiled,
    std::span<const std::unique_ptr<resources::Resource>> supply,
    const BitVector &input,
    const ExecuteOptions &options = {});

/// Fresh slot resources for a backend: GHZ triples (state vector or tableau),
/// PR boxes, or the best 3-party LHV model. Instance k is seeded with derive_seed(seed, k).
std::vector<std::unique_ptr<resources::Resource>> make_supply(
    resources::BackendKind backend, size_t count, uint64_t seed);

/// The slot kind a backend's resources plug into.
SlotKind slot_kind_for(resources::BackendKind backend);

/// Exact distribution of the program's output, by propagating the register
/// distribution through every slot with `slot_distribution` (no sampling).
std::map<BitVector, double> exact_output_distribution(
    const CompiledProgram &compiled, const resources::JointDistribution &slot_distribution, const BitVector &input);

}  // namespace mbcc::compiler

#endif

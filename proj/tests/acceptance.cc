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

// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "mbcc/bounds/chsh.h"
#include "mbcc/cli/cli.h"
#include "mbcc/compiler/executor.h"
#include "mbcc/gadget/ghz_gadget.h"
#include "mbcc/parity/parity_program.h"
#include "mbcc/resources/resource.h"

using namespace mbcc;
using resources::BackendKind;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    double time_limit_s;
    std::function<Outcome()> run;
};

const double kTsirelson = (2 + std::sqrt(2.0)) / 4;

Outcome ghz_nand_determinism() {
    auto dist = resources::make_ghz(0).joint_distribution();
    double worst_dev = 0;
    size_t wrong = 0;
    for (uint8_t a = 0; a < 2; a++)
        for (uint8_t b = 0; b < 2; b++) {
            worst_dev = std::max(worst_dev, std::abs(1.0 - gadget::nand_success_probability(dist, a, b)));
            for (uint64_t s = 0; s < 10000; s++) {
                auto ghz = resources::make_ghz(derive_seed(2 * a + b, s));
                wrong += gadget::nand_via_ghz(ghz, a, b).decoded != !(a && b);
            }
        }
    return {worst_dev <= 1e-12 && wrong == 0,
            fmt::format("max |P-1| {:.2e}, {} wrong of 40000 sampled shots", worst_dev, wrong)};
}

Outcome eigenvalue_pattern() {
    auto v = gadget::verify_stabilizer_equations(resources::make_ghz_state());
    const double want[4] = {-1, -1, -1, 1};
    double dev = 0;
    for (size_t k = 0; k < 4; k++) {
        dev = std::max(dev, std::abs(v[k] - want[k]));
    }
    return {dev <= 1e-12, fmt::format("XXX {:+.12f} XYY {:+.12f} YXY {:+.12f} YYX {:+.12f}", v[0], v[1], v[2], v[3])};
}

Outcome classical_bound() {
    auto r = bounds::lhv_maximum();
    return {r.score == 0.75 && r.strategies_enumerated == 16,
            fmt::format("max {} over {} deterministic strategies", r.score, r.strategies_enumerated)};
}

Outcome tsirelson_saturation() {
    auto best = bounds::quantum_optimize({.seed = 1, .restarts = 20, .iterations = 500});
    Rng rng(4242);
    size_t violations = 0;
    double top = 0;
    for (int k = 0; k < 10000; k++) {
        auto report = bounds::check_tsirelson(bounds::random_strategy(rng));
        violations += !report.ok;
        top = std::max(top, report.score);
    }
    return {best.score >= kTsirelson - 1e-4 && violations == 0,
            fmt::format("optimized {:.10f} (target >= {:.10f}), {} of 10000 random strategies above bound, best random {:.6f}",
                        best.score, kTsirelson - 1e-4, violations, top)};
}

Outcome pr_box_perfection() {
    double score = bounds::chsh_score(bounds::pr_box_game_distribution()).average;
    auto verdict = bounds::deterministic_nand_feasibility(2, bounds::NandResource::PrBox);
    return {score == 1.0 && verdict.super_quantum,
            fmt::format("score {}, super-quantum {}", score, verdict.super_quantum)};
}

Outcome end_to_end_arithmetic() {
    size_t runs = 0, wrong = 0;
    bool budgets = true;
    double worst_exact = 1.0;
    for (auto backend : {BackendKind::StateVector, BackendKind::Stabilizer, BackendKind::PrBox}) {
        auto slot_dist = compiler::make_supply(backend, 1, 0)[0]->joint_distribution();
        for (const auto &circuit : {compiler::full_adder_circuit(), compiler::two_bit_multiplier_circuit()}) {
            auto lowered = compiler::lower_to_nand_xor(circuit);
            auto compiled = compiler::compile(lowered, compiler::slot_kind_for(backend));
            budgets = budgets && compiled.budget == lowered.count(compiler::GateOp::Nand);
            size_t n = circuit.inputs().size();
            for (uint64_t x = 0; x < (uint64_t{1} << n); x++) {
                auto in = BitVector::from_index(x, n);
                // Integer oracle: a+b+cin for the adder, (a1a0)*(b1b0) for the multiplier.
                uint64_t want = n == 3 ? in[0] + in[1] + in[2] : (x >> 2) * (x & 3);
                auto supply = compiler::make_supply(backend, compiled.budget, x);
                auto out = compiler::execute(compiled, supply, in).output;
                uint64_t got = n == 3 ? out[0] + 2 * out[1] : out.to_index();
                wrong += got != want;
                runs++;
                auto dist = compiler::exact_output_distribution(compiled, slot_dist, in);
                double p = dist.contains(out) ? dist.at(out) : 0.0;
                worst_exact = std::min(worst_exact, p);
            }
        }
    }
    return {wrong == 0 && budgets && worst_exact >= 1.0 - 1e-12,
            fmt::format("{} runs over 3 backends, {} wrong, budgets match NAND counts: {}, min exact success {:.15f}",
                        runs, wrong, budgets ? "yes" : "no", worst_exact)};
}

Outcome parity_impossibility() {
    auto fns = parity::enumerate_affine_functions(2);
    bool has_xor = false, has_nand = false;
    for (const auto &f : fns) {
        has_xor = has_xor || f.truth_table == std::vector<uint8_t>{0, 1, 1, 0};
        has_nand = has_nand || f.truth_table == std::vector<uint8_t>{1, 1, 1, 0};
    }
    return {fns.size() == 8 && has_xor && !has_nand,
            fmt::format("{} affine functions, XOR {}, NAND {}", fns.size(), has_xor ? "present" : "absent",
                        has_nand ? "present" : "absent")};
}

Outcome nonsignalling() {
    std::vector<std::pair<std::string, resources::JointDistribution>> dists{
        {"statevector", resources::make_ghz(0).joint_distribution()},
        {"stabilizer", resources::make_ghz_tableau(0).joint_distribution()},
        {"lhv", compiler::make_supply(BackendKind::Lhv, 1, 0)[0]->joint_distribution()},
        {"prbox", resources::make_pr_box(0).joint_distribution()},
    };
    double worst = 0;
    bool all = true;
    for (const auto &[name, d] : dists) {
        auto r = resources::check_nonsignalling(d);
        all = all && r.passed && r.max_violation < 1e-9;
        worst = std::max(worst, r.max_violation);
    }
    resources::JointDistribution signalling(2);
    for (uint64_t x = 0; x < 4; x++) {
        signalling.at(x, (x >> 1) & 1) = 1.0;
    }
    bool rejected = !resources::check_nonsignalling(signalling).passed;
    return {all && rejected, fmt::format("4 backends, max violation {:.2e}; signalling table rejected: {}", worst,
                                         rejected ? "yes" : "no")};
}

Outcome backend_equivalence() {
    auto sv = resources::make_ghz(0).joint_distribution();
    auto st = resources::make_ghz_tableau(0).joint_distribution();
    double diff = sv.max_abs_difference(st);
    return {diff <= 1e-12, fmt::format("max difference over 8 input patterns {:.2e}", diff)};
}

Outcome property_suites() {
    std::mt19937_64 rng(10);
    auto random_program = [&](size_t width, size_t length) {
        std::vector<parity::ParityInstruction> ins;
        for (size_t k = 0; k < length; k++) {
            size_t t = rng() % width;
            if (width > 1 && rng() % 2) {
                size_t c = (t + 1 + rng() % (width - 1)) % width;
                ins.push_back(parity::ParityInstruction::make_cnot(c, t));
            } else {
                ins.push_back(parity::ParityInstruction::make_not(t));
            }
        }
        std::vector<size_t> all(width);
        for (size_t k = 0; k < width; k++) {
            all[k] = k;
        }
        return parity::ParityProgram(width, ins, all, all);
    };
    size_t checked = 0, broken = 0;
    for (size_t width = 1; width <= 4; width++) {
        auto p = random_program(width, 4 * width);
        uint64_t n = uint64_t{1} << width;
        auto f = [&](uint64_t v) { return parity::run_parity(p, BitVector::from_index(v, width)); };
        for (uint64_t x = 0; x < n; x++)
            for (uint64_t y = 0; y < n; y++)
                for (uint64_t z = 0; z < n; z++) {
                    broken += f(x ^ y ^ z) != (f(x) ^ f(y) ^ f(z));
                    checked++;
                }
    }
    auto wide = random_program(64, 300);
    auto bits = [&]() {
        BitVector v(64);
        for (size_t k = 0; k < 64; k++) {
            v.set(k, rng() & 1);
        }
        return v;
    };
    for (int t = 0; t < 1000; t++) {
        auto x = bits(), y = bits(), z = bits();
        broken += parity::run_parity(wide, x ^ y ^ z) !=
                  (parity::run_parity(wide, x) ^ parity::run_parity(wide, y) ^ parity::run_parity(wide, z));
        checked++;
    }

    const std::string data = MBCC_TEST_DATA_DIR;
    const std::vector<std::vector<std::string>> commands{
        {"gadget", "1", "1", "--shots", "100", "--seed", "7"},
        {"gadget", "0", "1", "--backend", "stabilizer", "--shots", "100", "--seed", "7", "--format", "json"},
        {"compile", data + "/multiplier_2bit.json", "--format", "json"},
        {"run", data + "/multiplier_2bit.json", "1111", "--seed", "7"},
        {"run", data + "/full_adder.json", "101", "--backend", "prbox", "--seed", "7", "--format", "csv"},
        {"bounds", "--seed", "7"},
        {"verify", "--seed", "7"},
    };
    size_t differing = 0;
    for (const auto &cmd : commands) {
        std::ostringstream o1, o2, o3, e;
        cli::run_cli(cmd, o1, e);
        cli::run_cli(cmd, o2, e);
        auto par = cmd;
        par.push_back("--parallel");
        cli::run_cli(par, o3, e);
        differing += o1.str() != o2.str() || o1.str() != o3.str() || o1.str().empty();
    }
    return {broken == 0 && differing == 0,
            fmt::format("affine law: {} of {} triples broken; CLI reproducibility: {} of {} commands differ",
                        broken, checked, differing, commands.size())};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "GHZ NAND determinism", 1.0, ghz_nand_determinism},
        {2, "eigenvalue pattern", 1.0, eigenvalue_pattern},
        {3, "classical bound", 1.0, classical_bound},
        {4, "Tsirelson saturation", 30.0, tsirelson_saturation},
        {5, "PR box perfection", 1.0, pr_box_perfection},
        {6, "compiled arithmetic end to end", 10.0, end_to_end_arithmetic},
        {7, "parity computer impossibility", 1.0, parity_impossibility},
        {8, "non-signalling", 1.0, nonsignalling},
        {9, "backend equivalence", 1.0, backend_equivalence},
        {10, "property suites", 10.0, property_suites},
    };
    int failures = 0;
    for (const auto &c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = seconds < c.time_limit_s;
        bool pass = o.pass && in_time;
        failures += !pass;
        std::cout << fmt::format(
            "criterion {:>2} {}  {}: {} [{:.3f} s, limit {} s{}]\n", c.id, pass ? "PASS" : "FAIL", c.title, o.detail,
            seconds, c.time_limit_s, in_time ? "" : ", too slow");
    }
    std::cout << fmt::format("{} of {} criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}

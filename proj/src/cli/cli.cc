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

#include "mbcc/cli/cli.h"

#include <cmath>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "mbcc/bounds/chsh.h"
#include "mbcc/compiler/executor.h"
#include "mbcc/errors.h"
#include "mbcc/gadget/ghz_gadget.h"
#include "mbcc/parity/parity_program.h"
#include "mbcc/resources/resource_spec.h"

namespace mbcc::cli {

using ojson = nlohmann::ordered_json;
using resources::BackendKind;

namespace {

enum class Format { Table, Json, Csv };

struct Config {
    Format format = Format::Table;
    std::string output_path;
    bool parallel = false;
    uint64_t seed = 1;
    std::string backend = "statevector";

    int a = 0;
    int b = 0;
    size_t shots = 1;
    std::string resource_path;
    std::string distribution_out;

    std::string netlist_path;
    std::string slot = "ghz";
    std::string bits;
    std::optional<size_t> supply;
    std::optional<uint64_t> shuffle_seed;

    size_t restarts = 20;
    size_t iterations = 500;

    bool flip_sigma_y = false;
};

/// Thrown for bad argument values found after option parsing.
struct ArgumentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ArgumentError("cannot read '" + path + "'");
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text)) {
        throw ArgumentError("cannot write '" + path + "'");
    }
}

std::string num(double v) {
    return fmt::format("{:.12f}", v);
}

BackendKind backend_of(const Config &cfg) {
    try {
        return resources::parse_backend(cfg.backend);
    } catch (const std::invalid_argument &e) {
        throw ArgumentError(e.what());
    }
}

ojson transcript_json(const gadget::GadgetTranscript &t) {
    return ojson::parse(t.to_json());
}

// ---------------------------------------------------------------- gadget

std::string cmd_gadget(const Config &cfg) {
    uint8_t a = static_cast<uint8_t>(cfg.a), b = static_cast<uint8_t>(cfg.b);
    std::vector<std::unique_ptr<resources::Resource>> supply;
    std::string source;
    std::unique_ptr<resources::Resource> reference;
    if (!cfg.resource_path.empty()) {
        resources::ResourceSpec spec = resources::parse_resource_spec(read_file(cfg.resource_path));
        try {
            for (size_t s = 0; s < cfg.shots; s++) {
                supply.push_back(resources::instantiate(spec, derive_seed(cfg.seed, s)));
            }
            reference = resources::instantiate(spec, cfg.seed);
        } catch (const std::invalid_argument &e) {
            throw ParseError(std::string("resource spec: ") + e.what());
        }
        if (reference->num_parties() != 3) {
            throw ResourceError(
                fmt::format("the gadget needs a 3-party resource, spec describes {}", reference->num_parties()));
        }
        source = cfg.resource_path;
    } else {
        BackendKind kind = backend_of(cfg);
        if (kind == BackendKind::PrBox) {
            throw ArgumentError("the GHZ gadget needs a 3-party backend; prbox is 2-party");
        }
        supply = compiler::make_supply(kind, cfg.shots, cfg.seed);
        reference = std::move(compiler::make_supply(kind, 1, cfg.seed)[0]);
        source = std::string(resources::backend_name(kind));
    }
    resources::JointDistribution dist = reference->joint_distribution();
    if (!cfg.distribution_out.empty()) {
        write_file(cfg.distribution_out, dist.to_text());
    }
    double exact = gadget::nand_success_probability(dist, a, b);
    uint8_t expected = !(a && b);

    std::vector<gadget::GadgetTranscript> shots;
    size_t successes = 0;
    for (auto &r : supply) {
        shots.push_back(gadget::nand_via_ghz(*r, a, b));
        successes += shots.back().decoded == expected ? 1 : 0;
    }
    double rate = static_cast<double>(successes) / static_cast<double>(cfg.shots);

    if (cfg.format == Format::Json) {
        ojson j{{"command", "gadget"}, {"seed", cfg.seed}, {"backend", source}, {"a", a}, {"b", b},
                {"nand", expected}};
        ojson arr = ojson::array();
        for (const auto &t : shots) {
            arr.push_back(transcript_json(t));
        }
        j["shots"] = arr;
        j["successes"] = successes;
        j["success_rate"] = rate;
        j["exact"] = exact;
        return j.dump(2) + "\n";
    }
    if (cfg.format == Format::Csv) {
        std::string s = fmt::format("# seed={} backend={} a={} b={}\n", cfg.seed, source, a, b);
        s += "shot,a,b,c,settings,outcomes,decoded\n";
        for (size_t k = 0; k < shots.size(); k++) {
            const auto &t = shots[k];
            s += fmt::format(
                "{},{},{},{},{},{},{}\n", k, t.a, t.b, t.c.value_or(0), t.settings_str(), t.outcomes_str(), t.decoded);
        }
        s += fmt::format("# success_rate={:.6f} exact={}\n", rate, num(exact));
        return s;
    }
    std::string s = fmt::format("seed {}\nbackend {}\ninput a={} b={} c={} nand={}\n", cfg.seed, source, a, b, a ^ b, expected);
    s += "shot  settings  outcomes  decoded\n";
    for (size_t k = 0; k < shots.size(); k++) {
        s += fmt::format(
            "{:<5} {:<9} {:<9} {}\n", k, shots[k].settings_str(), shots[k].outcomes_str(), shots[k].decoded);
    }
    s += fmt::format("success_rate {:.3f} ({}/{})\n", rate, successes, cfg.shots);
    s += fmt::format("exact {}\n", num(exact));
    return s;
}

// ---------------------------------------------------------------- compile / run

compiler::BooleanCircuit load_netlist(const std::string &path) {
    return compiler::parse_netlist(read_file(path));
}

compiler::SlotKind parse_slot(const std::string &name) {
    if (name == "ghz") {
        return compiler::SlotKind::GhzTriple;
    }
    if (name == "prbox") {
        return compiler::SlotKind::PrBox;
    }
    throw ArgumentError("unknown slot kind '" + name + "' (expected ghz or prbox)");
}

ojson budget_json(const compiler::ResourceBudget &b) {
    return ojson{{"ghz_count", b.ghz_count}, {"nand_depth", b.nand_depth},
                 {"parity_instruction_count", b.parity_instruction_count}};
}

std::string cmd_compile(const Config &cfg) {
    auto circuit = load_netlist(cfg.netlist_path);
    auto lowered = compiler::lower_to_nand_xor(circuit);
    auto compiled = compiler::compile(lowered, parse_slot(cfg.slot));
    auto budget = compiler::resource_budget(compiled);
    if (cfg.format == Format::Json) {
        ojson layers = ojson::array();
        for (const auto &seg : compiled.segments) {
            if (const auto *layer = std::get_if<compiler::GadgetLayer>(&seg)) {
                ojson slots = ojson::array();
                for (const auto &slot : layer->slots) {
                    slots.push_back(ojson{{"gate", slot.gate_id}, {"party_inputs", slot.party_inputs},
                                          {"outcome_wires", slot.outcome_wires}, {"output_wire", slot.output_wire}});
                }
                layers.push_back(ojson{{"depth", layer->depth}, {"slots", slots}});
            }
        }
        ojson j{{"command", "compile"}, {"netlist", cfg.netlist_path}, {"slot", cfg.slot},
                {"register_width", compiled.register_width}, {"budget", budget_json(budget)},
                {"lowered", ojson::parse(compiler::to_netlist_json(lowered))}, {"layers", layers}};
        return j.dump(2) + "\n";
    }
    if (cfg.format == Format::Csv) {
        return fmt::format(
            "netlist,slot,register_width,ghz_count,nand_depth,parity_instruction_count\n{},{},{},{},{},{}\n",
            cfg.netlist_path, cfg.slot, compiled.register_width, budget.ghz_count, budget.nand_depth,
            budget.parity_instruction_count);
    }
    return compiled.dump();
}

std::string named_bits(const std::vector<std::string> &names, const BitVector &bits) {
    std::string s;
    for (size_t k = 0; k < names.size(); k++) {
        s += fmt::format("{}{}={}", k ? " " : "", names[k], bits[k]);
    }
    return s;
}

std::string cmd_run(const Config &cfg) {
    auto circuit = load_netlist(cfg.netlist_path);
    BackendKind kind = backend_of(cfg);
    BitVector input;
    try {
        input = BitVector::from_string(cfg.bits);
    } catch (const std::invalid_argument &e) {
        throw ArgumentError(std::string("input bits: ") + e.what());
    }
    if (input.width() != circuit.inputs().size()) {
        throw ArgumentError(fmt::format(
            "netlist has {} inputs, got {} bits", circuit.inputs().size(), input.width()));
    }
    auto compiled = compiler::compile(compiler::lower_to_nand_xor(circuit), compiler::slot_kind_for(kind));
    auto supply = compiler::make_supply(kind, cfg.supply.value_or(compiled.budget), cfg.seed);
    compiler::ExecuteOptions options{cfg.shuffle_seed, cfg.parallel};
    auto report = compiler::execute(compiled, supply, input, options);
    BitVector reference = circuit.evaluate(input);
    auto slot_dist = compiler::make_supply(kind, 1, cfg.seed)[0]->joint_distribution();
    auto outputs = compiler::exact_output_distribution(compiled, slot_dist, input);
    double exact = outputs.contains(reference) ? outputs.at(reference) : 0.0;

    // Gate id of each transcript, in program order.
    std::vector<std::string> gate_ids;
    for (const auto &seg : compiled.segments) {
        if (const auto *layer = std::get_if<compiler::GadgetLayer>(&seg)) {
            for (const auto &slot : layer->slots) {
                gate_ids.push_back(slot.gate_id);
            }
        }
    }

    if (cfg.format == Format::Json) {
        ojson j{{"command", "run"}, {"seed", cfg.seed}, {"backend", resources::backend_name(kind)},
                {"netlist", cfg.netlist_path}, {"budget", budget_json(report.budget)},
                {"input", input.str()}, {"output", report.output.str()}, {"reference", reference.str()},
                {"matches_reference", report.output == reference}, {"exact_success", exact}};
        ojson arr = ojson::array();
        for (size_t k = 0; k < report.transcripts.size(); k++) {
            ojson t = transcript_json(report.transcripts[k]);
            t["gate"] = gate_ids[k];
            arr.push_back(t);
        }
        j["transcripts"] = arr;
        return j.dump(2) + "\n";
    }
    if (cfg.format == Format::Csv) {
        return fmt::format(
            "seed,backend,input,output,reference,ghz_count,nand_depth,parity_instruction_count,exact_success\n"
            "{},{},{},{},{},{},{},{},{}\n",
            cfg.seed, resources::backend_name(kind), input.str(), report.output.str(), reference.str(),
            report.budget.ghz_count, report.budget.nand_depth, report.budget.parity_instruction_count, num(exact));
    }
    std::string s = fmt::format("seed {}\nbackend {}\nnetlist {}\n", cfg.seed, resources::backend_name(kind), cfg.netlist_path);
    s += fmt::format(
        "budget ghz_count={} nand_depth={} parity_instructions={}\n",
        report.budget.ghz_count, report.budget.nand_depth, report.budget.parity_instruction_count);
    s += "input " + named_bits(circuit.inputs(), input) + "\n";
    s += "output " + named_bits(circuit.outputs(), report.output) + "\n";
    s += "reference " + named_bits(circuit.outputs(), reference) + "\n";
    s += fmt::format("exact_success {}\n", num(exact));
    for (size_t k = 0; k < report.transcripts.size(); k++) {
        const auto &t = report.transcripts[k];
        s += fmt::format(
            "slot {} a={} b={} settings {} outcomes {} decoded {}\n",
            gate_ids[k], t.a, t.b, t.settings_str(), t.outcomes_str(), t.decoded);
    }
    return s;
}

// ---------------------------------------------------------------- bounds

struct BoundsRow {
    std::string name;
    std::array<double, 4> p;
    double average;
};

std::string cmd_bounds(const Config &cfg) {
    if (cfg.restarts == 0) {
        throw ArgumentError("--restarts must be at least 1");
    }
    auto lhv = bounds::lhv_maximum();
    auto lhv_dist = resources::make_lhv({{1.0, lhv.witness}}, cfg.seed).joint_distribution();
    bounds::OptimizeOptions options{cfg.seed, cfg.restarts, cfg.iterations, bounds::Ansatz::General, cfg.parallel, false};
    auto quantum = bounds::quantum_optimize(options);
    auto tsirelson = bounds::check_tsirelson(quantum.strategy);
    auto ghz = compiler::make_supply(BackendKind::StateVector, 1, cfg.seed)[0]->joint_distribution();

    std::vector<BoundsRow> rows;
    auto add = [&](std::string name, const bounds::GameScore &g) { rows.push_back({std::move(name), g.p, g.average}); };
    add("lhv", bounds::chsh_score(lhv_dist));
    add("quantum", bounds::chsh_score(quantum.strategy));
    rows.push_back({"tsirelson", {bounds::kTsirelsonBound, bounds::kTsirelsonBound, bounds::kTsirelsonBound,
                                  bounds::kTsirelsonBound}, bounds::kTsirelsonBound});
    add("pr_box", bounds::chsh_score(bounds::pr_box_game_distribution()));
    std::array<double, 4> ghz_p{};
    for (uint8_t a = 0; a < 2; a++) {
        for (uint8_t b = 0; b < 2; b++) {
            ghz_p[2 * a + b] = gadget::nand_success_probability(ghz, a, b);
        }
    }
    rows.push_back({"ghz_triple", ghz_p, gadget::gadget_score(ghz)});

    double lhv_margin = bounds::kTsirelsonBound - lhv.score;
    if (cfg.format == Format::Json) {
        ojson j{{"command", "bounds"}, {"seed", cfg.seed}, {"restarts", cfg.restarts}, {"iterations", cfg.iterations}};
        ojson arr = ojson::array();
        for (const auto &r : rows) {
            arr.push_back(ojson{{"resource", r.name}, {"p", r.p}, {"average", r.average}});
        }
        j["rows"] = arr;
        j["lhv_strategies_enumerated"] = lhv.strategies_enumerated;
        j["quantum_margin"] = tsirelson.margin;
        j["quantum_within_bound"] = tsirelson.ok;
        j["lhv_margin"] = lhv_margin;
        j["restart_scores"] = quantum.restart_scores;
        j["strategy"] = quantum.strategy.str();
        return j.dump(2) + "\n";
    }
    if (cfg.format == Format::Csv) {
        std::string s = "resource,p00,p01,p10,p11,average\n";
        for (const auto &r : rows) {
            s += fmt::format("{},{},{},{},{},{}\n", r.name, num(r.p[0]), num(r.p[1]), num(r.p[2]), num(r.p[3]), num(r.average));
        }
        return s;
    }
    std::string s = fmt::format("seed {}\nrestarts {} iterations {}\n", cfg.seed, cfg.restarts, cfg.iterations);
    s += fmt::format(
        "{:<12} {:<15} {:<15} {:<15} {:<15} {}\n", "resource", "P(0,0)", "P(0,1)", "P(1,0)", "P(1,1)", "average");
    for (const auto &r : rows) {
        s += fmt::format(
            "{:<12} {:<15} {:<15} {:<15} {:<15} {}\n", r.name, num(r.p[0]), num(r.p[1]), num(r.p[2]), num(r.p[3]),
            num(r.average));
    }
    s += fmt::format("lhv strategies enumerated {}\n", lhv.strategies_enumerated);
    s += fmt::format("quantum margin to tsirelson {:.3e} ({})\n", tsirelson.margin, tsirelson.ok ? "within bound" : "VIOLATION");
    s += fmt::format("lhv margin to tsirelson {}\n", num(lhv_margin));
    s += "quantum strategy\n" + quantum.strategy.str() + "\n";
    return s;
}

// ---------------------------------------------------------------- verify

struct Check {
    std::string name;
    bool passed;
    std::string detail;
};

std::vector<Check> run_checks(const Config &cfg) {
    std::vector<Check> checks;

    auto eq = gadget::verify_stabilizer_equations(resources::make_ghz_state(), cfg.flip_sigma_y ? 1u : 0u);
    const std::array<double, 4> expected{-1, -1, -1, 1};
    bool eq_ok = true;
    for (size_t k = 0; k < 4; k++) {
        eq_ok = eq_ok && std::abs(eq[k] - expected[k]) <= 1e-12;
    }
    checks.push_back({"eigenvalues", eq_ok,
                      fmt::format("XXX={:+.12f} XYY={:+.12f} YXY={:+.12f} YYX={:+.12f}", eq[0], eq[1], eq[2], eq[3])});

    auto sv = resources::make_ghz(cfg.seed).joint_distribution();
    auto st = resources::make_ghz_tableau(cfg.seed).joint_distribution();
    for (const auto &[name, dist] : {std::pair{"ghz_nand_statevector", &sv}, std::pair{"ghz_nand_stabilizer", &st}}) {
        double worst = 0;
        for (uint8_t a = 0; a < 2; a++) {
            for (uint8_t b = 0; b < 2; b++) {
                worst = std::max(worst, std::abs(1.0 - gadget::nand_success_probability(*dist, a, b)));
            }
        }
        checks.push_back({name, worst <= 1e-12, fmt::format("max deviation from 1: {:.3e}", worst)});
    }

    double diff = sv.max_abs_difference(st);
    checks.push_back({"backend_equivalence", diff <= 1e-12, fmt::format("max |statevector - stabilizer| {:.3e}", diff)});

    std::vector<std::pair<std::string, resources::JointDistribution>> shipped;
    shipped.emplace_back("statevector", sv);
    shipped.emplace_back("stabilizer", st);
    shipped.emplace_back("lhv", compiler::make_supply(BackendKind::Lhv, 1, cfg.seed)[0]->joint_distribution());
    shipped.emplace_back("prbox", resources::make_pr_box(cfg.seed).joint_distribution());
    shipped.emplace_back("chsh_optimal", bounds::optimal_quantum_strategy().to_distribution());
    for (const auto &[name, dist] : shipped) {
        auto r = resources::check_nonsignalling(dist);
        checks.push_back({"nonsignalling_" + name, r.passed, fmt::format("max violation {:.3e}", r.max_violation)});
    }
    resources::JointDistribution signalling(2);
    for (uint64_t x = 0; x < 4; x++) {
        signalling.at(x, (x >> 1) & 1) = 1.0;  // party 1 reports party 0's input
    }
    auto sig = resources::check_nonsignalling(signalling);
    checks.push_back({"signalling_rejected", !sig.passed, fmt::format("max violation {:.3e}", sig.max_violation)});

    auto lhv = bounds::lhv_maximum();
    checks.push_back({"lhv_bound", lhv.score == 0.75 && lhv.strategies_enumerated == 16,
                      fmt::format("max {} over {} strategies", lhv.score, lhv.strategies_enumerated)});

    auto t = bounds::check_tsirelson(bounds::optimal_quantum_strategy());
    checks.push_back({"tsirelson_tight", t.ok && std::abs(t.margin) <= 1e-9,
                      fmt::format("score {} margin {:.3e}", num(t.score), t.margin)});

    double pr = bounds::chsh_score(bounds::pr_box_game_distribution()).average;
    checks.push_back({"prbox_score", pr == 1.0, fmt::format("score {}", num(pr))});

    bool has_xor = false, has_nand = false;
    auto fns = parity::enumerate_affine_functions(2);
    for (const auto &f : fns) {
        has_xor = has_xor || f.truth_table == std::vector<uint8_t>{0, 1, 1, 0};
        has_nand = has_nand || f.truth_table == std::vector<uint8_t>{1, 1, 1, 0};
    }
    checks.push_back({"parity_affine_only", fns.size() == 8 && has_xor && !has_nand,
                      fmt::format("{} affine functions, xor {}, nand {}", fns.size(), has_xor ? "present" : "absent",
                                  has_nand ? "present" : "absent")});
    return checks;
}

std::string cmd_verify(const Config &cfg, bool &all_passed) {
    auto checks = run_checks(cfg);
    all_passed = true;
    for (const auto &c : checks) {
        all_passed = all_passed && c.passed;
    }
    if (cfg.format == Format::Json) {
        ojson arr = ojson::array();
        for (const auto &c : checks) {
            arr.push_back(ojson{{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        }
        ojson j{{"command", "verify"}, {"seed", cfg.seed}, {"flip_sigma_y", cfg.flip_sigma_y}, {"checks", arr},
                {"passed", all_passed}};
        return j.dump(2) + "\n";
    }
    if (cfg.format == Format::Csv) {
        std::string s = "check,status,detail\n";
        for (const auto &c : checks) {
            s += fmt::format("{},{},\"{}\"\n", c.name, c.passed ? "PASS" : "FAIL", c.detail);
        }
        return s;
    }
    std::string s = fmt::format("seed {}\n", cfg.seed);
    if (cfg.flip_sigma_y) {
        s += "sigma_y flipped on party 0\n";
    }
    for (const auto &c : checks) {
        s += fmt::format("{:<26} {}  {}\n", c.name, c.passed ? "PASS" : "FAIL", c.detail);
    }
    s += all_passed ? "all checks passed\n" : "some checks FAILED\n";
    return s;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Config cfg;
    CLI::App app{"Measurement-based classical computation: GHZ gadgets, parity programs and Bell bounds", "mbcc"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "table";
    app.add_option("--format", format, "Output format: table, json or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->envname("MBCC_FORMAT");
    app.add_option("-o,--output", cfg.output_path, "Write the report to a file");
    app.add_flag("--parallel", cfg.parallel, "Run independent work concurrently (same output)");

    auto add_seed = [&](CLI::App *sub) {
        sub->add_option("--seed", cfg.seed, "Random seed")->envname("MBCC_SEED");
    };
    auto add_backend = [&](CLI::App *sub) {
        sub->add_option("--backend", cfg.backend, "statevector, stabilizer, lhv or prbox")->envname("MBCC_BACKEND");
    };

    auto *gadget_cmd = app.add_subcommand("gadget", "Evaluate NAND(a, b) on GHZ triples");
    gadget_cmd->add_option("a", cfg.a, "First input bit")->required()->check(CLI::Range(0, 1));
    gadget_cmd->add_option("b", cfg.b, "Second input bit")->required()->check(CLI::Range(0, 1));
    add_backend(gadget_cmd);
    add_seed(gadget_cmd);
    gadget_cmd->add_option("--shots", cfg.shots, "Number of fresh resources to consume")
        ->check(CLI::PositiveNumber)
        ->envname("MBCC_SHOTS");
    gadget_cmd->add_option("--resource", cfg.resource_path, "Resource spec (JSON) instead of --backend");
    gadget_cmd->add_option("--distribution-out", cfg.distribution_out, "Write the exact joint distribution");

    auto *compile_cmd = app.add_subcommand("compile", "Compile a netlist into parity segments and gadget layers");
    compile_cmd->add_option("netlist", cfg.netlist_path, "Netlist (JSON)")->required();
    compile_cmd->add_option("--slot", cfg.slot, "Slot resource: ghz or prbox");

    auto *run_cmd = app.add_subcommand("run", "Compile and execute a netlist on one input");
    run_cmd->add_option("netlist", cfg.netlist_path, "Netlist (JSON)")->required();
    run_cmd->add_option("bits", cfg.bits, "Input bits, first input first")->required();
    add_backend(run_cmd);
    add_seed(run_cmd);
    run_cmd->add_option("--supply", cfg.supply, "Number of resources to provide (default: the budget)");
    run_cmd->add_option("--shuffle", cfg.shuffle_seed, "Invoke the slots of each layer in a seeded random order");

    auto *bounds_cmd = app.add_subcommand("bounds", "Compare LHV, quantum, PR-box and GHZ-triple scores");
    add_seed(bounds_cmd);
    bounds_cmd->add_option("--restarts", cfg.restarts, "Optimizer restarts")->envname("MBCC_RESTARTS");
    bounds_cmd->add_option("--iterations", cfg.iterations, "Line searches per restart");

    auto *verify_cmd = app.add_subcommand("verify", "Run the invariant checks");
    add_seed(verify_cmd);
    verify_cmd->add_flag("--flip-sigma-y", cfg.flip_sigma_y, "Use -Y on party 0 (canary: eigenvalue checks must fail)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kArgumentError;
    }
    cfg.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Table;

    int code = kOk;
    std::string report;
    try {
        if (gadget_cmd->parsed()) {
            report = cmd_gadget(cfg);
        } else if (compile_cmd->parsed()) {
            report = cmd_compile(cfg);
        } else if (run_cmd->parsed()) {
            report = cmd_run(cfg);
        } else if (bounds_cmd->parsed()) {
            report = cmd_bounds(cfg);
        } else {
            bool passed = false;
            report = cmd_verify(cfg, passed);
            code = passed ? kOk : kInvariantFailure;
        }
        if (cfg.output_path.empty()) {
            out << report;
        } else {
            write_file(cfg.output_path, report);
        }
    } catch (const ArgumentError &e) {
        err << "error: " << e.what() << "\n";
        return kArgumentError;
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const ResourceError &e) {
        err << "resource error: " << e.what() << "\n";
        return kResourceError;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kOtherError;
    }
    if (code == kInvariantFailure) {
        err << "verify: one or more checks failed\n";
    }
    return code;
}

}  // namespace mbcc::cli

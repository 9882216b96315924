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

#include "mbcc/bounds/chsh.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

#include "mbcc/gadget/ghz_gadget.h"

namespace mbcc::bounds {

using cd = std::complex<double>;
using Mat2 = std::array<cd, 4>;  // row-major
using resources::JointDistribution;

namespace {

constexpr double kPi = std::numbers::pi;

Mat2 observable(const BlochDirection &d) {
    double c = std::cos(d.theta), s = std::sin(d.theta);
    cd e = std::polar(1.0, d.phi);
    return {c, std::conj(e) * s, e * s, -c};
}

Mat2 d_observable(const BlochDirection &d, size_t which) {
    double c = std::cos(d.theta), s = std::sin(d.theta);
    cd e = std::polar(1.0, d.phi);
    if (which == 0) {
        return {-s, std::conj(e) * c, e * c, s};
    }
    cd i(0, 1);
    return {0.0, -i * std::conj(e) * s, i * e * s, 0.0};
}

/// (I + sign * N) / 2.
Mat2 projector(const Mat2 &n, int s) {
    double sign = s;
    return {(1.0 + sign * n[0]) / 2.0, sign * n[1] / 2.0, sign * n[2] / 2.0, (1.0 + sign * n[3]) / 2.0};
}

/// <psi| A (x) B |psi>, party 0 on the high qubit.
double expectation(const std::array<cd, 4> &psi, const Mat2 &a, const Mat2 &b) {
    cd total = 0;
    for (size_t i0 = 0; i0 < 2; i0++) {
        for (size_t i1 = 0; i1 < 2; i1++) {
            cd row = 0;
            for (size_t j0 = 0; j0 < 2; j0++) {
                for (size_t j1 = 0; j1 < 2; j1++) {
                    row += a[2 * i0 + j0] * b[2 * i1 + j1] * psi[2 * j0 + j1];
                }
            }
            total += std::conj(psi[2 * i0 + i1]) * row;
        }
    }
    return total.real();
}

double average_of(const std::array<double, 4> &p) {
    return (p[0] + p[1] + p[2] + p[3]) / 4.0;
}

/// Score straight from the correlators; avoids building a distribution in the optimizer loop.
double fast_average(const CHSHStrategy &s, const GameTable &game) {
    Mat2 obs[2][2];
    for (size_t p = 0; p < 2; p++) {
        for (size_t x = 0; x < 2; x++) {
            obs[p][x] = observable(s.measurements[p][x]);
        }
    }
    double norm = 0;
    for (const auto &amp : s.state) {
        norm += std::norm(amp);
    }
    double total = 0;
    for (size_t a = 0; a < 2; a++) {
        for (size_t b = 0; b < 2; b++) {
            double corr = expectation(s.state, obs[0][a], obs[1][b]);
            total += (norm + (game[2 * a + b] ? -corr : corr)) / 2.0;
        }
    }
    return total / 4.0;
}

}  // namespace

void CHSHStrategy::validate() const {
    double norm = 0;
    for (const auto &amp : state) {
        if (!std::isfinite(amp.real()) || !std::isfinite(amp.imag())) {
            throw std::invalid_argument("strategy state has a non-finite amplitude");
        }
        norm += std::norm(amp);
    }
    if (std::abs(norm - 1.0) > 1e-12) {
        throw std::invalid_argument(fmt::format("strategy state has norm^2 {:.17g}, expected 1", norm));
    }
    for (const auto &party : measurements) {
        for (const auto &d : party) {
            if (!std::isfinite(d.theta) || !std::isfinite(d.phi)) {
                throw std::invalid_argument("strategy has a non-finite measurement angle");
            }
        }
    }
}

JointDistribution CHSHStrategy::to_distribution() const {
    validate();
    JointDistribution dist(2);
    for (uint64_t a = 0; a < 2; a++) {
        for (uint64_t b = 0; b < 2; b++) {
            Mat2 na = observable(measurements[0][a]);
            Mat2 nb = observable(measurements[1][b]);
            for (uint64_t m1 = 0; m1 < 2; m1++) {
                for (uint64_t m2 = 0; m2 < 2; m2++) {
                    double p = expectation(state, projector(na, m1 ? -1 : 1), projector(nb, m2 ? -1 : 1));
                    dist.at((a << 1) | b, (m1 << 1) | m2) = std::max(p, 0.0);
                }
            }
        }
    }
    return dist;
}

std::string CHSHStrategy::str() const {
    std::string s = "state";
    for (const auto &amp : state) {
        s += fmt::format(" {:+.6f}{:+.6f}i", amp.real(), amp.imag());
    }
    for (size_t p = 0; p < 2; p++) {
        for (size_t x = 0; x < 2; x++) {
            s += fmt::format(
                "\nparty {} input {} theta {:+.6f} phi {:+.6f}", p, x, measurements[p][x].theta, measurements[p][x].phi);
        }
    }
    return s;
}

std::string GameScore::str() const {
    return fmt::format(
        "P(0,0)={:.12f} P(0,1)={:.12f} P(1,0)={:.12f} P(1,1)={:.12f} average={:.12f}", p[0], p[1], p[2], p[3], average);
}

double success_probability(const JointDistribution &dist, uint8_t a, uint8_t b, const GameTable &game) {
    if (dist.num_parties() != 2) {
        throw std::invalid_argument("the NAND game needs a 2-party distribution");
    }
    if (a > 1 || b > 1) {
        throw std::invalid_argument("game inputs must be bits");
    }
    double total = 0;
    for (uint64_t m = 0; m < 4; m++) {
        uint8_t parity = ((m >> 1) ^ m) & 1;
        if (parity == game[2 * a + b]) {
            total += dist.at((uint64_t{a} << 1) | b, m);
        }
    }
    return total;
}

GameScore chsh_score(const JointDistribution &dist, const GameTable &game) {
    dist.validate();
    GameScore score{};
    for (uint8_t a = 0; a < 2; a++) {
        for (uint8_t b = 0; b < 2; b++) {
            score.p[2 * a + b] = success_probability(dist, a, b, game);
        }
    }
    score.average = average_of(score.p);
    return score;
}

GameScore chsh_score(const CHSHStrategy &strategy, const GameTable &game) {
    return chsh_score(strategy.to_distribution(), game);
}

CHSHStrategy optimal_quantum_strategy() {
    double r = 1 / std::numbers::sqrt2;
    CHSHStrategy s;
    s.state = {0.0, r, -r, 0.0};
    s.measurements[0] = {BlochDirection{0.0, 0.0}, BlochDirection{kPi / 2, 0.0}};
    s.measurements[1] = {BlochDirection{kPi / 4, 0.0}, BlochDirection{kPi / 4, kPi}};
    return s;
}

JointDistribution pr_box_game_distribution() {
    return resources::make_pr_box(0, resources::PrBoxConvention::And).joint_distribution().with_outcome_flipped(0);
}

LhvMaximum lhv_maximum(const GameTable &game) {
    auto strategies = resources::all_deterministic_strategies(2);
    LhvMaximum best{-1.0, {}, strategies.size()};
    for (const auto &s : strategies) {
        size_t wins = 0;
        for (uint64_t x = 0; x < 4; x++) {
            uint64_t m = s.outcomes_for(x);
            wins += (((m >> 1) ^ m) & 1) == game[x] ? 1 : 0;
        }
        double score = wins / 4.0;
        if (score > best.score) {
            best.score = score;
            best.witness = s;
        }
    }
    return best;
}

GameTable relabel_game(const GameTable &game, unsigned relabeling) {
    unsigned flip_a_in = (relabeling >> 3) & 1, flip_a_out = (relabeling >> 2) & 1;
    unsigned flip_b_in = (relabeling >> 1) & 1, flip_b_out = relabeling & 1;
    GameTable out{};
    for (unsigned a = 0; a < 2; a++) {
        for (unsigned b = 0; b < 2; b++) {
            out[2 * a + b] = game[2 * (a ^ flip_a_in) + (b ^ flip_b_in)] ^ flip_a_out ^ flip_b_out;
        }
    }
    return out;
}

std::array<double, 16> lhv_relabeling_audit(const GameTable &game) {
    std::array<double, 16> scores{};
    for (unsigned k = 0; k < 16; k++) {
        scores[k] = lhv_maximum(relabel_game(game, k)).score;
    }
    return scores;
}

CHSHStrategy classical_embedding(const resources::DeterministicStrategy &strategy) {
    if (strategy.responses.size() != 2) {
        throw std::invalid_argument("classical embedding needs a 2-party strategy");
    }
    CHSHStrategy s;
    s.state = {1.0, 0.0, 0.0, 0.0};
    for (size_t p = 0; p < 2; p++) {
        for (size_t x = 0; x < 2; x++) {
            s.measurements[p][x] = {strategy.responses[p][x] ? kPi : 0.0, 0.0};
        }
    }
    return s;
}

size_t parameter_count(Ansatz ansatz) {
    return ansatz == Ansatz::General ? 14 : 12;
}

CHSHStrategy strategy_from_parameters(Ansatz ansatz, const std::vector<double> &x) {
    if (x.size() != parameter_count(ansatz)) {
        throw std::invalid_argument("wrong number of strategy parameters");
    }
    CHSHStrategy s;
    size_t k;
    if (ansatz == Ansatz::General) {
        double r0 = std::cos(x[0]);
        double r1 = std::sin(x[0]) * std::cos(x[1]);
        double r2 = std::sin(x[0]) * std::sin(x[1]) * std::cos(x[2]);
        double r3 = std::sin(x[0]) * std::sin(x[1]) * std::sin(x[2]);
        s.state = {r0, std::polar(r1, x[3]), std::polar(r2, x[4]), std::polar(r3, x[5])};
        k = 6;
    } else {
        cd u0 = std::cos(x[0] / 2), u1 = std::polar(std::sin(x[0] / 2), x[1]);
        cd v0 = std::cos(x[2] / 2), v1 = std::polar(std::sin(x[2] / 2), x[3]);
        s.state = {u0 * v0, u0 * v1, u1 * v0, u1 * v1};
        k = 4;
    }
    for (size_t p = 0; p < 2; p++) {
        for (size_t in = 0; in < 2; in++) {
            s.measurements[p][in] = {x[k], x[k + 1]};
            k += 2;
        }
    }
    return s;
}

namespace {

struct RestartResult {
    double score;
    std::vector<double> params;
    size_t evaluations;
};

RestartResult run_restart(const OptimizeOptions &options, size_t restart) {
    size_t n = parameter_count(options.ansatz);
    Rng rng(derive_seed(options.seed, restart));
    std::vector<double> x(n, 0.0);
    if (!options.identity_start) {
        for (auto &v : x) {
            v = 2 * kPi * rng.uniform();
        }
    }
    size_t evaluations = 0;
    auto f = [&](const std::vector<double> &p) {
        evaluations++;
        return fast_average(strategy_from_parameters(options.ansatz, p), kNandGame);
    };
    double fx = f(x);
    const double inv_phi = (std::sqrt(5.0) - 1) / 2;
    double sweep_start = fx;
    for (size_t it = 0; it < options.iterations; it++) {
        size_t i = it % n;
        if (i == 0 && it > 0) {
            if (fx - sweep_start < 1e-15) {
                break;
            }
            sweep_start = fx;
        }
        auto along = [&](double t) {
            std::vector<double> p = x;
            p[i] = t;
            return f(p);
        };
        double lo = x[i] - kPi, hi = x[i] + kPi;
        double c = hi - inv_phi * (hi - lo), d = lo + inv_phi * (hi - lo);
        double fc = along(c), fd = along(d);
        while (hi - lo > 1e-9) {
            if (fc > fd) {
                hi = d;
                d = c;
                fd = fc;
                c = hi - inv_phi * (hi - lo);
                fc = along(c);
            } else {
                lo = c;
                c = d;
                fc = fd;
                d = lo + inv_phi * (hi - lo);
                fd = along(d);
            }
        }
        double t = (lo + hi) / 2;
        double ft = along(t);
        if (ft > fx) {
            x[i] = t;
            fx = ft;
        }
    }
    return {fx, x, evaluations};
}

}  // namespace

OptimizeResult quantum_optimize(const OptimizeOptions &options) {
    if (options.restarts == 0) {
        throw std::invalid_argument("quantum_optimize needs at least one restart");
    }
    std::vector<RestartResult> results(options.restarts);
    if (options.parallel) {
        std::vector<std::future<RestartResult>> futures;
        for (size_t r = 0; r < options.restarts; r++) {
            futures.push_back(std::async(std::launch::async, run_restart, std::cref(options), r));
        }
        for (size_t r = 0; r < options.restarts; r++) {
            results[r] = futures[r].get();
        }
    } else {
        for (size_t r = 0; r < options.restarts; r++) {
            results[r] = run_restart(options, r);
        }
    }
    OptimizeResult out{-1.0, {}, {}, 0};
    size_t best = 0;
    for (size_t r = 0; r < results.size(); r++) {
        out.restart_scores.push_back(results[r].score);
        out.evaluations += results[r].evaluations;
        if (results[r].score > results[best].score) {
            best = r;
        }
    }
    out.strategy = strategy_from_parameters(options.ansatz, results[best].params);
    out.score = chsh_score(out.strategy).average;
    return out;
}

double analytic_angle_derivative(const CHSHStrategy &strategy, size_t party, size_t input, size_t which) {
    if (party > 1 || input > 1 || which > 1) {
        throw std::out_of_range("no such measurement angle");
    }
    double total = 0;
    for (size_t other = 0; other < 2; other++) {
        size_t a = party == 0 ? input : other;
        size_t b = party == 0 ? other : input;
        Mat2 d = d_observable(strategy.measurements[party][input], which);
        Mat2 o = observable(strategy.measurements[1 - party][other]);
        double corr = party == 0 ? expectation(strategy.state, d, o) : expectation(strategy.state, o, d);
        total += (kNandGame[2 * a + b] ? -corr : corr) / 2.0;
    }
    return total / 4.0;
}

double finite_difference_derivative(
    const CHSHStrategy &strategy, size_t party, size_t input, size_t which, double h) {
    auto shifted = [&](double delta) {
        CHSHStrategy s = strategy;
        auto &d = s.measurements.at(party).at(input);
        (which == 0 ? d.theta : d.phi) += delta;
        return chsh_score(s).average;
    };
    return (shifted(h) - shifted(-h)) / (2 * h);
}

TsirelsonReport check_tsirelson(const CHSHStrategy &strategy) {
    double score = chsh_score(strategy).average;
    return {score, kTsirelsonBound, kTsirelsonBound - score, score <= kTsirelsonBound + 1e-9};
}

CHSHStrategy random_strategy(Rng &rng) {
    CHSHStrategy s;
    double norm = 0;
    for (auto &amp : s.state) {
        amp = {rng.normal(), rng.normal()};
        norm += std::norm(amp);
    }
    for (auto &amp : s.state) {
        amp /= std::sqrt(norm);
    }
    for (auto &party : s.measurements) {
        for (auto &d : party) {
            d.theta = std::acos(2 * rng.uniform() - 1);
            d.phi = 2 * kPi * rng.uniform();
        }
    }
    return s;
}

NandFeasibility deterministic_nand_feasibility(size_t n_parties, NandResource resource, const OptimizeOptions &options) {
    NandFeasibility out{n_parties, resource, 0.0, false, false, ""};
    if (n_parties == 2 && resource == NandResource::Quantum) {
        auto best = quantum_optimize(options);
        out.max_score = best.score;
        out.witness = best.strategy.str();
    } else if (n_parties == 2 && resource == NandResource::PrBox) {
        out.max_score = chsh_score(pr_box_game_distribution()).average;
        out.witness = "PR box, m1 ^ m2 = NAND(a, b)";
    } else if (n_parties == 3 && resource == NandResource::Quantum) {
        out.max_score = gadget::gadget_score(resources::BackendKind::StateVector);
        out.witness = "GHZ (|001> - |110>)/sqrt2, inputs (a, b, a^b), settings 0 -> X, 1 -> Y";
    } else {
        throw std::invalid_argument(fmt::format("no NAND feasibility check for {} parties with this resource", n_parties));
    }
    out.deterministic = out.max_score >= 1.0 - 1e-12;
    out.super_quantum = n_parties == 2 && out.max_score > kTsirelsonBound + 1e-9;
    return out;
}

}  // namespace mbcc::bounds

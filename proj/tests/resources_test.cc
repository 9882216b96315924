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

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "mbcc/errors.h"
#include "mbcc/resources/joint_distribution.h"
#include "mbcc/resources/resource.h"
#include "mbcc/resources/resource_spec.h"
#include "mbcc/resources/state_vector.h"
#include "mbcc/resources/tableau.h"
#include "oracle.h"

using namespace mbcc;
using namespace mbcc::resources;

namespace {

const char *kGhzCircuitSpec = R"({
  "backend": "stabilizer",
  "parties": 3,
  "circuit": [["H", 0], ["CNOT", 0, 1], ["CNOT", 1, 2], ["X", 2], ["Z", 0]]
})";

PauliString random_pauli(size_t n, std::mt19937_64 &rng) {
    PauliString p;
    p.negative = rng() & 1;
    for (size_t k = 0; k < n; k++) {
        p.ops.push_back(static_cast<Pauli>(rng() % 4));
    }
    return p;
}

std::string ops_for_inputs(uint64_t x, size_t n) {
    std::string ops;
    for (size_t p = 0; p < n; p++) {
        ops += ((x >> (n - 1 - p)) & 1) ? 'Y' : 'X';
    }
    return ops;
}

}  // namespace

TEST(Pauli, parse_and_commutation) {
    auto p = PauliString::parse("-XYZ_");
    ASSERT_TRUE(p.negative);
    ASSERT_EQ(p.str(), "-XYZI");
    ASSERT_TRUE(PauliString::parse("XX").commutes_with(PauliString::parse("ZZ")));
    ASSERT_FALSE(PauliString::parse("XI").commutes_with(PauliString::parse("ZI")));
    ASSERT_EQ(PauliString::single(3, 1, Pauli::Y).str(), "+IYI");
    ASSERT_THROW(PauliString::parse("XQ"), ParseError);
}

TEST(StateVector, ghz_matches_written_out_vector) {
    auto ghz = make_ghz_state();
    auto expected = oracle::ghz_vector();
    for (size_t k = 0; k < 8; k++) {
        ASSERT_NEAR(std::abs(ghz.amplitude(k) - expected[k]), 0.0, 1e-15);
    }
    ASSERT_NEAR(ghz.norm_squared(), 1.0, 1e-15);
}

TEST(StateVector, expectations_match_dense_oracle) {
    auto ghz = make_ghz_state();
    for (const char *label : {"+ZZI", "-IZZ", "-XXX", "+XXX", "+XYY", "+YXY", "+YYX", "+ZIZ", "+XZY"}) {
        double want = oracle::expectation(oracle::ghz_vector(), oracle::pauli_product(label));
        ASSERT_NEAR(ghz.expectation(PauliString::parse(label)), want, 1e-12) << label;
    }
    ASSERT_NEAR(ghz.expectation(PauliString::parse("+ZZI")), 1.0, 1e-12);
    ASSERT_NEAR(ghz.expectation(PauliString::parse("-IZZ")), 1.0, 1e-12);
    ASSERT_NEAR(ghz.expectation(PauliString::parse("-XXX")), 1.0, 1e-12);
}

TEST(StateVector, single_qubit_measurement) {
    auto plus = StateVector::basis("0");
    plus.h(0);
    auto m = measure_pauli_statevector(plus, 0, Pauli::X);
    ASSERT_NEAR(m.prob_plus, 1.0, 1e-12);
    ASSERT_FALSE(m.post_minus.has_value());
    auto z = measure_pauli_statevector(plus, 0, Pauli::Z);
    ASSERT_NEAR(z.prob_plus, 0.5, 1e-12);
    ASSERT_NEAR(z.post_minus->amplitude(1).real(), 1.0, 1e-12);
    auto bad = StateVector::from_amplitudes({1.0, 1.0});
    ASSERT_THROW(measure_pauli_statevector(bad, 0, Pauli::Z), std::invalid_argument);
}

TEST(Tableau, ghz_generators) {
    auto t = make_ghz_tableau_state();
    ASSERT_EQ(t.peek(PauliString::parse("+ZZI")), std::optional<uint8_t>(0));
    ASSERT_EQ(t.peek(PauliString::parse("+IZZ")), std::optional<uint8_t>(1));
    ASSERT_EQ(t.peek(PauliString::parse("+XXX")), std::optional<uint8_t>(1));
    ASSERT_EQ(t.peek(PauliString::parse("+XYY")), std::optional<uint8_t>(1));
    ASSERT_EQ(t.peek(PauliString::parse("+YYX")), std::optional<uint8_t>(0));
    ASSERT_EQ(t.peek(PauliString::parse("+XII")), std::nullopt);
}

TEST(Tableau, agrees_with_state_vector_on_random_clifford_circuits) {
    std::mt19937_64 rng(101);
    Rng unused(0);
    for (int trial = 0; trial < 200; trial++) {
        size_t n = 1 + rng() % 6;
        StateVector sv(n);
        Tableau tab(n);
        for (int g = 0; g < 30; g++) {
            size_t q = rng() % n;
            switch (rng() % 6) {
                case 0: sv.h(q); tab.h(q); break;
                case 1: sv.s(q); tab.s(q); break;
                case 2: sv.x(q); tab.x(q); break;
                case 3: sv.y(q); tab.y(q); break;
                case 4: sv.z(q); tab.z(q); break;
                default:
                    if (n > 1) {
                        size_t t = (q + 1 + rng() % (n - 1)) % n;
                        sv.cnot(q, t);
                        tab.cnot(q, t);
                    }
            }
        }
        for (int m = 0; m < 5; m++) {
            auto p = random_pauli(n, rng);
            double ev = sv.expectation(p);
            auto peek = tab.peek(p);
            if (peek) {
                ASSERT_NEAR(ev, *peek ? -1.0 : 1.0, 1e-12);
            } else {
                ASSERT_NEAR(ev, 0.0, 1e-12);
            }
            auto meas = measure_pauli_statevector(sv, p);
            uint8_t bit = rng() & 1;
            if (peek) {
                bit = *peek;
            }
            auto out = tab.measure(p, &unused, bit);
            ASSERT_EQ(out.bit, bit);
            ASSERT_EQ(out.deterministic, peek.has_value());
            ASSERT_NEAR(bit ? meas.prob_minus : meas.prob_plus, peek ? 1.0 : 0.5, 1e-12);
            sv = bit ? *meas.post_minus : *meas.post_plus;
        }
    }
}

TEST(JointDistribution, ghz_backends_match_born_rule_oracle) {
    auto sv = make_ghz(1).joint_distribution();
    auto st = make_ghz_tableau(1).joint_distribution();
    for (uint64_t x = 0; x < 8; x++) {
        for (uint64_t m = 0; m < 8; m++) {
            std::vector<int> bits{int(m >> 2) & 1, int(m >> 1) & 1, int(m) & 1};
            double want = oracle::born(oracle::ghz_vector(), ops_for_inputs(x, 3), bits);
            ASSERT_NEAR(sv.at(x, m), want, 1e-12);
            ASSERT_NEAR(st.at(x, m), want, 1e-12);
        }
    }
    ASSERT_LE(sv.max_abs_difference(st), 1e-12);
}

TEST(JointDistribution, text_round_trip_and_errors) {
    auto d = make_ghz(0).joint_distribution();
    auto back = JointDistribution::parse(d.to_text());
    ASSERT_LE(back.max_abs_difference(d), 1e-14);
    ASSERT_THROW(JointDistribution::parse("partiez 2\n"), ParseError);
    ASSERT_THROW(JointDistribution::parse("parties 1\n0|0 0.5\n0|0 0.5\n"), ParseError);
    JointDistribution bad(1);
    bad.at(0, 0) = 0.7;
    bad.at(1, 1) = 1.0;
    ASSERT_THROW(bad.validate(), std::invalid_argument);
}

TEST(JointDistribution, flipping_an_outcome_permutes_rows) {
    auto d = make_pr_box(0).joint_distribution();
    auto f = d.with_outcome_flipped(0);
    for (uint64_t x = 0; x < 4; x++)
        for (uint64_t m = 0; m < 4; m++)
            ASSERT_EQ(f.at(x, m), d.at(x, m ^ 2));
}

TEST(NonSignalling, shipped_backends_pass) {
    std::vector<JointDistribution> dists{
        make_ghz(0).joint_distribution(),
        make_ghz_tableau(0).joint_distribution(),
        make_pr_box(0).joint_distribution(),
        make_pr_box(0, PrBoxConvention::Nand).joint_distribution(),
    };
    auto strategies = all_deterministic_strategies(3);
    std::vector<WeightedStrategy> mix;
    for (size_t k = 0; k < strategies.size(); k++) {
        mix.push_back({1.0 / strategies.size(), strategies[k]});
    }
    dists.push_back(make_lhv(mix, 0).joint_distribution());
    for (const auto &d : dists) {
        auto r = check_nonsignalling(d);
        ASSERT_TRUE(r.passed);
        ASSERT_LT(r.max_violation, 1e-9);
    }
}

TEST(NonSignalling, signalling_table_is_rejected) {
    JointDistribution d(2);
    for (uint64_t x = 0; x < 4; x++) {
        d.at(x, (x >> 1) & 1) = 1.0;  // party 1 outputs party 0's input
    }
    auto r = check_nonsignalling(d);
    ASSERT_FALSE(r.passed);
    ASSERT_NEAR(r.max_violation, 1.0, 1e-12);
    ASSERT_EQ(r.worst_subset, 1u);
}

TEST(Resource, single_exchange_per_party) {
    auto ghz = make_ghz(3);
    ASSERT_TRUE(ghz.is_fresh());
    ghz.query(1, 0);
    ASSERT_FALSE(ghz.is_fresh());
    ASSERT_TRUE(ghz.is_used(1));
    ASSERT_THROW(ghz.query(1, 1), ResourceError);
    ASSERT_THROW(ghz.query(3, 0), ResourceError);
    ASSERT_THROW(ghz.query(0, 2), std::invalid_argument);
    ASSERT_THROW(ghz.joint_distribution(), ResourceError);

    auto box = make_pr_box(3);
    box.query(0, 1);
    ASSERT_THROW(box.query(0, 1), ResourceError);
    auto tab = make_ghz_tableau(3);
    tab.query(2, 1);
    ASSERT_THROW(tab.query(2, 0), ResourceError);
}

TEST(Resource, sampling_frequencies_within_three_sigma) {
    const int shots = 100000;
    for (auto backend : {BackendKind::StateVector, BackendKind::Stabilizer}) {
        for (uint64_t x : {0u, 5u}) {
            auto exact = (backend == BackendKind::StateVector ? make_ghz(0).joint_distribution()
                                                              : make_ghz_tableau(0).joint_distribution());
            std::vector<int> counts(8, 0);
            for (int s = 0; s < shots; s++) {
                uint64_t seed = derive_seed(77, s);
                std::unique_ptr<Resource> r;
                if (backend == BackendKind::StateVector) {
                    r = std::make_unique<StateVectorResource>(make_ghz(seed));
                } else {
                    r = std::make_unique<StabilizerResource>(make_ghz_tableau(seed));
                }
                uint64_t m = 0;
                // Reverse order on odd shots: outcome statistics must not depend on query order.
                uint8_t out[3];
                for (size_t k = 0; k < 3; k++) {
                    size_t p = s % 2 ? 2 - k : k;
                    out[p] = r->query(p, (x >> (2 - p)) & 1);
                }
                m = (uint64_t{out[0]} << 2) | (uint64_t{out[1]} << 1) | out[2];
                counts[m]++;
            }
            for (uint64_t m = 0; m < 8; m++) {
                double p = exact.at(x, m);
                double sigma = std::sqrt(shots * p * (1 - p));
                ASSERT_LE(std::abs(counts[m] - shots * p), 3 * sigma + 1e-9) << "outcome " << m;
            }
        }
    }
}

TEST(Resource, pr_box_parity_and_marginals) {
    for (uint64_t seed = 0; seed < 200; seed++) {
        for (uint8_t a = 0; a < 2; a++)
            for (uint8_t b = 0; b < 2; b++) {
                auto box = make_pr_box(seed);
                uint8_t m1, m2;
                if (seed % 2) {
                    m2 = box.query(1, b);
                    m1 = box.query(0, a);
                } else {
                    m1 = box.query(0, a);
                    m2 = box.query(1, b);
                }
                ASSERT_EQ(m1 ^ m2, a & b);
                auto nbox = make_pr_box(seed, PrBoxConvention::Nand);
                ASSERT_EQ(nbox.query(0, a) ^ nbox.query(1, b), !(a & b));
            }
    }
    auto d = make_pr_box(0).joint_distribution();
    for (uint64_t x = 0; x < 4; x++) {
        ASSERT_NEAR(d.at(x, 0) + d.at(x, 1), 0.5, 1e-15);
    }
}

TEST(Resource, lhv_mixture_distribution) {
    DeterministicStrategy s1{{{0, 1}, {1, 1}}};
    DeterministicStrategy s2{{{1, 1}, {0, 0}}};
    auto d = make_lhv({{0.25, s1}, {0.75, s2}}, 9).joint_distribution();
    for (uint64_t x = 0; x < 4; x++) {
        for (uint64_t m = 0; m < 4; m++) {
            double want = 0.25 * (s1.outcomes_for(x) == m) + 0.75 * (s2.outcomes_for(x) == m);
            ASSERT_DOUBLE_EQ(d.at(x, m), want);
        }
    }
    ASSERT_EQ(all_deterministic_strategies(2).size(), 16u);
    ASSERT_EQ(all_deterministic_strategies(3).size(), 64u);
    ASSERT_THROW(make_lhv({{0.5, s1}}, 0), std::invalid_argument);
    ASSERT_THROW(make_lhv({{1.5, s1}, {-0.5, s2}}, 0), std::invalid_argument);
}

TEST(Resource, lhv_sampling_follows_weights) {
    DeterministicStrategy s1{{{0, 0}, {0, 0}}};
    DeterministicStrategy s2{{{1, 1}, {1, 1}}};
    int ones = 0;
    const int n = 20000;
    for (int k = 0; k < n; k++) {
        auto r = make_lhv({{0.3, s1}, {0.7, s2}}, derive_seed(5, k));
        ones += r.query(0, 0);
    }
    double sigma = std::sqrt(n * 0.7 * 0.3);
    ASSERT_LE(std::abs(ones - 0.7 * n), 3 * sigma);
}

TEST(ResourceSpec, circuit_spec_builds_the_ghz_state) {
    auto spec = parse_resource_spec(kGhzCircuitSpec);
    ASSERT_EQ(spec.backend, BackendKind::Stabilizer);
    auto r = instantiate(spec, 4);
    ASSERT_LE(r->joint_distribution().max_abs_difference(make_ghz(0).joint_distribution()), 1e-12);
    auto again = parse_resource_spec(to_json(spec));
    ASSERT_LE(instantiate(again, 4)->joint_distribution().max_abs_difference(r->joint_distribution()), 1e-12);

    auto amps = parse_resource_spec(
        R"({"backend":"statevector","parties":3,"amplitudes":[[0,0],[0.7071067811865476,0],[0,0],[0,0],[0,0],[0,0],[-0.7071067811865476,0],[0,0]]})");
    ASSERT_LE(instantiate(amps, 0)->joint_distribution().max_abs_difference(make_ghz(0).joint_distribution()), 1e-12);
}

TEST(ResourceSpec, errors) {
    ASSERT_THROW(parse_resource_spec("{"), ParseError);
    ASSERT_THROW(parse_resource_spec(R"({"parties":3})"), ParseError);
    ASSERT_THROW(parse_resource_spec(R"({"backend":"quantum","parties":3})"), ParseError);
    ASSERT_THROW(parse_resource_spec(R"({"backend":"statevector","parties":3,"settings":[["X"]]})"), ParseError);
    auto spec = parse_resource_spec(R"({"backend":"statevector","parties":2,"state":"ghz"})");
    ASSERT_THROW(instantiate(spec, 0), std::invalid_argument);
}

TEST(Rng, derived_seeds_are_reproducible) {
    ASSERT_EQ(derive_seed(1, 2), derive_seed(1, 2));
    ASSERT_NE(derive_seed(1, 2), derive_seed(1, 3));
    Rng a(42), b(42);
    for (int k = 0; k < 100; k++) {
        ASSERT_EQ(a.next(), b.next());
    }
    Rng u(1);
    for (int k = 0; k < 1000; k++) {
        double v = u.uniform();
        ASSERT_GE(v, 0.0);
        ASSERT_LT(v, 1.0);
    }
}

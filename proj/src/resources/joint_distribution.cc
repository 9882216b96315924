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

#include "mbcc/resources/joint_distribution.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

#include "mbcc/errors.h"

namespace mbcc::resources {

JointDistribution::JointDistribution(size_t num_parties) : n_(num_parties) {
    if (num_parties == 0 || num_parties > kMaxParties) {
        throw std::invalid_argument("joint distributions support 1 to 12 parties");
    }
    table_.assign(num_tuples() * num_tuples(), 0.0);
}

double &JointDistribution::at(uint64_t inputs, uint64_t outcomes) {
    if (inputs >= num_tuples() || outcomes >= num_tuples()) {
        throw std::out_of_range("joint distribution index out of range");
    }
    return table_[inputs * num_tuples() + outcomes];
}

double JointDistribution::at(uint64_t inputs, uint64_t outcomes) const {
    if (inputs >= num_tuples() || outcomes >= num_tuples()) {
        throw std::out_of_range("joint distribution index out of range");
    }
    return table_[inputs * num_tuples() + outcomes];
}

double JointDistribution::probability(const BitVector &inputs, const BitVector &outcomes) const {
    if (inputs.width() != n_ || outcomes.width() != n_) {
        throw std::invalid_argument("tuple width does not match party count");
    }
    return at(inputs.to_index(), outcomes.to_index());
}

std::span<const double> JointDistribution::row(uint64_t inputs) const {
    if (inputs >= num_tuples()) {
        throw std::out_of_range("joint distribution index out of range");
    }
    return {table_.data() + inputs * num_tuples(), num_tuples()};
}

void JointDistribution::validate(double tolerance) const {
    for (uint64_t x = 0; x < num_tuples(); x++) {
        double total = 0;
        for (double p : row(x)) {
            if (!(p >= -tolerance && p <= 1 + tolerance)) {
                throw std::invalid_argument("probability outside [0,1]");
            }
            total += p;
        }
        if (std::abs(total - 1.0) > tolerance) {
            throw std::invalid_argument(
                fmt::format("row {} sums to {:.15g}", BitVector::from_index(x, n_).str(), total));
        }
    }
}

JointDistribution JointDistribution::with_outcome_flipped(size_t party) const {
    if (party >= n_) {
        throw std::out_of_range("party out of range");
    }
    uint64_t mask = uint64_t{1} << (n_ - 1 - party);
    JointDistribution out(n_);
    for (uint64_t x = 0; x < num_tuples(); x++) {
        for (uint64_t m = 0; m < num_tuples(); m++) {
            out.at(x, m ^ mask) = at(x, m);
        }
    }
    return out;
}

double JointDistribution::max_abs_difference(const JointDistribution &other) const {
    if (other.n_ != n_) {
        throw std::invalid_argument("distributions have different party counts");
    }
    double worst = 0;
    for (size_t k = 0; k < table_.size(); k++) {
        worst = std::max(worst, std::abs(table_[k] - other.table_[k]));
    }
    return worst;
}

std::string JointDistribution::to_text() const {
    std::string s = fmt::format("parties {}\n", n_);
    for (uint64_t x = 0; x < num_tuples(); x++) {
        for (uint64_t m = 0; m < num_tuples(); m++) {
            s += fmt::format(
                "{}|{} {:.15g}\n", BitVector::from_index(x, n_).str(), BitVector::from_index(m, n_).str(), at(x, m));
        }
    }
    return s;
}

JointDistribution JointDistribution::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string word;
    size_t n = 0;
    if (!(in >> word) || word != "parties" || !(in >> n) || n == 0 || n > kMaxParties) {
        throw ParseError("expected 'parties N' header");
    }
    JointDistribution dist(n);
    std::vector<bool> seen(dist.table_.size(), false);
    std::string key;
    while (in >> key) {
        std::string value;
        if (!(in >> value)) {
            throw ParseError("missing probability after '" + key + "'");
        }
        size_t bar = key.find('|');
        if (bar != n || key.size() != 2 * n + 1) {
            throw ParseError("bad key '" + key + "'");
        }
        uint64_t x;
        uint64_t m;
        double p;
        try {
            x = BitVector::from_string(key.substr(0, n)).to_index();
            m = BitVector::from_string(key.substr(n + 1)).to_index();
            size_t used = 0;
            p = std::stod(value, &used);
            if (used != value.size()) {
                throw std::invalid_argument("trailing characters");
            }
        } catch (const std::exception &) {
            throw ParseError("bad entry '" + key + " " + value + "'");
        }
        size_t slot = x * dist.num_tuples() + m;
        if (seen[slot]) {
            throw ParseError("duplicate entry '" + key + "'");
        }
        seen[slot] = true;
        dist.table_[slot] = p;
    }
    return dist;
}

NonSignallingReport check_nonsignalling(const JointDistribution &dist, double tolerance) {
    uint64_t full = dist.num_tuples() - 1;
    NonSignallingReport report;
    for (uint64_t subset = 1; subset < full; subset++) {
        uint64_t rest = full & ~subset;
        // Enumerate sub-masks of `subset` for S's inputs and outcomes, and of `rest` for the others' inputs.
        for (uint64_t xs = subset;; xs = (xs - 1) & subset) {
            for (uint64_t ms = subset;; ms = (ms - 1) & subset) {
                double lo = std::numeric_limits<double>::infinity();
                double hi = -lo;
                for (uint64_t xr = rest;; xr = (xr - 1) & rest) {
                    uint64_t x = xs | xr;
                    double marginal = 0;
                    for (uint64_t mr = rest;; mr = (mr - 1) & rest) {
                        marginal += dist.at(x, ms | mr);
                        if (mr == 0) {
                            break;
                        }
                    }
                    lo = std::min(lo, marginal);
                    hi = std::max(hi, marginal);
                    if (xr == 0) {
                        break;
                    }
                }
                if (hi - lo > report.max_violation) {
                    report.max_violation = hi - lo;
                    report.worst_subset = subset;
                    report.worst_inputs = xs;
                    report.worst_outcomes = ms;
                }
                if (ms == 0) {
                    break;
                }
            }
            if (xs == 0) {
                break;
            }
        }
    }
    report.passed = report.max_violation <= tolerance;
    return report;
}

}  // namespace mbcc::resources

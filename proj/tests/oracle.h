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

#ifndef MBCC_TESTS_ORACLE_H
#define MBCC_TESTS_ORACLE_H

// Dense reference computations for the tests. Nothing here calls into the library.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace oracle {

using cd = std::complex<double>;

struct Mat {
    size_t n = 0;
    std::vector<cd> a;  // row-major n x n

    explicit Mat(size_t dim = 0) : n(dim), a(dim * dim) {
    }
    cd &operator()(size_t r, size_t c) {
        return a[r * n + c];
    }
    cd operator()(size_t r, size_t c) const {
        return a[r * n + c];
    }
};

inline Mat pauli(char p) {
    Mat m(2);
    const cd i(0, 1);
    switch (p) {
        case 'I':
            m(0, 0) = m(1, 1) = 1;
            break;
        case 'X':
            m(0, 1) = m(1, 0) = 1;
            break;
        case 'Y':
            m(0, 1) = -i;
            m(1, 0) = i;
            break;
        case 'Z':
            m(0, 0) = 1;
            m(1, 1) = -1;
            break;
    }
    return m;
}

inline Mat kron(const Mat &x, const Mat &y) {
    Mat m(x.n * y.n);
    for (size_t r1 = 0; r1 < x.n; r1++)
        for (size_t c1 = 0; c1 < x.n; c1++)
            for (size_t r2 = 0; r2 < y.n; r2++)
                for (size_t c2 = 0; c2 < y.n; c2++)
                    m(r1 * y.n + r2, c1 * y.n + c2) = x(r1, c1) * y(r2, c2);
    return m;
}

/// Leftmost letter acts on the most significant qubit. A leading '-' negates.
inline Mat pauli_product(const std::string &label) {
    double sign = 1;
    size_t start = 0;
    if (!label.empty() && (label[0] == '-' || label[0] == '+')) {
        sign = label[0] == '-' ? -1 : 1;
        start = 1;
    }
    Mat m = pauli(label[start]);
    for (size_t k = start + 1; k < label.size(); k++) {
        m = kron(m, pauli(label[k]));
    }
    for (auto &v : m.a) {
        v *= sign;
    }
    return m;
}

inline std::vector<cd> apply(const Mat &m, const std::vector<cd> &v) {
    std::vector<cd> out(m.n);
    for (size_t r = 0; r < m.n; r++)
        for (size_t c = 0; c < m.n; c++)
            out[r] += m(r, c) * v[c];
    return out;
}

inline double expectation(const std::vector<cd> &psi, const Mat &m) {
    auto mv = apply(m, psi);
    cd total = 0;
    for (size_t k = 0; k < psi.size(); k++) {
        total += std::conj(psi[k]) * mv[k];
    }
    return total.real();
}

/// (|001> - |110>)/sqrt2 written out amplitude by amplitude.
inline std::vector<cd> ghz_vector() {
    std::vector<cd> v(8);
    v[0b001] = 1 / std::sqrt(2.0);
    v[0b110] = -1 / std::sqrt(2.0);
    return v;
}

/// Born rule: probability of outcome bits `m` when each qubit measures `ops[k]`.
/// Bit 0 means eigenvalue +1.
inline double born(const std::vector<cd> &psi, const std::string &ops, const std::vector<int> &m) {
    Mat proj;
    for (size_t k = 0; k < ops.size(); k++) {
        Mat o = pauli(ops[k]);
        Mat p(2);
        double s = m[k] ? -1 : 1;
        for (size_t r = 0; r < 2; r++)
            for (size_t c = 0; c < 2; c++)
                p(r, c) = ((r == c ? 1.0 : 0.0) + s * o(r, c)) / 2.0;
        proj = k == 0 ? p : kron(proj, p);
    }
    return expectation(psi, proj);
}

/// P(m1 ^ m2 ^ m3 = NAND(a, b)) for the GHZ vector with inputs (a, b, a^b), X for 0 and Y for 1.
inline double ghz_nand_probability(int a, int b) {
    int c = a ^ b;
    std::string ops{a ? 'Y' : 'X', b ? 'Y' : 'X', c ? 'Y' : 'X'};
    int nand = !(a && b);
    double total = 0;
    for (int m = 0; m < 8; m++) {
        std::vector<int> bits{(m >> 2) & 1, (m >> 1) & 1, m & 1};
        if ((bits[0] ^ bits[1] ^ bits[2]) == nand) {
            total += born(ghz_vector(), ops, bits);
        }
    }
    return total;
}

/// Singlet correlator <A (x) B> = -cos(angle between directions) for directions in the XZ plane.
inline double singlet_correlator(double theta_a, double theta_b) {
    return -std::cos(theta_a - theta_b);
}

/// Every deterministic bipartite strategy's NAND-game win count, by plain loops.
inline std::vector<int> lhv_win_counts() {
    std::vector<int> wins;
    for (int fa = 0; fa < 4; fa++)
        for (int fb = 0; fb < 4; fb++) {
            int w = 0;
            for (int a = 0; a < 2; a++)
                for (int b = 0; b < 2; b++) {
                    int ma = (fa >> (1 - a)) & 1;
                    int mb = (fb >> (1 - b)) & 1;
                    w += (ma ^ mb) == !(a && b);
                }
            wins.push_back(w);
        }
    return wins;
}

/// Bit-level evaluation of NOT/CNOT sequences on a 64-bit register (bit k = wire k).
struct Op {
    bool cnot;
    int control;
    int target;
};

inline uint64_t run_ops(const std::vector<Op> &ops, uint64_t reg) {
    for (const auto &op : ops) {
        uint64_t flip = op.cnot ? (reg >> op.control) & 1 : 1;
        reg ^= flip << op.target;
    }
    return reg;
}

}  // namespace oracle

#endif

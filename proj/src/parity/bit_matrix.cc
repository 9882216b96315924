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

#include "mbcc/parity/bit_matrix.h"

#include <bit>
#include <stdexcept>
#include <utility>

namespace mbcc::parity {

BitMatrix::BitMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64), data_(rows * ((cols + 63) / 64), 0) {
}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix m(n, n);
    for (size_t k = 0; k < n; k++) {
        m.set(k, k, true);
    }
    return m;
}

bool BitMatrix::get(size_t row, size_t col) const {
    if (row >= rows_ || col >= cols_) {
        throw std::out_of_range("BitMatrix index out of range");
    }
    return (row_ptr(row)[col / 64] >> (col % 64)) & 1;
}

void BitMatrix::set(size_t row, size_t col, bool value) {
    if (row >= rows_ || col >= cols_) {
        throw std::out_of_range("BitMatrix index out of range");
    }
    uint64_t mask = uint64_t{1} << (col % 64);
    uint64_t &w = row_ptr(row)[col / 64];
    w = value ? (w | mask) : (w & ~mask);
}

void BitMatrix::xor_row_into(size_t source, size_t target) {
    if (source >= rows_ || target >= rows_) {
        throw std::out_of_range("BitMatrix row out of range");
    }
    const uint64_t *s = row_ptr(source);
    uint64_t *t = row_ptr(target);
    for (size_t w = 0; w < words_per_row_; w++) {
        t[w] ^= s[w];
    }
}

BitVector BitMatrix::apply(const BitVector &x) const {
    if (x.width() != cols_) {
        throw std::invalid_argument("BitMatrix::apply width mismatch");
    }
    std::vector<uint64_t> packed(words_per_row_, 0);
    for (size_t c = 0; c < cols_; c++) {
        if (x[c]) {
            packed[c / 64] |= uint64_t{1} << (c % 64);
        }
    }
    BitVector y(rows_);
    for (size_t r = 0; r < rows_; r++) {
        const uint64_t *row = row_ptr(r);
        uint64_t acc = 0;
        for (size_t w = 0; w < words_per_row_; w++) {
            acc ^= row[w] & packed[w];
        }
        y.set(r, static_cast<uint8_t>(std::popcount(acc) & 1));
    }
    return y;
}

BitMatrix BitMatrix::operator*(const BitMatrix &rhs) const {
    if (cols_ != rhs.rows_) {
        throw std::invalid_argument("BitMatrix product dimension mismatch");
    }
    BitMatrix out(rows_, rhs.cols_);
    for (size_t r = 0; r < rows_; r++) {
        uint64_t *dst = out.row_ptr(r);
        for (size_t k = 0; k < cols_; k++) {
            if (get(r, k)) {
                const uint64_t *src = rhs.row_ptr(k);
                for (size_t w = 0; w < rhs.words_per_row_; w++) {
                    dst[w] ^= src[w];
                }
            }
        }
    }
    return out;
}

size_t BitMatrix::rank() const {
    BitMatrix m = *this;
    size_t rank = 0;
    for (size_t col = 0; col < cols_ && rank < rows_; col++) {
        size_t pivot = rank;
        while (pivot < rows_ && !m.get(pivot, col)) {
            pivot++;
        }
        if (pivot == rows_) {
            continue;
        }
        if (pivot != rank) {
            for (size_t w = 0; w < words_per_row_; w++) {
                std::swap(m.row_ptr(pivot)[w], m.row_ptr(rank)[w]);
            }
        }
        for (size_t r = 0; r < rows_; r++) {
            if (r != rank && m.get(r, col)) {
                m.xor_row_into(rank, r);
            }
        }
        rank++;
    }
    return rank;
}

std::string BitMatrix::str() const {
    std::string s;
    for (size_t r = 0; r < rows_; r++) {
        if (r) {
            s.push_back('\n');
        }
        for (size_t c = 0; c < cols_; c++) {
            s.push_back(get(r, c) ? '1' : '0');
        }
    }
    return s;
}

}  // namespace mbcc::parity

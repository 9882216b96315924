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

#ifndef MBCC_PARITY_BIT_MATRIX_H
#define MBCC_PARITY_BIT_MATRIX_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mbcc/bit_vector.h"

namespace mbcc::parity {

/// Dense matrix over GF(2). Rows are packed into 64-bit words.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols);

    static BitMatrix identity(size_t n);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }

    bool get(size_t row, size_t col) const;
    void set(size_t row, size_t col, bool value);
    /// row[target] ^= row[source]
    void xor_row_into(size_t source, size_t target);

    BitVector apply(const BitVector &x) const;
    BitMatrix operator*(const BitMatrix &rhs) const;
    bool operator==(const BitMatrix &other) const = default;

    size_t rank() const;
    bool is_invertible() const {
        return rows_ == cols_ && rank() == rows_;
    }

    /// Rows joined by '\n', one character per entry.
    std::string str() const;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    size_t words_per_row_ = 0;
    std::vector<uint64_t> data_;

    uint64_t *row_ptr(size_t r) {
        return data_.data() + r * words_per_row_;
    }
    const uint64_t *row_ptr(size_t r) const {
        return data_.data() + r * words_per_row_;
    }
};

}  // namespace mbcc::parity

#endif

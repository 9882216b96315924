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

#ifndef MBCC_BIT_VECTOR_H
#define MBCC_BIT_VECTOR_H

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace mbcc {

/// An ordered sequence of bits.
///
/// Element 0 is the leftmost character of the string form and the most
/// significant bit of the index form, so `BitVector::from_index(1, 3)` is
/// "001". This matches basis labels such as |001> where party 1 is leftmost.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t width);
    BitVector(std::initializer_list<int> bits);
    explicit BitVector(std::vector<uint8_t> bits);

    static BitVector from_string(std::string_view text);
    static BitVector from_index(uint64_t index, size_t width);

    size_t width() const {
        return bits_.size();
    }
    uint8_t operator[](size_t k) const {
        return bits_[k];
    }
    uint8_t get(size_t k) const;
    void set(size_t k, uint8_t value);
    void flip(size_t k);

    uint8_t parity() const;
    /// Inverse of from_index. Requires width <= 64.
    uint64_t to_index() const;
    std::string str() const;
    const std::vector<uint8_t> &bits() const {
        return bits_;
    }

    BitVector operator^(const BitVector &other) const;
    BitVector &operator^=(const BitVector &other);
    bool operator==(const BitVector &other) const = default;
    auto operator<=>(const BitVector &other) const = default;

   private:
    std::vector<uint8_t> bits_;
};

}  // namespace mbcc

#endif

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

#include "mbcc/bit_vector.h"

#include <stdexcept>

namespace mbcc {

BitVector::BitVector(size_t width) : bits_(width, 0) {
}

BitVector::BitVector(std::initializer_list<int> bits) {
    bits_.reserve(bits.size());
    for (int b : bits) {
        if (b != 0 && b != 1) {
            throw std::invalid_argument("BitVector elements must be 0 or 1");
        }
        bits_.push_back(static_cast<uint8_t>(b));
    }
}

BitVector::BitVector(std::vector<uint8_t> bits) : bits_(std::move(bits)) {
    for (uint8_t b : bits_) {
        if (b > 1) {
            throw std::invalid_argument("BitVector elements must be 0 or 1");
        }
    }
}

BitVector BitVector::from_string(std::string_view text) {
    BitVector result(text.size());
    for (size_t k = 0; k < text.size(); k++) {
        if (text[k] == '1') {
            result.bits_[k] = 1;
        } else if (text[k] != '0') {
            throw std::invalid_argument("not a bit string: '" + std::string(text) + "'");
        }
    }
    return result;
}

BitVector BitVector::from_index(uint64_t index, size_t width) {
    if (width > 64) {
        throw std::invalid_argument("from_index supports widths up to 64");
    }
    BitVector result(width);
    for (size_t k = 0; k < width; k++) {
        result.bits_[k] = static_cast<uint8_t>((index >> (width - 1 - k)) & 1);
    }
    return result;
}

uint8_t BitVector::get(size_t k) const {
    if (k >= bits_.size()) {
        throw std::out_of_range("bit index out of range");
    }
    return bits_[k];
}

void BitVector::set(size_t k, uint8_t value) {
    if (k >= bits_.size()) {
        throw std::out_of_range("bit index out of range");
    }
    bits_[k] = value & 1;
}

void BitVector::flip(size_t k) {
    if (k >= bits_.size()) {
        throw std::out_of_range("bit index out of range");
    }
    bits_[k] ^= 1;
}

uint8_t BitVector::parity() const {
    uint8_t p = 0;
    for (uint8_t b : bits_) {
        p ^= b;
    }
    return p;
}

uint64_t BitVector::to_index() const {
    if (bits_.size() > 64) {
        throw std::invalid_argument("to_index supports widths up to 64");
    }
    uint64_t index = 0;
    for (uint8_t b : bits_) {
        index = (index << 1) | b;
    }
    return index;
}

std::string BitVector::str() const {
    std::string s;
    s.reserve(bits_.size());
    for (uint8_t b : bits_) {
        s.push_back(b ? '1' : '0');
    }
    return s;
}

BitVector BitVector::operator^(const BitVector &other) const {
    BitVector result = *this;
    result ^= other;
    return result;
}

BitVector &BitVector::operator^=(const BitVector &other) {
    if (other.width() != width()) {
        throw std::invalid_argument("xor of bit vectors with different widths");
    }
    for (size_t k = 0; k < bits_.size(); k++) {
        bits_[k] ^= other.bits_[k];
    }
    return *this;
}

}  // namespace mbcc

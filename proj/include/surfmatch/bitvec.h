// Copyright 2026 Surfmatch Contributors
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

#ifndef SURFMATCH_BITVEC_H
#define SURFMATCH_BITVEC_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace surfmatch {

/// Fixed-size bit set with word-level XOR, used for Pauli supports.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(size_t n) : n_(n), words_((n + 63) / 64, 0) {
    }

    size_t size() const {
        return n_;
    }

    bool test(size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    void set(size_t i) {
        words_[i >> 6] |= uint64_t{1} << (i & 63);
    }

    void flip(size_t i) {
        words_[i >> 6] ^= uint64_t{1} << (i & 63);
    }

    void reset(size_t i) {
        words_[i >> 6] &= ~(uint64_t{1} << (i & 63));
    }

    void clear() {
        for (auto &w : words_) {
            w = 0;
        }
    }

    void xor_with(const BitVec &other) {
        for (size_t i = 0; i < words_.size(); ++i) {
            words_[i] ^= other.words_[i];
        }
    }

    bool any() const {
        for (auto w : words_) {
            if (w) {
                return true;
            }
        }
        return false;
    }

    size_t count() const {
        size_t c = 0;
        for (auto w : words_) {
            c += std::popcount(w);
        }
        return c;
    }

    /// Parity of |this AND other|.
    bool overlap_parity(const BitVec &other) const {
        uint64_t acc = 0;
        for (size_t i = 0; i < words_.size(); ++i) {
            acc ^= words_[i] & other.words_[i];
        }
        return std::popcount(acc) & 1;
    }

    bool operator==(const BitVec &other) const = default;

   private:
    size_t n_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace surfmatch

#endif

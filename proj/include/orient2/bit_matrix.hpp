// Copyright 2026 The orient2 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ORIENT2_BIT_MATRIX_HPP_
#define ORIENT2_BIT_MATRIX_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace orient2 {

// Square boolean matrix stored as fixed-width rows of 64-bit words. Row width
// is the order rounded up to a whole word; padding bits are always zero.
class BitMatrix {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitMatrix() = default;
  explicit BitMatrix(std::size_t n)
      : n_(n), words_((n + kWordBits - 1) / kWordBits), data_(n_ * words_, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return words_; }

  std::span<Word> row(std::size_t i) noexcept {
    return {data_.data() + i * words_, words_};
  }
  std::span<const Word> row(std::size_t i) const noexcept {
    return {data_.data() + i * words_, words_};
  }

  bool test(std::size_t i, std::size_t j) const noexcept {
    return (data_[i * words_ + j / kWordBits] >> (j % kWordBits)) & 1U;
  }
  void set(std::size_t i, std::size_t j) noexcept {
    data_[i * words_ + j / kWordBits] |= Word{1} << (j % kWordBits);
  }
  void reset(std::size_t i, std::size_t j) noexcept {
    data_[i * words_ + j / kWordBits] &= ~(Word{1} << (j % kWordBits));
  }
  void flip(std::size_t i, std::size_t j) noexcept {
    data_[i * words_ + j / kWordBits] ^= Word{1} << (j % kWordBits);
  }

  bool operator==(const BitMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> data_;
};

inline bool intersects(std::span<const BitMatrix::Word> a,
                       std::span<const BitMatrix::Word> b) noexcept {
  for (std::size_t w = 0; w < a.size(); ++w) {
    if ((a[w] & b[w]) != 0) return true;
  }
  return false;
}

inline std::size_t intersection_count(std::span<const BitMatrix::Word> a,
                                      std::span<const BitMatrix::Word> b) noexcept {
  std::size_t count = 0;
  for (std::size_t w = 0; w < a.size(); ++w) count += std::popcount(a[w] & b[w]);
  return count;
}

inline std::size_t popcount(std::span<const BitMatrix::Word> a) noexcept {
  std::size_t count = 0;
  for (auto word : a) count += std::popcount(word);
  return count;
}

}  // namespace orient2

#endif  // ORIENT2_BIT_MATRIX_HPP_

// Copyright 2026 The tildeiso Authors
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

#ifndef TILDEISO_WORD_HPP_
#define TILDEISO_WORD_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tildeiso {

// An immutable binary word stored as packed bits.
//
// Positions in the public interface are 1-based: `at(1)` is the first symbol.
// Internally symbol p lives in bit (p - 1) % 64 of block (p - 1) / 64.
class Word {
 public:
  Word() = default;

  // Throws Error{kInvalidWord} on any character other than '0' / '1'.
  static Word parse(std::string_view text);

  // Builds a word of `length` <= 64 symbols from a most-significant-first
  // code: symbol 1 is bit (length - 1) of `code`. With this convention the
  // numeric order of codes equals the lexicographic order of the words.
  static Word from_code(std::size_t length, std::uint64_t code);

  static Word repeat(int symbol, std::size_t count);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  // 1-based symbol access; throws Error{kBadPosition} when out of range.
  int at(std::size_t position) const;

  // Inverse of from_code; requires size() <= 64.
  std::uint64_t code() const;

  std::string str() const;

  Word with_flipped(std::size_t position) const;
  Word with_swapped(std::size_t position) const;

  Word operator+(const Word& other) const;
  Word& operator+=(const Word& other);
  Word& push_back(int symbol);

  std::size_t popcount() const noexcept;

  friend bool operator==(const Word& a, const Word& b) noexcept {
    return a.size_ == b.size_ && a.blocks_ == b.blocks_;
  }
  // Shorter words first, then lexicographic ('0' < '1').
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept;

 private:
  int bit(std::size_t index) const noexcept {
    return static_cast<int>((blocks_[index >> 6] >> (index & 63)) & 1U);
  }
  void set_bit(std::size_t index, int value) noexcept;

  std::vector<std::uint64_t> blocks_;
  std::size_t size_ = 0;

  friend Word reverse(const Word& w);
  friend Word complement(const Word& w);
  friend struct WordHash;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

Word reverse(const Word& w);
Word complement(const Word& w);

// First / last `length` symbols; throws Error{kBadLength} if length > |w|.
Word prefix(const Word& w, std::size_t length);
Word suffix(const Word& w, std::size_t length);

// w[first .. last], 1-based inclusive.
Word factor(const Word& w, std::size_t first, std::size_t last);

// 1-based start positions of every occurrence of `needle`, ascending.
std::vector<std::size_t> occurrences(const Word& haystack, const Word& needle);

bool contains(const Word& haystack, const Word& needle);

// True iff `w` has no occurrence of `f`. Requires |f| >= 1.
bool is_free(const Word& w, const Word& f);

}  // namespace tildeiso

#endif  // TILDEISO_WORD_HPP_

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

#include "tildeiso/word.hpp"

#include <bit>
#include <string>

#include "tildeiso/error.hpp"

namespace tildeiso {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidWord: return "invalid-word";
    case ErrorCode::kBadLength: return "bad-length";
    case ErrorCode::kBadPosition: return "bad-position";
    case ErrorCode::kInapplicableSwap: return "inapplicable-swap";
    case ErrorCode::kLengthMismatch: return "length-mismatch";
    case ErrorCode::kTooShort: return "too-short";
    case ErrorCode::kWrongArity: return "wrong-arity";
    case ErrorCode::kConstructionFailure: return "construction-failure";
    case ErrorCode::kTooLarge: return "too-large";
    case ErrorCode::kNotInGraph: return "not-in-graph";
  }
  return "unknown";
}

namespace {

std::size_t block_count(std::size_t size) { return (size + 63) / 64; }

}  // namespace

Word Word::parse(std::string_view text) {
  Word w;
  w.size_ = text.size();
  w.blocks_.assign(block_count(text.size()), 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c != '0' && c != '1') {
      throw Error(ErrorCode::kInvalidWord,
                  "invalid symbol '" + std::string(1, c) + "' at position " +
                      std::to_string(i + 1) + " in \"" + std::string(text) + "\"");
    }
    w.set_bit(i, c - '0');
  }
  return w;
}

Word Word::from_code(std::size_t length, std::uint64_t code) {
  if (length > 64) {
    throw Error(ErrorCode::kBadLength, "from_code supports at most 64 symbols");
  }
  Word w;
  w.size_ = length;
  w.blocks_.assign(block_count(length), 0);
  for (std::size_t i = 0; i < length; ++i) {
    w.set_bit(i, static_cast<int>((code >> (length - 1 - i)) & 1U));
  }
  return w;
}

Word Word::repeat(int symbol, std::size_t count) {
  Word w;
  w.size_ = count;
  w.blocks_.assign(block_count(count), 0);
  if (symbol != 0) {
    for (std::size_t i = 0; i < count; ++i) w.set_bit(i, 1);
  }
  return w;
}

int Word::at(std::size_t position) const {
  if (position < 1 || position > size_) {
    throw Error(ErrorCode::kBadPosition,
                "position " + std::to_string(position) + " outside 1.." +
                    std::to_string(size_));
  }
  return bit(position - 1);
}

std::uint64_t Word::code() const {
  if (size_ > 64) {
    throw Error(ErrorCode::kBadLength, "code() supports at most 64 symbols");
  }
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < size_; ++i) c = (c << 1) | static_cast<std::uint64_t>(bit(i));
  return c;
}

std::string Word::str() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (bit(i) != 0) s[i] = '1';
  }
  return s;
}

void Word::set_bit(std::size_t index, int value) noexcept {
  const std::uint64_t mask = std::uint64_t{1} << (index & 63);
  if (value != 0) {
    blocks_[index >> 6] |= mask;
  } else {
    blocks_[index >> 6] &= ~mask;
  }
}

Word Word::with_flipped(std::size_t position) const {
  if (position < 1 || position > size_) {
    throw Error(ErrorCode::kBadPosition,
                "replacement position " + std::to_string(position) + " outside 1.." +
                    std::to_string(size_));
  }
  Word w = *this;
  w.set_bit(position - 1, 1 - bit(position - 1));
  return w;
}

Word Word::with_swapped(std::size_t position) const {
  if (position < 1 || position + 1 > size_) {
    throw Error(ErrorCode::kBadPosition,
                "swap position " + std::to_string(position) + " outside 1.." +
                    std::to_string(size_ > 0 ? size_ - 1 : 0));
  }
  if (bit(position - 1) == bit(position)) {
    throw Error(ErrorCode::kInapplicableSwap,
                "swap at " + std::to_string(position) + " exchanges equal symbols in " +
                    str());
  }
  Word w = *this;
  w.set_bit(position - 1, bit(position));
  w.set_bit(position, bit(position - 1));
  return w;
}

Word& Word::push_back(int symbol) {
  if (size_ % 64 == 0) blocks_.push_back(0);
  set_bit(size_, symbol);
  ++size_;
  return *this;
}

Word& Word::operator+=(const Word& other) {
  blocks_.reserve(block_count(size_ + other.size_));
  for (std::size_t i = 0; i < other.size_; ++i) push_back(other.bit(i));
  return *this;
}

Word Word::operator+(const Word& other) const {
  Word w = *this;
  w += other;
  return w;
}

std::size_t Word::popcount() const noexcept {
  std::size_t n = 0;
  for (std::uint64_t b : blocks_) n += static_cast<std::size_t>(std::popcount(b));
  return n;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  for (std::size_t i = 0; i < a.size_; ++i) {
    if (auto c = a.bit(i) <=> b.bit(i); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = std::hash<std::size_t>{}(w.size_);
  for (std::uint64_t b : w.blocks_) {
    h ^= std::hash<std::uint64_t>{}(b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Word reverse(const Word& w) {
  Word r;
  r.size_ = w.size_;
  r.blocks_.assign(w.blocks_.size(), 0);
  for (std::size_t i = 0; i < w.size_; ++i) r.set_bit(w.size_ - 1 - i, w.bit(i));
  return r;
}

Word complement(const Word& w) {
  Word c = w;
  for (std::uint64_t& b : c.blocks_) b = ~b;
  if (const std::size_t tail = c.size_ % 64; tail != 0) {
    c.blocks_.back() &= (std::uint64_t{1} << tail) - 1;
  }
  return c;
}

Word factor(const Word& w, std::size_t first, std::size_t last) {
  if (first < 1 || last > w.size() || first > last + 1) {
    throw Error(ErrorCode::kBadLength,
                "factor [" + std::to_string(first) + ".." + std::to_string(last) +
                    "] outside word of length " + std::to_string(w.size()));
  }
  Word out;
  for (std::size_t p = first; p <= last; ++p) out.push_back(w.at(p));
  return out;
}

Word prefix(const Word& w, std::size_t length) {
  if (length > w.size()) {
    throw Error(ErrorCode::kBadLength, "prefix length " + std::to_string(length) +
                                           " exceeds " + std::to_string(w.size()));
  }
  return length == 0 ? Word{} : factor(w, 1, length);
}

Word suffix(const Word& w, std::size_t length) {
  if (length > w.size()) {
    throw Error(ErrorCode::kBadLength, "suffix length " + std::to_string(length) +
                                           " exceeds " + std::to_string(w.size()));
  }
  return length == 0 ? Word{} : factor(w, w.size() - length + 1, w.size());
}

std::vector<std::size_t> occurrences(const Word& haystack, const Word& needle) {
  std::vector<std::size_t> found;
  if (needle.empty() || needle.size() > haystack.size()) return found;
  const std::size_t last_start = haystack.size() - needle.size() + 1;
  for (std::size_t i = 1; i <= last_start; ++i) {
    bool match = true;
    for (std::size_t k = 1; k <= needle.size() && match; ++k) {
      match = haystack.at(i + k - 1) == needle.at(k);
    }
    if (match) found.push_back(i);
  }
  return found;
}

bool contains(const Word& haystack, const Word& needle) {
  if (needle.empty()) return true;
  if (needle.size() > haystack.size()) return false;
  const std::size_t last_start = haystack.size() - needle.size() + 1;
  for (std::size_t i = 1; i <= last_start; ++i) {
    std::size_t k = 1;
    while (k <= needle.size() && haystack.at(i + k - 1) == needle.at(k)) ++k;
    if (k > needle.size()) return true;
  }
  return false;
}

bool is_free(const Word& w, const Word& f) {
  if (f.empty()) throw Error(ErrorCode::kTooShort, "the avoided word must be nonempty");
  return !contains(w, f);
}

}  // namespace tildeiso

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

#ifndef TILDEISO_EDIT_DISTANCE_HPP_
#define TILDEISO_EDIT_DISTANCE_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tildeiso/word.hpp"

namespace tildeiso {

enum class OpKind { kReplace, kSwap };

// A single replacement R_i or swap S_i at a 1-based position.
struct EditOp {
  OpKind kind = OpKind::kReplace;
  std::size_t position = 1;

  static EditOp replace(std::size_t i) { return {OpKind::kReplace, i}; }
  static EditOp swap(std::size_t i) { return {OpKind::kSwap, i}; }

  // "R3" / "S5".
  static EditOp parse(std::string_view text);
  std::string str() const;

  bool is_swap() const { return kind == OpKind::kSwap; }
  // Last position touched: i for R_i, i + 1 for S_i.
  std::size_t last_position() const { return is_swap() ? position + 1 : position; }

  friend bool operator==(const EditOp&, const EditOp&) = default;
  // Position first, replacements before swaps at the same position.
  friend auto operator<=>(const EditOp& a, const EditOp& b) {
    if (auto c = a.position <=> b.position; c != 0) return c;
    return static_cast<int>(a.kind) <=> static_cast<int>(b.kind);
  }
};

bool is_applicable(const EditOp& op, const Word& w);

// Throws Error{kBadPosition} or Error{kInapplicableSwap}.
Word apply(const EditOp& op, const Word& w);

// Every operation applicable to w, ordered by position.
std::vector<EditOp> applicable_ops(const Word& w);

std::size_t hamming_distance(const Word& u, const Word& v);
std::size_t tilde_distance(const Word& u, const Word& v);

struct Transformation {
  std::vector<EditOp> ops;
  std::vector<Word> words;  // words.size() == ops.size() + 1

  std::size_t length() const { return ops.size(); }
  // Comma-separated ops, e.g. "S1,R3"; empty for the identity.
  std::string str() const;
};

inline constexpr std::size_t kDefaultTransformationCap = 10000;

struct TransformationSet {
  std::vector<Transformation> items;
  bool truncated = false;
};

// All shortest operation sequences from u to v, depth-first over operations
// that decrease the remaining distance by one. Stops after `cap` sequences and
// sets `truncated` (nullopt = no cap).
TransformationSet enumerate_minimal_transformations(
    const Word& u, const Word& v,
    std::optional<std::size_t> cap = kDefaultTransformationCap);

// True iff every word of t avoids f.
bool is_f_free_transformation(const Transformation& t, const Word& f);

// Replays t.ops from t.words.front() and checks that every step matches.
bool replays(const Transformation& t);

// Blocks of the u-over-v alignment.
//   B0 = {10/01, 01/10}
//   B1 = {101/010, 010/101}
//   B2 = {100/001, 110/011, 001/100, 011/110}
enum class BlockClass { kB0, kB1, kB2 };

struct BlockOccurrence {
  BlockClass block;
  std::size_t position;  // 1-based first column
};

std::vector<BlockOccurrence> find_blocks(const Word& u, const Word& v);

}  // namespace tildeiso

#endif  // TILDEISO_EDIT_DISTANCE_HPP_

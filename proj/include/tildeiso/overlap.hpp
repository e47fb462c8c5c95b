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

#ifndef TILDEISO_OVERLAP_HPP_
#define TILDEISO_OVERLAP_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tildeiso/edit_distance.hpp"
#include "tildeiso/word.hpp"

namespace tildeiso {

// The prefix/suffix pair of f at one overlap length.
struct OverlapRecord {
  std::size_t length = 0;  // l, 1 <= l <= |f| - 1
  std::size_t shift = 0;   // r = |f| - l
  std::size_t q = 0;       // tilde distance between pre_l(f) and suf_l(f)
  std::size_t hamming_q = 0;
  Word top;     // pre_l(f)
  Word bottom;  // suf_l(f)
  std::vector<Transformation> transformations;
  bool truncated = false;  // transformation list hit the cap
};

struct OverlapOptions {
  // Transformations are listed only for records with q <= this bound.
  std::optional<std::size_t> enumerate_up_to_q;
  std::optional<std::size_t> cap = kDefaultTransformationCap;
};

// One record per l = 1 .. |f| - 1. Throws Error{kTooShort} when |f| < 2.
std::vector<OverlapRecord> all_overlaps(const Word& f, const OverlapOptions& options = {});

std::vector<OverlapRecord> q_overlaps(const Word& f, std::size_t q,
                                      const OverlapOptions& options = {});

OverlapRecord overlap_at(const Word& f, std::size_t length, const OverlapOptions& options = {});

enum class Cell : std::uint8_t { kZero, kOne, kDelimiter };
enum class CellRole : std::uint8_t { kDelimiter, kContext, kOverlap };

// The two-row picture "$ pre_l(f) a" over "b suf_l(f) $" where a = f[l+1] and
// b = f[r]. Column 0 and column l+1 hold the delimiter/context cells; columns
// 1..l are the overlap columns.
struct Alignment {
  std::vector<Cell> top;
  std::vector<Cell> bottom;

  std::size_t columns() const { return top.size(); }
  std::size_t overlap_length() const { return top.size() - 2; }
  CellRole top_role(std::size_t column) const;
  CellRole bottom_role(std::size_t column) const;

  std::string top_str() const;
  std::string bottom_str() const;
};

// Throws Error{kBadLength} unless 1 <= length <= |f| - 1.
Alignment alignment(const Word& f, std::size_t length);

// A q = 2 transformation viewed as its two operations (O_i, O_j), i < j.
struct OpPair {
  EditOp first;
  EditOp second;

  friend bool operator==(const OpPair&, const OpPair&) = default;
  friend auto operator<=>(const OpPair& a, const OpPair& b) = default;

  bool both_replacements() const { return !first.is_swap() && !second.is_swap(); }
  bool both_swaps() const { return first.is_swap() && second.is_swap(); }
  // (S_i, S_{i+1}): the double flip of the middle column.
  bool is_chained_swaps() const {
    return both_swaps() && second.position == first.position + 1;
  }
  // At least one untouched column strictly between the two operations.
  bool has_gap() const { return second.position > first.last_position() + 1; }
};

// Distinct operation pairs among rec.transformations (rec.q must be 2).
std::vector<OpPair> op_pairs(const OverlapRecord& rec);

enum class Adjacency { kNonAdjacent, kAdjacent };

struct ErrorGeometry {
  Adjacency kind = Adjacency::kAdjacent;
  OpPair ops;                               // the witnessing transformation
  std::vector<std::size_t> error_columns;   // overlap columns it modifies
};

// Throws Error{kWrongArity} unless rec.q == 2.
ErrorGeometry error_geometry(const OverlapRecord& rec);

// The per-transformation clauses: same operation kind, r even,
// j - i = r / 2 and f[i .. i + r/2 - 1] = f[j .. j + r/2 - 1].
bool condition_tilde(const Word& f, const OverlapRecord& rec, const OpPair& ops);
bool condition_tilde(const Word& f, const OverlapRecord& rec, const Transformation& t);

// condition_tilde for every transformation of rec other than the chained
// swaps (S_i, S_{i+1}).
bool overlap_satisfies_condition_tilde(const Word& f, const OverlapRecord& rec);

// Some l with Hamming distance exactly 2 between pre_l(f) and suf_l(f).
bool has_hamming_2_error_overlap(const Word& f);

}  // namespace tildeiso

#endif  // TILDEISO_OVERLAP_HPP_

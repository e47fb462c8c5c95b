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

#include "tildeiso/overlap.hpp"

#include <algorithm>
#include <set>

#include "tildeiso/error.hpp"

namespace tildeiso {

namespace {

void require_two_symbols(const Word& f) {
  if (f.size() < 2) {
    throw Error(ErrorCode::kTooShort, "overlaps need a word of length >= 2, got \"" +
                                          f.str() + "\"");
  }
}

void require_q_two(const OverlapRecord& rec) {
  if (rec.q != 2) {
    throw Error(ErrorCode::kWrongArity,
                "expected a 2-tilde-error overlap, got q = " + std::to_string(rec.q));
  }
}

Cell cell_of(int symbol) { return symbol != 0 ? Cell::kOne : Cell::kZero; }

char char_of(Cell c) {
  switch (c) {
    case Cell::kZero: return '0';
    case Cell::kOne: return '1';
    case Cell::kDelimiter: return '$';
  }
  return '?';
}

bool is_b2_block(const Word& top, const Word& bottom, std::size_t i) {
  if (i + 2 > top.size()) return false;
  return top.at(i) != top.at(i + 2) && bottom.at(i) == top.at(i + 2) &&
         bottom.at(i + 1) == top.at(i + 1) && bottom.at(i + 2) == top.at(i);
}

}  // namespace

OverlapRecord overlap_at(const Word& f, std::size_t length, const OverlapOptions& options) {
  require_two_symbols(f);
  if (length < 1 || length >= f.size()) {
    throw Error(ErrorCode::kBadLength, "overlap length " + std::to_string(length) +
                                           " outside 1.." + std::to_string(f.size() - 1));
  }
  OverlapRecord rec;
  rec.length = length;
  rec.shift = f.size() - length;
  rec.top = prefix(f, length);
  rec.bottom = suffix(f, length);
  rec.q = tilde_distance(rec.top, rec.bottom);
  rec.hamming_q = hamming_distance(rec.top, rec.bottom);
  if (!options.enumerate_up_to_q || rec.q <= *options.enumerate_up_to_q) {
    auto set = enumerate_minimal_transformations(rec.top, rec.bottom, options.cap);
    rec.transformations = std::move(set.items);
    rec.truncated = set.truncated;
  }
  return rec;
}

std::vector<OverlapRecord> all_overlaps(const Word& f, const OverlapOptions& options) {
  require_two_symbols(f);
  std::vector<OverlapRecord> records;
  records.reserve(f.size() - 1);
  for (std::size_t length = 1; length < f.size(); ++length) {
    records.push_back(overlap_at(f, length, options));
  }
  return records;
}

std::vector<OverlapRecord> q_overlaps(const Word& f, std::size_t q,
                                      const OverlapOptions& options) {
  require_two_symbols(f);
  std::vector<OverlapRecord> records;
  OverlapOptions only_q = options;
  only_q.enumerate_up_to_q = q;
  for (std::size_t length = 1; length < f.size(); ++length) {
    // Cheap distance check first so that only matching lengths enumerate.
    const Word top = prefix(f, length);
    const Word bottom = suffix(f, length);
    if (tilde_distance(top, bottom) != q) continue;
    records.push_back(overlap_at(f, length, only_q));
  }
  return records;
}

CellRole Alignment::top_role(std::size_t column) const {
  if (column == 0) return CellRole::kDelimiter;
  if (column + 1 == top.size()) return CellRole::kContext;
  return CellRole::kOverlap;
}

CellRole Alignment::bottom_role(std::size_t column) const {
  if (column == 0) return CellRole::kContext;
  if (column + 1 == bottom.size()) return CellRole::kDelimiter;
  return CellRole::kOverlap;
}

std::string Alignment::top_str() const {
  std::string s;
  for (Cell c : top) s += char_of(c);
  return s;
}

std::string Alignment::bottom_str() const {
  std::string s;
  for (Cell c : bottom) s += char_of(c);
  return s;
}

Alignment alignment(const Word& f, std::size_t length) {
  if (f.size() < 2 || length < 1 || length >= f.size()) {
    throw Error(ErrorCode::kBadLength, "alignment length " + std::to_string(length) +
                                           " invalid for word of length " +
                                           std::to_string(f.size()));
  }
  const std::size_t shift = f.size() - length;
  Alignment a;
  a.top.push_back(Cell::kDelimiter);
  a.bottom.push_back(cell_of(f.at(shift)));
  for (std::size_t k = 1; k <= length; ++k) {
    a.top.push_back(cell_of(f.at(k)));
    a.bottom.push_back(cell_of(f.at(shift + k)));
  }
  a.top.push_back(cell_of(f.at(length + 1)));
  a.bottom.push_back(Cell::kDelimiter);
  return a;
}

std::vector<OpPair> op_pairs(const OverlapRecord& rec) {
  require_q_two(rec);
  std::set<OpPair> pairs;
  for (const Transformation& t : rec.transformations) {
    EditOp a = t.ops[0];
    EditOp b = t.ops[1];
    if (b < a) std::swap(a, b);
    pairs.insert({a, b});
  }
  return {pairs.begin(), pairs.end()};
}

ErrorGeometry error_geometry(const OverlapRecord& rec) {
  require_q_two(rec);
  const std::vector<OpPair> pairs = op_pairs(rec);
  if (pairs.empty()) {
    throw Error(ErrorCode::kWrongArity, "overlap has no enumerated transformations");
  }
  ErrorGeometry g;
  g.ops = pairs.front();
  g.kind = Adjacency::kAdjacent;
  for (const OpPair& p : pairs) {
    const bool b2_block = p.both_replacements() && p.second.position == p.first.position + 2 &&
                          is_b2_block(rec.top, rec.bottom, p.first.position);
    if (p.has_gap() || b2_block) {
      g.ops = p;
      g.kind = Adjacency::kNonAdjacent;
      break;
    }
  }
  for (const EditOp& op : {g.ops.first, g.ops.second}) {
    for (std::size_t c = op.position; c <= op.last_position(); ++c) g.error_columns.push_back(c);
  }
  std::sort(g.error_columns.begin(), g.error_columns.end());
  g.error_columns.erase(std::unique(g.error_columns.begin(), g.error_columns.end()),
                        g.error_columns.end());
  return g;
}

bool condition_tilde(const Word& f, const OverlapRecord& rec, const OpPair& ops) {
  require_q_two(rec);
  if (!ops.both_replacements() && !ops.both_swaps()) return false;
  if (rec.shift % 2 != 0) return false;
  const std::size_t half = rec.shift / 2;
  const std::size_t i = ops.first.position;
  const std::size_t j = ops.second.position;
  if (j - i != half) return false;
  if (j + half - 1 > f.size()) return false;
  for (std::size_t k = 0; k < half; ++k) {
    if (f.at(i + k) != f.at(j + k)) return false;
  }
  return true;
}

bool condition_tilde(const Word& f, const OverlapRecord& rec, const Transformation& t) {
  require_q_two(rec);
  EditOp a = t.ops.at(0);
  EditOp b = t.ops.at(1);
  if (b < a) std::swap(a, b);
  return condition_tilde(f, rec, OpPair{a, b});
}

bool overlap_satisfies_condition_tilde(const Word& f, const OverlapRecord& rec) {
  bool any = false;
  for (const OpPair& p : op_pairs(rec)) {
    if (p.is_chained_swaps()) continue;
    if (!condition_tilde(f, rec, p)) return false;
    any = true;
  }
  return any;
}

bool has_hamming_2_error_overlap(const Word& f) {
  require_two_symbols(f);
  for (std::size_t length = 2; length < f.size(); ++length) {
    if (hamming_distance(prefix(f, length), suffix(f, length)) == 2) return true;
  }
  return false;
}

}  // namespace tildeiso

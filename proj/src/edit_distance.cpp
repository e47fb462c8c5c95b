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

#include "tildeiso/edit_distance.hpp"

#include <algorithm>
#include <charconv>

#include "tildeiso/error.hpp"

namespace tildeiso {

namespace {

void require_equal_lengths(const Word& u, const Word& v) {
  if (u.size() != v.size()) {
    throw Error(ErrorCode::kLengthMismatch, "words of different lengths: " +
                                                std::to_string(u.size()) + " vs " +
                                                std::to_string(v.size()));
  }
}

}  // namespace

EditOp EditOp::parse(std::string_view text) {
  if (text.size() < 2 || (text[0] != 'R' && text[0] != 'S')) {
    throw Error(ErrorCode::kBadPosition, "malformed operation \"" + std::string(text) + "\"");
  }
  std::size_t position = 0;
  const auto* begin = text.data() + 1;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, position);
  if (ec != std::errc{} || ptr != end || position == 0) {
    throw Error(ErrorCode::kBadPosition, "malformed operation \"" + std::string(text) + "\"");
  }
  return {text[0] == 'R' ? OpKind::kReplace : OpKind::kSwap, position};
}

std::string EditOp::str() const {
  return (is_swap() ? "S" : "R") + std::to_string(position);
}

bool is_applicable(const EditOp& op, const Word& w) {
  if (op.position < 1) return false;
  if (!op.is_swap()) return op.position <= w.size();
  return op.position + 1 <= w.size() && w.at(op.position) != w.at(op.position + 1);
}

Word apply(const EditOp& op, const Word& w) {
  return op.is_swap() ? w.with_swapped(op.position) : w.with_flipped(op.position);
}

std::vector<EditOp> applicable_ops(const Word& w) {
  std::vector<EditOp> ops;
  for (std::size_t i = 1; i <= w.size(); ++i) {
    ops.push_back(EditOp::replace(i));
    if (i < w.size() && w.at(i) != w.at(i + 1)) ops.push_back(EditOp::swap(i));
  }
  return ops;
}

std::size_t hamming_distance(const Word& u, const Word& v) {
  require_equal_lengths(u, v);
  std::size_t d = 0;
  for (std::size_t k = 1; k <= u.size(); ++k) d += u.at(k) != v.at(k) ? 1 : 0;
  return d;
}

std::size_t tilde_distance(const Word& u, const Word& v) {
  require_equal_lengths(u, v);
  // best[k] = distance between the length-k prefixes.
  std::vector<std::size_t> best(u.size() + 1, 0);
  for (std::size_t k = 1; k <= u.size(); ++k) {
    best[k] = best[k - 1] + (u.at(k) != v.at(k) ? 1 : 0);
    if (k >= 2 && u.at(k - 1) == v.at(k) && u.at(k) == v.at(k - 1) &&
        u.at(k - 1) != u.at(k)) {
      best[k] = std::min(best[k], best[k - 2] + 1);
    }
  }
  return best[u.size()];
}

std::string Transformation::str() const {
  std::string s;
  for (std::size_t k = 0; k < ops.size(); ++k) {
    if (k > 0) s += ',';
    s += ops[k].str();
  }
  return s;
}

namespace {

struct Enumerator {
  const Word& target;
  std::optional<std::size_t> cap;
  TransformationSet out;
  std::vector<EditOp> ops;
  std::vector<Word> words;

  // Returns false once the cap is hit.
  bool descend(std::size_t remaining) {
    if (remaining == 0) {
      if (cap && out.items.size() >= *cap) {
        out.truncated = true;
        return false;
      }
      out.items.push_back({ops, words});
      return true;
    }
    const Word current = words.back();
    for (const EditOp& op : applicable_ops(current)) {
      Word next = apply(op, current);
      if (tilde_distance(next, target) + 1 != remaining) continue;
      ops.push_back(op);
      words.push_back(std::move(next));
      const bool keep_going = descend(remaining - 1);
      ops.pop_back();
      words.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }
};

}  // namespace

TransformationSet enumerate_minimal_transformations(const Word& u, const Word& v,
                                                    std::optional<std::size_t> cap) {
  require_equal_lengths(u, v);
  Enumerator e{v, cap, {}, {}, {u}};
  e.descend(tilde_distance(u, v));
  return std::move(e.out);
}

bool is_f_free_transformation(const Transformation& t, const Word& f) {
  return std::all_of(t.words.begin(), t.words.end(),
                     [&](const Word& w) { return is_free(w, f); });
}

bool replays(const Transformation& t) {
  if (t.words.size() != t.ops.size() + 1) return false;
  for (std::size_t k = 0; k < t.ops.size(); ++k) {
    if (!is_applicable(t.ops[k], t.words[k])) return false;
    if (apply(t.ops[k], t.words[k]) != t.words[k + 1]) return false;
  }
  return true;
}

std::vector<BlockOccurrence> find_blocks(const Word& u, const Word& v) {
  require_equal_lengths(u, v);
  std::vector<BlockOccurrence> found;
  const std::size_t n = u.size();
  for (std::size_t i = 1; i + 1 <= n; ++i) {
    // 10/01 and 01/10: complementary rows that alternate.
    if (u.at(i) != u.at(i + 1) && v.at(i) == u.at(i + 1) && v.at(i + 1) == u.at(i)) {
      found.push_back({BlockClass::kB0, i});
    }
  }
  for (std::size_t i = 1; i + 2 <= n; ++i) {
    const int a = u.at(i), b = u.at(i + 1), c = u.at(i + 2);
    const int x = v.at(i), y = v.at(i + 1), z = v.at(i + 2);
    // 101/010 and 010/101.
    if (a == c && a != b && x == 1 - a && y == 1 - b && z == 1 - c) {
      found.push_back({BlockClass::kB1, i});
    }
    // 100/001, 110/011, 001/100, 011/110: the bottom row is the reverse of a
    // top row whose end symbols differ.
    const bool reversed_rows = x == c && y == b && z == a && a != c;
    if (reversed_rows) found.push_back({BlockClass::kB2, i});
  }
  return found;
}

}  // namespace tildeiso

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

#ifndef TILDEISO_CUBE_ORACLE_HPP_
#define TILDEISO_CUBE_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tildeiso/witness.hpp"
#include "tildeiso/word.hpp"

namespace tildeiso {

inline constexpr std::size_t kDefaultCubeCap = 22;
// Codes are held in 32-bit lanes by the window scan.
inline constexpr std::size_t kAbsoluteCubeLimit = 32;

// kDefaultCubeCap unless TILDE_ISO_MAX_CUBE holds a number in 1..32.
std::size_t cube_cap();

// Tilde edges are replacements and swaps; Hamming edges are replacements only.
enum class EdgeSet { kTilde, kHamming };

// The cube on binary words of length m, optionally induced on the words that
// avoid a given factor. Vertices are codes (see Word::from_code); membership
// is a bitmap and adjacency is generated on demand.
class CubeGraph {
 public:
  // Throws Error{kTooLarge} if m is 0 or exceeds `cap` (default cube_cap()).
  static CubeGraph build(std::size_t m, const std::optional<Word>& avoid,
                         EdgeSet edges = EdgeSet::kTilde,
                         std::optional<std::size_t> cap = std::nullopt);

  std::size_t length() const { return m_; }
  const std::optional<Word>& avoid() const { return avoid_; }
  EdgeSet edge_set() const { return edges_; }

  bool has_vertex(std::uint64_t code) const {
    return code < (std::uint64_t{1} << m_) && ((present_[code >> 6] >> (code & 63)) & 1U) != 0;
  }
  bool has_vertex(const Word& w) const;
  std::size_t vertex_count() const { return vertex_count_; }

  // Ascending codes.
  std::vector<std::uint64_t> vertices() const;
  // Neighbours of a vertex inside the graph, ascending.
  void neighbours(std::uint64_t code, std::vector<std::uint64_t>& out) const;
  std::vector<Word> neighbours(const Word& w) const;
  std::size_t degree(const Word& w) const;
  // Every edge once as (a, b) with a < b, sorted.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges() const;
  std::size_t edge_count() const;

  Word word(std::uint64_t code) const { return Word::from_code(m_, code); }

 private:
  std::size_t m_ = 0;
  std::optional<Word> avoid_;
  EdgeSet edges_ = EdgeSet::kTilde;
  std::vector<std::uint64_t> present_;
  std::size_t vertex_count_ = 0;
};

// Shortest path length inside g; nullopt when v is unreachable from u.
// Throws Error{kNotInGraph} if u or v is not a vertex, Error{kLengthMismatch}
// if their lengths differ from g.length().
std::optional<std::size_t> restricted_distance(const CubeGraph& g, const Word& u, const Word& v);

// Single-source BFS distances indexed by code; -1 marks unreachable words and
// non-vertices.
std::vector<std::int8_t> bfs_distances(const CubeGraph& g, std::uint64_t source);

enum class OracleStrategy {
  // Scans for blocked pairs: f-free (u, v) such that every first step of every
  // shortest transformation from u to v creates f. Such a pair exists at a
  // length exactly when a violation does, and the violations of minimal
  // distance are precisely the blocked pairs of minimal distance.
  kBlockedPairs,
  // One BFS per f-free source compared against the full-cube distance.
  kSourceBfs,
};

struct OracleOptions {
  std::optional<std::size_t> max_len;  // default ceil(5|f| / 2)
  bool first_violation = true;         // false: collect minimal pairs
  EdgeSet edges = EdgeSet::kTilde;
  OracleStrategy strategy = OracleStrategy::kBlockedPairs;
  std::size_t threads = 1;             // 0 = hardware concurrency
  std::optional<std::size_t> cap;      // default cube_cap()
  bool measure_restricted_distance = true;
};

enum class OracleVerdict { kNoViolation, kViolation };

struct Violation {
  std::size_t m = 0;
  Word u;
  Word v;
  std::size_t full_distance = 0;
  // Filled when measured: nullopt inside means the pair is disconnected.
  std::optional<std::optional<std::size_t>> restricted_distance;
};

struct OracleReport {
  Word f;
  std::size_t max_len = 0;
  OracleVerdict verdict = OracleVerdict::kNoViolation;
  std::optional<Violation> violation;
  // Only when first_violation is false: every violating pair of minimal full
  // distance at the violating length, as (u, v) with u < v.
  std::vector<std::pair<Word, Word>> minimal_pairs;
  std::size_t minimal_distance = 0;
};

std::size_t default_oracle_bound(const Word& f);

// Throws Error{kTooShort} for an empty f and Error{kTooLarge} when max_len
// exceeds the cap.
OracleReport oracle_check(const Word& f, const OracleOptions& options = {});
OracleReport oracle_check(const Word& f, std::size_t max_len, bool first_violation);

// Minimal-distance violating pairs of length m, deduplicated up to order.
std::vector<WitnessPair> find_min_witnesses(const Word& f, std::size_t m,
                                            const OracleOptions& options = {});

enum class GraphFormat { kDot, kEdgeList, kJson };

std::string export_graph(const CubeGraph& g, GraphFormat format);

}  // namespace tildeiso

#endif  // TILDEISO_CUBE_ORACLE_HPP_

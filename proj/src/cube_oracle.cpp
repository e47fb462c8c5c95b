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

#include "tildeiso/cube_oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <sstream>
#include <string_view>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "tildeiso/error.hpp"
#include "tildeiso/kernels.hpp"

namespace tildeiso {

namespace {

constexpr std::uint64_t kChunk = std::uint64_t{1} << 14;
constexpr std::uint8_t kUnvisited = 0xFF;

std::uint64_t low_mask(std::size_t bits) {
  return bits >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
}

void require_within_cap(std::size_t m, std::optional<std::size_t> cap) {
  const std::size_t limit = std::min(cap.value_or(cube_cap()), kAbsoluteCubeLimit);
  if (m == 0 || m > limit) {
    throw Error(ErrorCode::kTooLarge, "cube length " + std::to_string(m) + " outside 1.." +
                                          std::to_string(limit));
  }
}

std::size_t worker_count(std::size_t requested) {
  if (requested != 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

// Runs body(chunk_index) for chunk indices [0, chunks) on `threads` workers.
// `skip(chunk_index)` lets a worker drop chunks that can no longer matter.
template <typename Body, typename Skip>
void for_each_chunk(std::size_t chunks, std::size_t threads, Body body, Skip skip) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) {
      if (!skip(c)) body(c);
    }
  };
  threads = std::min(threads, std::max<std::size_t>(chunks, 1));
  if (threads <= 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

unsigned code_distance(EdgeSet edges, std::uint64_t a, std::uint64_t b, unsigned m) {
  return edges == EdgeSet::kTilde ? kernels::tilde_distance_code(a, b, m)
                                  : kernels::hamming_distance_code(a, b);
}

bool code_contains(std::uint64_t w, std::uint64_t f, unsigned n, unsigned m) {
  if (n > m) return false;
  const std::uint64_t mask = low_mask(n);
  for (unsigned s = 0; s + n <= m; ++s) {
    if (((w >> s) & mask) == f) return true;
  }
  return false;
}

// Masks of every operation applicable to w, in bit space: a replacement flips
// one bit, a swap flips two adjacent unequal bits.
void applicable_masks(std::uint64_t w, unsigned m, EdgeSet edges, std::vector<std::uint64_t>& out) {
  out.clear();
  for (unsigned k = 0; k < m; ++k) out.push_back(std::uint64_t{1} << k);
  if (edges == EdgeSet::kTilde) {
    for (unsigned k = 0; k + 1 < m; ++k) {
      if (((w >> k) ^ (w >> (k + 1))) & 1U) out.push_back(std::uint64_t{3} << k);
    }
  }
}

struct PairHit {
  std::uint64_t u;
  std::uint64_t v;
  unsigned distance;
};

// Searches one length for blocked pairs with a given source u.
class BlockedPairSearch {
 public:
  BlockedPairSearch(const Word& f, unsigned m, EdgeSet edges)
      : m_(m), n_(static_cast<unsigned>(f.size())), f_(f.code()), edges_(edges) {
    f_mask_ = low_mask(n_);
    alternation_ = (f_ ^ (f_ >> 1)) & (f_mask_ >> 1);
  }

  // Appends every blocked pair (u, v) with distance <= limit.
  void run(std::uint64_t u, unsigned limit, std::vector<PairHit>& out) {
    collect_blocked(u);
    if (blocked_.size() < 2) return;
    applicable_masks(u, m_, edges_, all_);
    free_codes_.clear();
    for (const std::uint64_t mask : all_) {
      if (!std::binary_search(blocked_.begin(), blocked_.end(), mask)) {
        free_codes_.push_back(u ^ mask);
      }
    }
    dist_.resize(free_codes_.size());
    u_ = u;
    limit_ = limit;
    out_ = &out;
    extend(0, 0, 0);
  }

 private:
  void add_blocked(std::uint64_t mask) { blocked_.push_back(mask); }

  // Every operation that turns u into a word containing f fixes a window
  // that is one operation away from f; list them from those windows.
  void collect_blocked(std::uint64_t u) {
    blocked_.clear();
    for (unsigned s = 0; s + n_ <= m_; ++s) {
      const std::uint64_t x = ((u >> s) & f_mask_) ^ f_;
      if (x == 0) continue;
      const std::uint64_t low = x & (~x + 1);
      if (x == low) {
        const unsigned b = static_cast<unsigned>(std::countr_zero(x));
        const unsigned p = s + b;
        add_blocked(std::uint64_t{1} << p);
        if (edges_ != EdgeSet::kTilde) continue;
        if (b == 0 && p >= 1 && (((u >> p) ^ (u >> (p - 1))) & 1U)) {
          add_blocked(std::uint64_t{3} << (p - 1));
        }
        if (b == n_ - 1 && p + 1 < m_ && (((u >> p) ^ (u >> (p + 1))) & 1U)) {
          add_blocked(std::uint64_t{3} << p);
        }
      } else if (edges_ == EdgeSet::kTilde && (x ^ low) == (low << 1) && (low & alternation_)) {
        add_blocked(x << s);
      }
    }
    std::sort(blocked_.begin(), blocked_.end());
    blocked_.erase(std::unique(blocked_.begin(), blocked_.end()), blocked_.end());
  }

  // Depth-first over sets of pairwise disjoint blocked operations.
  void extend(std::size_t from, std::uint64_t used, unsigned count) {
    for (std::size_t k = from; k < blocked_.size(); ++k) {
      const std::uint64_t mask = blocked_[k];
      if (mask & used) continue;
      const std::uint64_t next = used | mask;
      const unsigned c = count + 1;
      if (c > limit_) continue;
      if (c >= 2) {
        const std::uint64_t v = u_ ^ next;
        // Fewer than c operations suffice, so no superset is geodesic either.
        if (code_distance(edges_, u_, v, m_) != c) continue;
        if (!code_contains(v, f_, n_, m_) && all_free_steps_leave_geodesics(v, c)) {
          out_->push_back({u_, v, c});
        }
      }
      extend(k + 1, next, c);
    }
  }

  bool all_free_steps_leave_geodesics(std::uint64_t v, unsigned d) {
    if (free_codes_.empty()) return true;
    const auto& table = kernels::active();
    if (edges_ == EdgeSet::kTilde) {
      table.tilde_distance_batch(v, free_codes_.data(), free_codes_.size(), m_, dist_.data());
    } else {
      table.hamming_distance_batch(v, free_codes_.data(), free_codes_.size(), dist_.data());
    }
    for (const std::uint8_t x : dist_) {
      if (x + 1U == d) return false;
    }
    return true;
  }

  unsigned m_;
  unsigned n_;
  std::uint64_t f_;
  std::uint64_t f_mask_ = 0;
  std::uint64_t alternation_ = 0;
  EdgeSet edges_;

  std::vector<std::uint64_t> blocked_;
  std::vector<std::uint64_t> all_;
  std::vector<std::uint64_t> free_codes_;
  std::vector<std::uint8_t> dist_;
  std::uint64_t u_ = 0;
  unsigned limit_ = 0;
  std::vector<PairHit>* out_ = nullptr;
};

struct LengthResult {
  bool violated = false;
  PairHit first{};
  std::vector<PairHit> minimal;  // u < v, sorted
  unsigned minimal_distance = 0;
};

LengthResult scan_blocked_pairs(const Word& f, unsigned m, const OracleOptions& options) {
  const std::uint64_t total = std::uint64_t{1} << m;
  const std::size_t chunks = static_cast<std::size_t>((total + kChunk - 1) / kChunk);
  const kernels::WindowScan scan{
      static_cast<std::uint32_t>(f.code()), static_cast<unsigned>(f.size()), m,
      options.edges == EdgeSet::kTilde ? kernels::Metric::kTilde : kernels::Metric::kHamming};

  std::vector<std::vector<PairHit>> per_chunk(chunks);
  std::atomic<std::size_t> first_hit_chunk{std::numeric_limits<std::size_t>::max()};
  std::atomic<unsigned> best_distance{std::numeric_limits<unsigned>::max()};

  auto body = [&](std::size_t c) {
    const std::uint64_t first = c * kChunk;
    const std::size_t count = static_cast<std::size_t>(std::min(kChunk, total - first));
    std::vector<std::uint8_t> flags(count);
    kernels::active().scan_windows(scan, static_cast<std::uint32_t>(first), count, flags.data());
    BlockedPairSearch search(f, m, options.edges);
    std::vector<PairHit> hits;
    for (std::size_t k = 0; k < count; ++k) {
      if ((flags[k] & kernels::kContainsF) || kernels::near_count(flags[k]) < 2) continue;
      const unsigned limit =
          options.first_violation ? m : best_distance.load(std::memory_order_relaxed);
      const std::size_t before = hits.size();
      search.run(first + k, limit, hits);
      if (hits.size() == before) continue;
      if (options.first_violation) break;
      unsigned local = best_distance.load(std::memory_order_relaxed);
      for (std::size_t h = before; h < hits.size(); ++h) local = std::min(local, hits[h].distance);
      unsigned seen = best_distance.load(std::memory_order_relaxed);
      while (local < seen && !best_distance.compare_exchange_weak(seen, local)) {
      }
    }
    if (!hits.empty() && options.first_violation) {
      std::size_t seen = first_hit_chunk.load();
      while (c < seen && !first_hit_chunk.compare_exchange_weak(seen, c)) {
      }
    }
    per_chunk[c] = std::move(hits);
  };
  auto skip = [&](std::size_t c) { return options.first_violation && c > first_hit_chunk.load(); };
  for_each_chunk(chunks, worker_count(options.threads), body, skip);

  LengthResult result;
  if (options.first_violation) {
    for (auto& hits : per_chunk) {
      if (hits.empty()) continue;
      result.violated = true;
      result.first = *std::min_element(hits.begin(), hits.end(), [](const PairHit& a, const PairHit& b) {
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
      });
      result.minimal_distance = result.first.distance;
      break;
    }
    return result;
  }
  unsigned best = std::numeric_limits<unsigned>::max();
  for (const auto& hits : per_chunk) {
    for (const auto& h : hits) best = std::min(best, h.distance);
  }
  if (best == std::numeric_limits<unsigned>::max()) return result;
  for (const auto& hits : per_chunk) {
    for (const auto& h : hits) {
      if (h.distance == best) {
        result.minimal.push_back({std::min(h.u, h.v), std::max(h.u, h.v), h.distance});
      }
    }
  }
  auto key = [](const PairHit& h) { return std::pair(h.u, h.v); };
  std::sort(result.minimal.begin(), result.minimal.end(),
            [&](const PairHit& a, const PairHit& b) { return key(a) < key(b); });
  result.minimal.erase(std::unique(result.minimal.begin(), result.minimal.end(),
                                   [&](const PairHit& a, const PairHit& b) { return key(a) == key(b); }),
                       result.minimal.end());
  result.violated = true;
  result.first = result.minimal.front();
  result.minimal_distance = best;
  return result;
}

LengthResult scan_source_bfs(const Word& f, unsigned m, const OracleOptions& options) {
  const CubeGraph g = CubeGraph::build(m, f, options.edges, options.cap);
  const std::vector<std::uint64_t> vertices = g.vertices();
  const std::size_t chunks = (vertices.size() + kChunk - 1) / kChunk;
  std::vector<std::vector<PairHit>> per_chunk(chunks);
  std::atomic<std::size_t> first_hit_chunk{std::numeric_limits<std::size_t>::max()};

  auto body = [&](std::size_t c) {
    const std::size_t begin = c * kChunk;
    const std::size_t end = std::min<std::size_t>(vertices.size(), begin + kChunk);
    std::vector<std::uint8_t> full(vertices.size());
    std::vector<PairHit> hits;
    for (std::size_t a = begin; a < end; ++a) {
      const std::uint64_t u = vertices[a];
      const std::vector<std::int8_t> inside = bfs_distances(g, u);
      if (options.edges == EdgeSet::kTilde) {
        kernels::active().tilde_distance_batch(u, vertices.data(), vertices.size(), m, full.data());
      } else {
        kernels::active().hamming_distance_batch(u, vertices.data(), vertices.size(), full.data());
      }
      for (std::size_t b = 0; b < vertices.size(); ++b) {
        const std::int8_t d = inside[vertices[b]];
        if (d >= 0 && static_cast<unsigned>(d) == full[b]) continue;
        hits.push_back({u, vertices[b], full[b]});
        if (options.first_violation) break;
      }
      if (options.first_violation && !hits.empty()) break;
    }
    if (!hits.empty() && options.first_violation) {
      std::size_t seen = first_hit_chunk.load();
      while (c < seen && !first_hit_chunk.compare_exchange_weak(seen, c)) {
      }
    }
    per_chunk[c] = std::move(hits);
  };
  auto skip = [&](std::size_t c) { return options.first_violation && c > first_hit_chunk.load(); };
  for_each_chunk(chunks, worker_count(options.threads), body, skip);

  LengthResult result;
  std::vector<PairHit> all;
  for (auto& hits : per_chunk) all.insert(all.end(), hits.begin(), hits.end());
  if (all.empty()) return result;
  result.violated = true;
  if (options.first_violation) {
    result.first = all.front();
    result.minimal_distance = result.first.distance;
    return result;
  }
  unsigned best = std::numeric_limits<unsigned>::max();
  for (const auto& h : all) best = std::min(best, h.distance);
  for (const auto& h : all) {
    if (h.distance == best && h.u < h.v) result.minimal.push_back(h);
  }
  std::sort(result.minimal.begin(), result.minimal.end(), [](const PairHit& a, const PairHit& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  result.first = result.minimal.front();
  result.minimal_distance = best;
  return result;
}

LengthResult scan_length(const Word& f, unsigned m, const OracleOptions& options) {
  return options.strategy == OracleStrategy::kBlockedPairs ? scan_blocked_pairs(f, m, options)
                                                           : scan_source_bfs(f, m, options);
}

}  // namespace

std::size_t cube_cap() {
  const char* env = std::getenv("TILDE_ISO_MAX_CUBE");
  if (env == nullptr) return kDefaultCubeCap;
  const std::string_view text(env);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0 ||
      value > kAbsoluteCubeLimit) {
    return kDefaultCubeCap;
  }
  return value;
}

CubeGraph CubeGraph::build(std::size_t m, const std::optional<Word>& avoid, EdgeSet edges,
                           std::optional<std::size_t> cap) {
  require_within_cap(m, cap);
  if (avoid && avoid->empty()) throw Error(ErrorCode::kTooShort, "avoided word is empty");
  CubeGraph g;
  g.m_ = m;
  g.avoid_ = avoid;
  g.edges_ = edges;
  const std::uint64_t total = std::uint64_t{1} << m;
  g.present_.assign(static_cast<std::size_t>((total + 63) / 64), 0);
  if (!avoid || avoid->size() > m) {
    for (std::uint64_t c = 0; c < total; ++c) g.present_[c >> 6] |= std::uint64_t{1} << (c & 63);
    g.vertex_count_ = static_cast<std::size_t>(total);
    return g;
  }
  const kernels::WindowScan scan{static_cast<std::uint32_t>(avoid->code()),
                                 static_cast<unsigned>(avoid->size()), static_cast<unsigned>(m),
                                 kernels::Metric::kTilde};
  std::vector<std::uint8_t> flags;
  for (std::uint64_t first = 0; first < total; first += kChunk) {
    const std::size_t count = static_cast<std::size_t>(std::min(kChunk, total - first));
    flags.resize(count);
    kernels::active().scan_windows(scan, static_cast<std::uint32_t>(first), count, flags.data());
    for (std::size_t k = 0; k < count; ++k) {
      if (flags[k] & kernels::kContainsF) continue;
      const std::uint64_t c = first + k;
      g.present_[c >> 6] |= std::uint64_t{1} << (c & 63);
      ++g.vertex_count_;
    }
  }
  return g;
}

bool CubeGraph::has_vertex(const Word& w) const {
  return w.size() == m_ && has_vertex(w.code());
}

std::vector<std::uint64_t> CubeGraph::vertices() const {
  std::vector<std::uint64_t> out;
  out.reserve(vertex_count_);
  for (std::size_t b = 0; b < present_.size(); ++b) {
    for (std::uint64_t bits = present_[b]; bits != 0; bits &= bits - 1) {
      out.push_back((std::uint64_t{b} << 6) + static_cast<std::uint64_t>(std::countr_zero(bits)));
    }
  }
  return out;
}

void CubeGraph::neighbours(std::uint64_t code, std::vector<std::uint64_t>& out) const {
  out.clear();
  for (std::size_t k = 0; k < m_; ++k) {
    const std::uint64_t w = code ^ (std::uint64_t{1} << k);
    if (has_vertex(w)) out.push_back(w);
  }
  if (edges_ == EdgeSet::kTilde) {
    for (std::size_t k = 0; k + 1 < m_; ++k) {
      if ((((code >> k) ^ (code >> (k + 1))) & 1U) == 0) continue;
      const std::uint64_t w = code ^ (std::uint64_t{3} << k);
      if (has_vertex(w)) out.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());
}

std::vector<Word> CubeGraph::neighbours(const Word& w) const {
  if (!has_vertex(w)) throw Error(ErrorCode::kNotInGraph, "\"" + w.str() + "\" is not a vertex");
  std::vector<std::uint64_t> codes;
  neighbours(w.code(), codes);
  std::vector<Word> out;
  out.reserve(codes.size());
  for (const auto c : codes) out.push_back(word(c));
  return out;
}

std::size_t CubeGraph::degree(const Word& w) const { return neighbours(w).size(); }

std::vector<std::pair<std::uint64_t, std::uint64_t>> CubeGraph::edges() const {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  std::vector<std::uint64_t> adj;
  for (const auto a : vertices()) {
    neighbours(a, adj);
    for (const auto b : adj) {
      if (a < b) out.emplace_back(a, b);
    }
  }
  return out;
}

std::size_t CubeGraph::edge_count() const { return edges().size(); }

std::vector<std::int8_t> bfs_distances(const CubeGraph& g, std::uint64_t source) {
  std::vector<std::int8_t> dist(std::size_t{1} << g.length(), -1);
  if (!g.has_vertex(source)) return dist;
  std::vector<std::uint64_t> frontier{source};
  std::vector<std::uint64_t> next;
  std::vector<std::uint64_t> adj;
  dist[source] = 0;
  for (std::int8_t d = 1; !frontier.empty(); ++d) {
    next.clear();
    for (const auto x : frontier) {
      g.neighbours(x, adj);
      for (const auto y : adj) {
        if (dist[y] >= 0) continue;
        dist[y] = d;
        next.push_back(y);
      }
    }
    frontier.swap(next);
  }
  return dist;
}

std::optional<std::size_t> restricted_distance(const CubeGraph& g, const Word& u, const Word& v) {
  for (const Word* w : {&u, &v}) {
    if (w->size() != g.length()) {
      throw Error(ErrorCode::kLengthMismatch, "\"" + w->str() + "\" does not have length " +
                                                  std::to_string(g.length()));
    }
    if (!g.has_vertex(*w)) {
      throw Error(ErrorCode::kNotInGraph, "\"" + w->str() + "\" is not a vertex");
    }
  }
  const std::uint64_t a = u.code();
  const std::uint64_t b = v.code();
  if (a == b) return 0;

  // Bidirectional BFS; each round expands the smaller frontier by one full
  // level and takes the shortest meeting found in that level.
  const std::size_t size = std::size_t{1} << g.length();
  std::vector<std::uint8_t> dist_a(size, kUnvisited);
  std::vector<std::uint8_t> dist_b(size, kUnvisited);
  dist_a[a] = 0;
  dist_b[b] = 0;
  std::vector<std::uint64_t> front_a{a};
  std::vector<std::uint64_t> front_b{b};
  std::size_t level_a = 0;
  std::size_t level_b = 0;
  std::vector<std::uint64_t> next;
  std::vector<std::uint64_t> adj;
  while (!front_a.empty() && !front_b.empty()) {
    const bool expand_a = front_a.size() <= front_b.size();
    auto& front = expand_a ? front_a : front_b;
    auto& mine = expand_a ? dist_a : dist_b;
    const auto& theirs = expand_a ? dist_b : dist_a;
    std::size_t& level = expand_a ? level_a : level_b;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    next.clear();
    for (const auto x : front) {
      g.neighbours(x, adj);
      for (const auto y : adj) {
        if (theirs[y] != kUnvisited) best = std::min(best, level + 1 + theirs[y]);
        if (mine[y] != kUnvisited) continue;
        mine[y] = static_cast<std::uint8_t>(level + 1);
        next.push_back(y);
      }
    }
    if (best != std::numeric_limits<std::size_t>::max()) return best;
    front.swap(next);
    ++level;
  }
  return std::nullopt;
}

std::size_t default_oracle_bound(const Word& f) { return (5 * f.size() + 1) / 2; }

OracleReport oracle_check(const Word& f, const OracleOptions& options) {
  if (f.empty()) throw Error(ErrorCode::kTooShort, "avoided word is empty");
  OracleReport report;
  report.f = f;
  report.max_len = options.max_len.value_or(default_oracle_bound(f));
  require_within_cap(report.max_len, options.cap);
  for (std::size_t m = f.size(); m <= report.max_len; ++m) {
    if (m < 2) continue;
    const LengthResult r = scan_length(f, static_cast<unsigned>(m), options);
    if (!r.violated) continue;
    report.verdict = OracleVerdict::kViolation;
    Violation violation;
    violation.m = m;
    violation.u = Word::from_code(m, r.first.u);
    violation.v = Word::from_code(m, r.first.v);
    violation.full_distance = r.first.distance;
    if (options.measure_restricted_distance) {
      const CubeGraph g = CubeGraph::build(m, f, options.edges, options.cap);
      violation.restricted_distance = restricted_distance(g, violation.u, violation.v);
    }
    report.violation = std::move(violation);
    report.minimal_distance = r.minimal_distance;
    for (const auto& h : r.minimal) {
      report.minimal_pairs.emplace_back(Word::from_code(m, h.u), Word::from_code(m, h.v));
    }
    break;
  }
  return report;
}

OracleReport oracle_check(const Word& f, std::size_t max_len, bool first_violation) {
  OracleOptions options;
  options.max_len = max_len;
  options.first_violation = first_violation;
  return oracle_check(f, options);
}

std::vector<WitnessPair> find_min_witnesses(const Word& f, std::size_t m,
                                            const OracleOptions& options) {
  if (f.empty()) throw Error(ErrorCode::kTooShort, "avoided word is empty");
  require_within_cap(m, options.cap);
  std::vector<WitnessPair> out;
  if (m < f.size() || m < 2) return out;
  OracleOptions local = options;
  local.first_violation = false;
  for (const auto& h : scan_length(f, static_cast<unsigned>(m), local).minimal) {
    out.push_back({Word::from_code(m, h.u), Word::from_code(m, h.v), Construction::kExternal,
                   Verification::kUnchecked});
  }
  return out;
}

std::string export_graph(const CubeGraph& g, GraphFormat format) {
  const auto vertices = g.vertices();
  const auto edges = g.edges();
  auto text = [&](std::uint64_t c) { return g.word(c).str(); };
  std::ostringstream out;
  switch (format) {
    case GraphFormat::kDot: {
      out << "graph Q {\n";
      for (const auto c : vertices) out << "  \"" << text(c) << "\";\n";
      for (const auto& [a, b] : edges) out << "  \"" << text(a) << "\" -- \"" << text(b) << "\";\n";
      out << "}\n";
      break;
    }
    case GraphFormat::kEdgeList:
      for (const auto& [a, b] : edges) out << text(a) << ' ' << text(b) << '\n';
      break;
    case GraphFormat::kJson: {
      nlohmann::json doc;
      doc["m"] = g.length();
      doc["avoid"] = g.avoid() ? nlohmann::json(g.avoid()->str()) : nlohmann::json(nullptr);
      doc["edge_set"] = g.edge_set() == EdgeSet::kTilde ? "tilde" : "hamming";
      auto& nodes = doc["nodes"] = nlohmann::json::array();
      for (const auto c : vertices) nodes.push_back(text(c));
      auto& list = doc["edges"] = nlohmann::json::array();
      for (const auto& [a, b] : edges) list.push_back({text(a), text(b)});
      out << doc.dump() << '\n';
      break;
    }
  }
  return out.str();
}

}  // namespace tildeiso

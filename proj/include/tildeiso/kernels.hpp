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

// Data-parallel kernels over short words encoded as integers.
//
// A code is the most-significant-first encoding produced by Word::code():
// for a word of length m, symbol 1 is bit m-1 and symbol m is bit 0. Every
// kernel has a portable scalar reference and an AVX2 variant; the active
// table is chosen once at runtime and both are checked for equivalence in
// tests/kernels_test.cpp.

#ifndef TILDEISO_KERNELS_HPP_
#define TILDEISO_KERNELS_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace tildeiso::kernels {

enum class Isa { kScalar, kAvx2 };

std::string_view to_string(Isa isa);

// Which neighbourhood the window scan treats as "one edit away from f".
enum class Metric { kTilde, kHamming };

// Scan parameters for scan_windows: the avoided word as a code of `f_length`
// symbols, scanned inside words of `word_length` symbols (<= 32).
struct WindowScan {
  std::uint32_t f_code = 0;
  unsigned f_length = 0;
  unsigned word_length = 0;
  Metric metric = Metric::kTilde;
};

// Flag byte produced by scan_windows for each word.
inline constexpr std::uint8_t kContainsF = 0x01;
// Bits 1..7 hold min(number of near windows, 127), where a near window is a
// length-|f| window that one operation (of the metric) turns into f.
inline constexpr unsigned kNearShift = 1;
inline constexpr std::uint8_t kNearMax = 127;

inline unsigned near_count(std::uint8_t flags) { return flags >> kNearShift; }

struct KernelTable {
  Isa isa;
  // out[k] = tilde distance between `u` and vs[k], all of length `length`.
  void (*tilde_distance_batch)(std::uint64_t u, const std::uint64_t* vs,
                               std::size_t count, unsigned length, std::uint8_t* out);
  void (*hamming_distance_batch)(std::uint64_t u, const std::uint64_t* vs,
                                 std::size_t count, std::uint8_t* out);
  // Flags for the contiguous code range [first, first + count).
  void (*scan_windows)(const WindowScan& scan, std::uint32_t first, std::size_t count,
                       std::uint8_t* flags);
};

const KernelTable& scalar_table();
// nullptr when the binary was built without AVX2 support.
const KernelTable* avx2_table();

bool cpu_supports(Isa isa);

// The table used by the library: AVX2 when the CPU supports it, unless the
// TILDEISO_ISA environment variable says "scalar" or an override is set.
const KernelTable& active();

// Forces a specific ISA (nullopt restores automatic selection). Test hook.
void set_isa_override(std::optional<Isa> isa);

// Tilde distance of two codes of `length` symbols.
//
// Mismatching columns cost one replacement each, except that a run of
// consecutive mismatches whose top symbols alternate can be paired into
// swaps. Pairing inside a run of L swappable adjacencies saves ceil(L/2)
// operations, which equals the number of edges at even offset from the start
// of each run.
inline unsigned tilde_distance_code(std::uint64_t u, std::uint64_t v, unsigned length) {
  const std::uint64_t mask = length >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << length) - 1);
  const std::uint64_t diff = (u ^ v) & mask;
  const std::uint64_t edges = diff & (diff >> 1) & (u ^ (u >> 1));
  constexpr std::uint64_t kEven = 0x5555555555555555ULL;
  const std::uint64_t starts = edges & ~(edges << 1);
  const std::uint64_t even_runs = edges & ~(edges + (starts & kEven));
  const std::uint64_t odd_runs = edges & ~even_runs;
  const std::uint64_t paired = (even_runs & kEven) | (odd_runs & ~kEven);
  return static_cast<unsigned>(std::popcount(diff) - std::popcount(paired));
}

inline unsigned hamming_distance_code(std::uint64_t u, std::uint64_t v) {
  return static_cast<unsigned>(std::popcount(u ^ v));
}

}  // namespace tildeiso::kernels

#endif  // TILDEISO_KERNELS_HPP_

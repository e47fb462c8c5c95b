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

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string_view>

#include "tildeiso/kernels.hpp"

namespace tildeiso::kernels {

namespace {

void tilde_distance_batch_scalar(std::uint64_t u, const std::uint64_t* vs, std::size_t count,
                                 unsigned length, std::uint8_t* out) {
  for (std::size_t k = 0; k < count; ++k) {
    out[k] = static_cast<std::uint8_t>(tilde_distance_code(u, vs[k], length));
  }
}

void hamming_distance_batch_scalar(std::uint64_t u, const std::uint64_t* vs, std::size_t count,
                                   std::uint8_t* out) {
  for (std::size_t k = 0; k < count; ++k) {
    out[k] = static_cast<std::uint8_t>(hamming_distance_code(u, vs[k]));
  }
}

bool is_near(std::uint32_t x, std::uint32_t f_alternation, Metric metric) {
  if (x == 0) return false;
  const std::uint32_t low = x & (0U - x);
  if (x == low) return true;
  if (metric == Metric::kHamming) return false;
  // Two adjacent mismatches fixed by one swap: f must alternate there.
  return (x ^ low) == (low << 1) && (low & f_alternation) != 0;
}

void scan_windows_scalar(const WindowScan& scan, std::uint32_t first, std::size_t count,
                         std::uint8_t* flags) {
  const std::uint32_t f_mask =
      scan.f_length >= 32 ? ~0U : ((std::uint32_t{1} << scan.f_length) - 1);
  const std::uint32_t f_alternation = (scan.f_code ^ (scan.f_code >> 1)) & (f_mask >> 1);
  const unsigned windows =
      scan.word_length >= scan.f_length ? scan.word_length - scan.f_length + 1 : 0;
  for (std::size_t k = 0; k < count; ++k) {
    const std::uint32_t w = first + static_cast<std::uint32_t>(k);
    std::uint8_t contains = 0;
    unsigned near = 0;
    for (unsigned s = 0; s < windows; ++s) {
      const std::uint32_t x = ((w >> s) & f_mask) ^ scan.f_code;
      if (x == 0) {
        contains = kContainsF;
      } else if (is_near(x, f_alternation, scan.metric)) {
        ++near;
      }
    }
    flags[k] = static_cast<std::uint8_t>(
        contains | (std::min<unsigned>(near, kNearMax) << kNearShift));
  }
}

constexpr KernelTable kScalarTable{
    Isa::kScalar,
    &tilde_distance_batch_scalar,
    &hamming_distance_batch_scalar,
    &scan_windows_scalar,
};

std::atomic<int> g_override{-1};

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
  }
  return "unknown";
}

const KernelTable& scalar_table() { return kScalarTable; }

bool cpu_supports(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(__x86_64__) || defined(__i386__)
      return avx2_table() != nullptr && __builtin_cpu_supports("avx2") &&
             __builtin_cpu_supports("popcnt");
#else
      return false;
#endif
  }
  return false;
}

void set_isa_override(std::optional<Isa> isa) {
  g_override.store(isa ? static_cast<int>(*isa) : -1);
}

const KernelTable& active() {
  const int forced = g_override.load();
  if (forced >= 0) {
    const auto isa = static_cast<Isa>(forced);
    if (isa == Isa::kAvx2 && cpu_supports(Isa::kAvx2)) return *avx2_table();
    return kScalarTable;
  }
  static const KernelTable* chosen = [] {
    const char* env = std::getenv("TILDEISO_ISA");
    if (env != nullptr && std::string_view(env) == "scalar") return &kScalarTable;
    return cpu_supports(Isa::kAvx2) ? avx2_table() : &kScalarTable;
  }();
  return *chosen;
}

}  // namespace tildeiso::kernels

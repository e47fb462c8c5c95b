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

#ifndef TILDEISO_WITNESS_HPP_
#define TILDEISO_WITNESS_HPP_

#include <string_view>

#include "tildeiso/word.hpp"

namespace tildeiso {

// How a candidate witness pair was produced.
enum class Construction {
  kAlphaBeta,      // pre_r(f) O_i(f) / pre_r(f) O_j(f)
  kAlphaBetaSwap,  // pre_r(f) S_i(f) / pre_r(f) R_{i+2}(f)
  kEtaGamma,       // pre_r(f) O_i(f) suf_{r/2}(f) / pre_r(f) O_j(O_t(f)) suf_{r/2}(f)
  kAlphaDelta,     // pre_r(f) S_i(f) / pre_r(f) S_{i+2}(f)
  kAlphaPsi,       // pre_r(f) R_1(f) / pre_{r-1}(f) 1 S_2(f)
  kAlphaPsiBoundary,  // pre_r(f) R_1(f) / pre_{r-1}(f) ~f[r] R_3(f)
  kInnerReplace,   // pre_r(f) R_{i+2}(f) / pre_r(f) R_{i+3}(f), when eta/gamma fails
  kOneError,       // pre_r(f) R_i(f) / pre_r(f) R_{i+1}(f), single swap overlaps
  kExternal,       // supplied by a caller or found by the oracle
};

enum class Verification { kConfirmed, kRefuted, kUnchecked };

std::string_view to_string(Construction c);
std::string_view to_string(Verification v);

struct WitnessPair {
  Word u;
  Word v;
  Construction construction = Construction::kExternal;
  Verification verified = Verification::kUnchecked;
};

}  // namespace tildeiso

#endif  // TILDEISO_WITNESS_HPP_

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

#ifndef TILDEISO_ISOMETRY_HPP_
#define TILDEISO_ISOMETRY_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tildeiso/cube_oracle.hpp"
#include "tildeiso/edit_distance.hpp"
#include "tildeiso/overlap.hpp"
#include "tildeiso/witness.hpp"
#include "tildeiso/word.hpp"

namespace tildeiso {

enum class CaseId { kC0, kC1, kC2, kC3, kC4, kC5 };

std::string_view to_string(CaseId id);

// An element of the group generated by complementing both rows, reversing
// both rows and exchanging the rows of an alignment.
//
// `complement` and `reverse` act on the word: the frame word is
// complement^c(reverse^r(f)), whose alignments are those of f complemented
// and/or reversed with the rows exchanged. `row_exchange` then swaps the two
// rows of a block, which no word-level map realizes.
struct Symmetry {
  bool complement = false;
  bool reverse = false;
  bool row_exchange = false;

  // "identity", or the generators joined by '+'.
  std::string str() const;
  friend bool operator==(const Symmetry&, const Symmetry&) = default;
};

// The word-level part of s applied to w; it is an involution.
Word apply_symmetry(const Symmetry& s, const Word& w);

// {f, reverse(f), complement(f), complement(reverse(f))} without repeats,
// sorted.
std::vector<Word> symmetry_closure(const Word& f);

struct CaseMatch {
  CaseId case_id = CaseId::kC0;
  Symmetry symmetry;
  Word frame;              // apply_symmetry(symmetry, f)
  OverlapRecord overlap;   // the overlap of `frame` that matched
  // The operation(s) of the matched transformation, positions in `frame`.
  std::vector<EditOp> transformation;
  std::size_t block_position = 0;  // first overlap column of the block

  std::size_t shift() const { return overlap.shift; }
  std::size_t length() const { return overlap.length; }
};

// Every case match over all overlaps of f, at most one per (case, overlap
// length), ordered by (shift, case). Throws Error{kTooShort} when |f| < 2.
std::vector<CaseMatch> classify(const Word& f);

// Builds the case's candidate witness pair for f (unverified). Throws
// Error{kConstructionFailure} when a required operation does not apply.
WitnessPair build_witness(const Word& f, const CaseMatch& match);

enum class WitnessCondition { kNone, kDistance, kNotFree, kFreeTransformation };

std::string_view to_string(WitnessCondition c);

struct WitnessCheck {
  Verification status = Verification::kUnchecked;
  WitnessCondition failed = WitnessCondition::kNone;
  std::size_t distance = 0;
  // When failed == kFreeTransformation: one shortest transformation from u to
  // v whose words all avoid f.
  std::optional<Transformation> certificate;
};

// Throws Error{kLengthMismatch} for |u| != |v| and Error{kTooShort} for an
// empty f.
WitnessCheck verify_witness(const Word& f, const Word& u, const Word& v);

struct IsometryOptions {
  bool oracle_fallback = true;
  std::optional<std::size_t> oracle_bound;  // default ceil(5|f| / 2), capped
  std::optional<std::size_t> cube_cap;
  std::size_t threads = 1;
};

struct MatchOutcome {
  CaseMatch match;
  std::optional<WitnessPair> witness;  // absent when construction failed
  Verification status = Verification::kUnchecked;
  std::string note;
};

struct IsometryVerdict {
  bool isometric = true;
  std::string reason;
  std::vector<MatchOutcome> outcomes;  // in classify order
  std::optional<WitnessPair> witness;  // first confirmed pair
  std::vector<std::string> anomalies;
  std::optional<OracleReport> oracle;  // present when the fallback ran

  // The classifier's own answer: some match has a confirmed witness.
  bool classifier_non_isometric() const { return witness.has_value(); }
};

IsometryVerdict decide_tilde_isometry(const Word& f, const IsometryOptions& options = {});

bool is_tilde_isometric(const Word& f);

// Replacement-only isometry. Throws Error{kTooShort} when |f| < 2.
bool is_ham_isometric(const Word& f);

}  // namespace tildeiso

#endif  // TILDEISO_ISOMETRY_HPP_

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

#include "tildeiso/isometry.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>
#include <utility>

#include "tildeiso/error.hpp"

namespace tildeiso {

namespace {

constexpr Symmetry kFrames[] = {
    {false, false, false},
    {true, false, false},
    {false, true, false},
    {true, true, false},
};

std::string case_label(const CaseMatch& m) {
  return std::string(to_string(m.case_id)) + " at shift " + std::to_string(m.shift()) +
         " (length " + std::to_string(m.length()) + ")";
}

// The two rows of an alignment as text, index = alignment column.
struct Rows {
  std::string top;
  std::string bottom;
  std::size_t length;  // overlap columns 1..length

  bool mismatch(std::size_t c) const { return top[c] != bottom[c]; }
};

Rows rows_of(const Word& g, std::size_t length) {
  const Alignment a = alignment(g, length);
  return {a.top_str(), a.bottom_str(), length};
}

std::vector<std::size_t> mismatches(const Rows& rows) {
  std::vector<std::size_t> out;
  for (std::size_t c = 1; c <= rows.length; ++c) {
    if (rows.mismatch(c)) out.push_back(c);
  }
  return out;
}

bool consecutive(const std::vector<std::size_t>& cols, std::size_t count) {
  return cols.size() == count && cols.back() - cols.front() + 1 == count;
}

// The three-column error block of the 000/101 orbit: both errors on the
// ends, one row constant across the block.
bool is_constant_row_block(const Rows& rows, const std::vector<std::size_t>& errs) {
  if (errs.size() != 2 || errs[1] != errs[0] + 2) return false;
  const std::size_t i = errs[0];
  auto constant = [&](const std::string& row) { return row[i] == row[i + 1] && row[i + 1] == row[i + 2]; };
  return constant(rows.top) || constant(rows.bottom);
}

// A 000/101-orbit block still yields a witness when it opens the overlap
// and the bottom context symbol repeats the first top symbol. The mirrored
// position (closing the overlap) is reached through the reversed frames.
bool boundary_block_counts(const Rows& rows, std::size_t i) {
  return i == 1 && rows.bottom[0] == rows.top[1];
}

struct FrameMatcher {
  const Word& g;
  const Symmetry& frame;
  std::vector<CaseMatch>& out;

  void add(CaseId id, const OverlapRecord& rec, std::vector<EditOp> ops, std::size_t block,
           bool row_exchange) {
    CaseMatch m;
    m.case_id = id;
    m.symmetry = frame;
    m.symmetry.row_exchange = row_exchange;
    m.frame = g;
    m.overlap = rec;
    m.transformation = std::move(ops);
    m.block_position = block;
    out.push_back(std::move(m));
  }

  void match_one_error(const OverlapRecord& rec, const Rows& rows) {
    const EditOp op = rec.transformations.at(0).ops.at(0);
    if (!op.is_swap()) return;
    add(CaseId::kC0, rec, {op}, op.position, rows.top[op.position] == '1');
  }

  void match_two_errors(const OverlapRecord& rec, const Rows& rows) {
    const std::vector<std::size_t> errs = mismatches(rows);
    const std::size_t l = rows.length;

    const ErrorGeometry geometry = error_geometry(rec);
    if (geometry.kind == Adjacency::kNonAdjacent) {
      const bool excluded =
          is_constant_row_block(rows, errs) && !boundary_block_counts(rows, errs[0]);
      if (!excluded) {
        add(CaseId::kC1, rec, {geometry.ops.first, geometry.ops.second},
            geometry.error_columns.front(), false);
      }
    }

    if (consecutive(errs, 4)) {
      const std::size_t i = errs[0];
      if (rows.top[i] != rows.top[i + 1] && rows.top[i + 2] != rows.top[i + 3]) {
        add(CaseId::kC2, rec, {EditOp::swap(i), EditOp::swap(i + 2)}, i, rows.top[i] == '1');
      }
    }

    if (consecutive(errs, 3)) {
      const std::size_t i = errs[0];
      const std::string block = rows.top.substr(i, 3);
      if (block == "010" || block == "101") {
        add(CaseId::kC3, rec, {EditOp::swap(i), EditOp::replace(i + 2)}, i, block == "101");
      }
      if (i + 2 == l && block == "011" && rows.top[l + 1] == '0') {
        add(CaseId::kC4, rec, {EditOp::swap(i), EditOp::replace(i + 2)}, i, false);
      }
    }

    if (l == 2 && rows.top.substr(1, 2) == "00" && rows.bottom.substr(1, 2) == "11" &&
        rows.top[3] == '1' && rows.bottom[0] == '0') {
      add(CaseId::kC5, rec, {EditOp::replace(1), EditOp::replace(2)}, 1, false);
    }
  }
};

Word concat(std::initializer_list<Word> parts) {
  Word out;
  for (const Word& p : parts) out += p;
  return out;
}

Word apply_or_fail(const EditOp& op, const Word& w) {
  if (!is_applicable(op, w)) {
    throw Error(ErrorCode::kConstructionFailure,
                op.str() + " does not apply to \"" + w.str() + "\"");
  }
  return apply(op, w);
}

// Depth-first search for a shortest transformation from w to v through
// words avoiding f; `dead` remembers words with no such continuation.
bool find_free_geodesic(const Word& w, const Word& v, const Word& f, std::size_t remaining,
                        std::unordered_set<Word, WordHash>& dead, Transformation& path) {
  if (remaining == 0) return true;
  for (const EditOp& op : applicable_ops(w)) {
    const Word next = apply(op, w);
    if (tilde_distance(next, v) + 1 != remaining) continue;
    if (!is_free(next, f) || dead.count(next) != 0) continue;
    path.ops.push_back(op);
    path.words.push_back(next);
    if (find_free_geodesic(next, v, f, remaining - 1, dead, path)) return true;
    path.ops.pop_back();
    path.words.pop_back();
    dead.insert(next);
  }
  return false;
}

}  // namespace

std::string_view to_string(CaseId id) {
  switch (id) {
    case CaseId::kC0: return "C0";
    case CaseId::kC1: return "C1";
    case CaseId::kC2: return "C2";
    case CaseId::kC3: return "C3";
    case CaseId::kC4: return "C4";
    case CaseId::kC5: return "C5";
  }
  return "?";
}

std::string_view to_string(Construction c) {
  switch (c) {
    case Construction::kAlphaBeta: return "alpha_beta";
    case Construction::kAlphaBetaSwap: return "alpha_beta_swap";
    case Construction::kEtaGamma: return "eta_gamma";
    case Construction::kAlphaDelta: return "alpha_delta";
    case Construction::kAlphaPsi: return "alpha_psi";
    case Construction::kAlphaPsiBoundary: return "alpha_psi_boundary";
    case Construction::kInnerReplace: return "inner_replace";
    case Construction::kOneError: return "one_error";
    case Construction::kExternal: return "external";
  }
  return "?";
}

std::string_view to_string(Verification v) {
  switch (v) {
    case Verification::kConfirmed: return "confirmed";
    case Verification::kRefuted: return "refuted";
    case Verification::kUnchecked: return "unchecked";
  }
  return "?";
}

std::string_view to_string(WitnessCondition c) {
  switch (c) {
    case WitnessCondition::kNone: return "none";
    case WitnessCondition::kDistance: return "distance";
    case WitnessCondition::kNotFree: return "not_free";
    case WitnessCondition::kFreeTransformation: return "free_transformation";
  }
  return "?";
}

std::string Symmetry::str() const {
  std::string s;
  auto add = [&](const char* part) {
    if (!s.empty()) s += '+';
    s += part;
  };
  if (complement) add("complement");
  if (reverse) add("reverse");
  if (row_exchange) add("row-exchange");
  return s.empty() ? "identity" : s;
}

Word apply_symmetry(const Symmetry& s, const Word& w) {
  Word out = s.reverse ? tildeiso::reverse(w) : w;
  return s.complement ? tildeiso::complement(out) : out;
}

std::vector<Word> symmetry_closure(const Word& f) {
  std::set<Word> orbit;
  for (const Symmetry& s : kFrames) orbit.insert(apply_symmetry(s, f));
  return {orbit.begin(), orbit.end()};
}

std::vector<CaseMatch> classify(const Word& f) {
  if (f.size() < 2) {
    throw Error(ErrorCode::kTooShort, "classification needs |f| >= 2");
  }
  std::vector<CaseMatch> found;
  for (const Symmetry& frame : kFrames) {
    const Word g = apply_symmetry(frame, f);
    FrameMatcher matcher{g, frame, found};
    for (std::size_t l = 1; l < g.size(); ++l) {
      const std::size_t q = tilde_distance(prefix(g, l), suffix(g, l));
      if (q != 1 && q != 2) continue;
      const OverlapRecord rec = overlap_at(g, l);
      const Rows rows = rows_of(g, l);
      if (q == 1) {
        matcher.match_one_error(rec, rows);
      } else {
        matcher.match_two_errors(rec, rows);
      }
    }
  }
  std::vector<CaseMatch> out;
  std::set<std::pair<CaseId, std::size_t>> seen;
  for (auto& m : found) {
    if (seen.insert({m.case_id, m.length()}).second) out.push_back(std::move(m));
  }
  std::stable_sort(out.begin(), out.end(), [](const CaseMatch& a, const CaseMatch& b) {
    return std::pair(a.shift(), a.case_id) < std::pair(b.shift(), b.case_id);
  });
  return out;
}

WitnessPair build_witness(const Word& f, const CaseMatch& match) {
  const Word& g = match.frame;
  if (apply_symmetry(match.symmetry, f) != g) {
    throw Error(ErrorCode::kConstructionFailure, "match does not belong to \"" + f.str() + "\"");
  }
  const std::size_t r = match.shift();
  const Word pre = prefix(g, r);
  const auto& ops = match.transformation;
  WitnessPair pair;
  try {
    switch (match.case_id) {
      case CaseId::kC0: {
        const std::size_t i = ops.at(0).position;
        pair.u = pre + apply_or_fail(EditOp::replace(i), g);
        pair.v = pre + apply_or_fail(EditOp::replace(i + 1), g);
        pair.construction = Construction::kOneError;
        break;
      }
      case CaseId::kC1:
      case CaseId::kC2: {
        const OpPair p{ops.at(0), ops.at(1)};
        const Rows rows = rows_of(g, match.length());
        if (match.case_id == CaseId::kC1 && is_constant_row_block(rows, mismatches(rows))) {
          const Word flipped = Word::from_code(1, g.at(r) == 0 ? 1 : 0);
          pair.u = pre + apply_or_fail(EditOp::replace(1), g);
          pair.v = concat({prefix(g, r - 1), flipped, apply_or_fail(EditOp::replace(3), g)});
          pair.construction = Construction::kAlphaPsiBoundary;
        } else if (condition_tilde(g, match.overlap, p)) {
          const Word tail = suffix(g, r / 2);
          const std::size_t t = p.second.position + r / 2;
          const EditOp ot{p.first.kind, t};
          pair.u = concat({pre, apply_or_fail(p.first, g), tail});
          pair.v = concat({pre, apply_or_fail(p.second, apply_or_fail(ot, g)), tail});
          pair.construction = Construction::kEtaGamma;
          if (match.case_id == CaseId::kC2 &&
              verify_witness(g, pair.u, pair.v).status != Verification::kConfirmed) {
            const std::size_t i = match.block_position;
            pair.u = pre + apply_or_fail(EditOp::replace(i + 2), g);
            pair.v = pre + apply_or_fail(EditOp::replace(i + 3), g);
            pair.construction = Construction::kInnerReplace;
          }
        } else {
          pair.u = pre + apply_or_fail(p.first, g);
          pair.v = pre + apply_or_fail(p.second, g);
          pair.construction = Construction::kAlphaBeta;
        }
        break;
      }
      case CaseId::kC3: {
        const std::size_t i = match.block_position;
        pair.u = pre + apply_or_fail(EditOp::swap(i), g);
        pair.v = pre + apply_or_fail(EditOp::replace(i + 2), g);
        pair.construction = Construction::kAlphaBetaSwap;
        break;
      }
      case CaseId::kC4: {
        const std::size_t i = match.block_position;
        pair.u = pre + apply_or_fail(EditOp::swap(i), g);
        pair.v = pre + apply_or_fail(EditOp::swap(i + 2), g);
        pair.construction = Construction::kAlphaDelta;
        break;
      }
      case CaseId::kC5: {
        pair.u = pre + apply_or_fail(EditOp::replace(1), g);
        pair.v = concat({prefix(g, r - 1), Word::parse("1"), apply_or_fail(EditOp::swap(2), g)});
        pair.construction = Construction::kAlphaPsi;
        break;
      }
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kConstructionFailure) throw;
    throw Error(ErrorCode::kConstructionFailure, case_label(match) + ": " + e.what());
  }
  pair.u = apply_symmetry(match.symmetry, pair.u);
  pair.v = apply_symmetry(match.symmetry, pair.v);
  pair.verified = Verification::kUnchecked;
  return pair;
}

WitnessCheck verify_witness(const Word& f, const Word& u, const Word& v) {
  if (f.empty()) throw Error(ErrorCode::kTooShort, "avoided word is empty");
  WitnessCheck check;
  check.distance = tilde_distance(u, v);
  check.status = Verification::kRefuted;
  if (check.distance < 2) {
    check.failed = WitnessCondition::kDistance;
    return check;
  }
  if (!is_free(u, f) || !is_free(v, f)) {
    check.failed = WitnessCondition::kNotFree;
    return check;
  }
  std::unordered_set<Word, WordHash> dead;
  Transformation path;
  path.words.push_back(u);
  if (find_free_geodesic(u, v, f, check.distance, dead, path)) {
    check.failed = WitnessCondition::kFreeTransformation;
    check.certificate = std::move(path);
    return check;
  }
  check.status = Verification::kConfirmed;
  return check;
}

IsometryVerdict decide_tilde_isometry(const Word& f, const IsometryOptions& options) {
  if (f.empty()) throw Error(ErrorCode::kTooShort, "empty word");
  IsometryVerdict verdict;
  if (f.size() == 1) {
    verdict.reason = "no overlap lengths";
    return verdict;
  }
  for (CaseMatch& m : classify(f)) {
    MatchOutcome outcome;
    outcome.match = std::move(m);
    try {
      WitnessPair pair = build_witness(f, outcome.match);
      const WitnessCheck check = verify_witness(f, pair.u, pair.v);
      pair.verified = check.status;
      outcome.status = check.status;
      if (check.status != Verification::kConfirmed) {
        outcome.note = "witness refuted: " + std::string(to_string(check.failed));
      }
      outcome.witness = std::move(pair);
    } catch (const Error& e) {
      outcome.status = Verification::kRefuted;
      outcome.note = std::string("construction failed: ") + e.what();
    }
    if (outcome.status == Verification::kConfirmed) {
      if (!verdict.witness) {
        verdict.witness = outcome.witness;
        verdict.reason = "case " + case_label(outcome.match) + " confirmed";
      }
    } else {
      verdict.anomalies.push_back(case_label(outcome.match) + ": " + outcome.note);
    }
    verdict.outcomes.push_back(std::move(outcome));
  }
  verdict.isometric = !verdict.witness.has_value();
  if (!verdict.witness) {
    verdict.reason = verdict.outcomes.empty() ? "no case matched" : "no case confirmed";
  }
  if (!verdict.anomalies.empty() && !verdict.witness && options.oracle_fallback) {
    const std::size_t cap = std::min(options.cube_cap.value_or(cube_cap()), kAbsoluteCubeLimit);
    const std::size_t bound = std::min(options.oracle_bound.value_or(default_oracle_bound(f)), cap);
    if (bound < f.size()) {
      verdict.anomalies.push_back("oracle fallback skipped: bound " + std::to_string(bound) +
                                  " below |f|");
    } else {
      OracleOptions oo;
      oo.max_len = bound;
      oo.threads = options.threads;
      oo.cap = cap;
      verdict.oracle = oracle_check(f, oo);
      verdict.isometric = verdict.oracle->verdict == OracleVerdict::kNoViolation;
      verdict.reason = "oracle fallback up to length " + std::to_string(bound);
    }
  }
  return verdict;
}

bool is_tilde_isometric(const Word& f) { return decide_tilde_isometry(f).isometric; }

bool is_ham_isometric(const Word& f) { return !has_hamming_2_error_overlap(f); }

}  // namespace tildeiso

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

#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "tildeiso/edit_distance.hpp"
#include "tildeiso/error.hpp"
#include "tildeiso/isometry.hpp"
#include "tildeiso/overlap.hpp"
#include "tildeiso/word.hpp"

namespace tildeiso::cli {

namespace {

using nlohmann::json;

CommandResult failure(const std::string& command, const Error& e) {
  CommandResult r;
  r.command = command;
  r.exit_code = e.code() == ErrorCode::kInvalidWord ? kExitInvalidWord : kExitUsage;
  r.payload = {{"error", e.what()}, {"error_code", std::string(to_string(e.code()))}};
  r.diagnostics.push_back(e.what());
  return r;
}

// Runs body and converts library errors into exit codes.
template <typename Body>
CommandResult guarded(const std::string& command, Body body) {
  try {
    CommandResult r = body();
    r.command = command;
    return r;
  } catch (const Error& e) {
    return failure(command, e);
  }
}

Word parse_word(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::kInvalidWord, "empty word");
  return Word::parse(text);
}

json ops_json(const std::vector<EditOp>& ops) {
  json out = json::array();
  for (const auto& op : ops) out.push_back(op.str());
  return out;
}

json transformation_json(const Transformation& t) {
  json words = json::array();
  for (const auto& w : t.words) words.push_back(w.str());
  return {{"ops", ops_json(t.ops)}, {"words", words}};
}

json witness_json(const WitnessPair& w) {
  return {{"u", w.u.str()},
          {"v", w.v.str()},
          {"construction", std::string(to_string(w.construction))},
          {"verified", std::string(to_string(w.verified))}};
}

bool ham_isometric_or_trivial(const Word& f) { return f.size() < 2 || is_ham_isometric(f); }

json oracle_json(const OracleReport& report) {
  json out = {{"word", report.f.str()},
              {"max_len", report.max_len},
              {"verdict", report.verdict == OracleVerdict::kViolation ? "violation" : "no_violation"},
              {"violation", nullptr}};
  if (report.violation) {
    const Violation& v = *report.violation;
    json item = {{"m", v.m}, {"u", v.u.str()}, {"v", v.v.str()}, {"full_distance", v.full_distance}};
    if (v.restricted_distance) {
      item["restricted_distance"] =
          *v.restricted_distance ? json(**v.restricted_distance) : json("unreachable");
    }
    out["violation"] = item;
  }
  json pairs = json::array();
  for (const auto& [u, v] : report.minimal_pairs) pairs.push_back({u.str(), v.str()});
  out["minimal_pairs"] = pairs;
  if (!report.minimal_pairs.empty()) out["minimal_distance"] = report.minimal_distance;
  return out;
}

json classify_payload(const Word& f, const IsometryVerdict& verdict) {
  json cases = json::array();
  for (const MatchOutcome& o : verdict.outcomes) {
    json item = {{"case", std::string(to_string(o.match.case_id))},
                 {"shift", o.match.shift()},
                 {"length", o.match.length()},
                 {"symmetry", o.match.symmetry.str()},
                 {"block_position", o.match.block_position},
                 {"transformation", ops_json(o.match.transformation)},
                 {"confirmed", o.status == Verification::kConfirmed}};
    if (o.witness) item["witness"] = witness_json(*o.witness);
    if (!o.note.empty()) item["note"] = o.note;
    cases.push_back(item);
  }
  json out = {{"word", f.str()},
              {"tilde_isometric", verdict.isometric},
              {"ham_isometric", ham_isometric_or_trivial(f)},
              {"reason", verdict.reason},
              {"cases", cases},
              {"witness", verdict.witness ? witness_json(*verdict.witness) : json(nullptr)},
              {"anomalies", verdict.anomalies}};
  if (verdict.oracle) out["oracle"] = oracle_json(*verdict.oracle);
  return out;
}

IsometryOptions isometry_options(const ClassifyFlags& flags) {
  IsometryOptions o;
  o.oracle_fallback = flags.oracle_fallback;
  o.oracle_bound = flags.oracle_bound;
  o.threads = flags.threads;
  return o;
}

// Indented "key: value" text for a JSON value.
void render_text(const json& value, const std::string& indent, std::ostringstream& out) {
  for (const auto& [key, item] : value.items()) {
    if (item.is_object()) {
      out << indent << key << ":\n";
      render_text(item, indent + "  ", out);
    } else if (item.is_array() && !item.empty() && !item.front().is_primitive()) {
      out << indent << key << ":\n";
      for (const auto& element : item) {
        if (element.is_object()) {
          out << indent << "  -\n";
          render_text(element, indent + "    ", out);
        } else {
          out << indent << "  - " << element.dump() << '\n';
        }
      }
    } else if (item.is_string()) {
      out << indent << key << ": " << item.get<std::string>() << '\n';
    } else {
      out << indent << key << ": " << item.dump() << '\n';
    }
  }
}

}  // namespace

CommandResult cmd_dist(const std::string& u_text, const std::string& v_text, bool show_transforms) {
  return guarded("dist", [&] {
    const Word u = Word::parse(u_text);
    const Word v = Word::parse(v_text);
    CommandResult r;
    r.payload = {{"u", u.str()},
                 {"v", v.str()},
                 {"tilde", tilde_distance(u, v)},
                 {"hamming", hamming_distance(u, v)}};
    if (show_transforms) {
      const auto set = enumerate_minimal_transformations(u, v);
      json list = json::array();
      for (const auto& t : set.items) list.push_back(t.str());
      r.payload["transformations"] = list;
      r.payload["truncated"] = set.truncated;
    }
    return r;
  });
}

CommandResult cmd_transforms(const std::string& u_text, const std::string& v_text,
                             std::optional<std::size_t> cap) {
  return guarded("transforms", [&] {
    const Word u = Word::parse(u_text);
    const Word v = Word::parse(v_text);
    const auto set = enumerate_minimal_transformations(u, v, cap.value_or(kDefaultTransformationCap));
    json list = json::array();
    for (const auto& t : set.items) list.push_back(transformation_json(t));
    CommandResult r;
    r.payload = {{"u", u.str()},
                 {"v", v.str()},
                 {"distance", tilde_distance(u, v)},
                 {"count", set.items.size()},
                 {"truncated", set.truncated},
                 {"transformations", list}};
    if (set.truncated) r.diagnostics.push_back("transformation list truncated");
    return r;
  });
}

CommandResult cmd_overlaps(const std::string& f_text, std::optional<std::size_t> q) {
  return guarded("overlaps", [&] {
    const Word f = parse_word(f_text);
    OverlapOptions options;
    options.enumerate_up_to_q = 3;
    const auto records = q ? q_overlaps(f, *q, options) : all_overlaps(f, options);
    json list = json::array();
    for (const OverlapRecord& rec : records) {
      const Alignment a = alignment(f, rec.length);
      json item = {{"length", rec.length},
                   {"shift", rec.shift},
                   {"q", rec.q},
                   {"hamming_q", rec.hamming_q},
                   {"top", rec.top.str()},
                   {"bottom", rec.bottom.str()},
                   {"alignment", {{"top", a.top_str()}, {"bottom", a.bottom_str()}}}};
      // Transformations are listed up to q = 3; longer lists are null.
      item["transformations"] = nullptr;
      item["truncated"] = nullptr;
      if (rec.q <= 3) {
        json ts = json::array();
        for (const auto& t : rec.transformations) ts.push_back(t.str());
        item["transformations"] = ts;
        item["truncated"] = rec.truncated;
      }
      item["geometry"] = nullptr;
      item["condition_tilde"] = nullptr;
      if (rec.q == 2) {
        const ErrorGeometry g = error_geometry(rec);
        item["geometry"] = g.kind == Adjacency::kNonAdjacent ? "non-adjacent" : "adjacent";
        item["condition_tilde"] = overlap_satisfies_condition_tilde(f, rec);
      }
      list.push_back(item);
    }
    CommandResult r;
    r.payload = {{"word", f.str()}, {"overlaps", list}};
    return r;
  });
}

CommandResult cmd_classify(const std::string& f_text, const ClassifyFlags& flags) {
  return guarded("classify", [&] {
    const Word f = parse_word(f_text);
    const IsometryVerdict verdict = decide_tilde_isometry(f, isometry_options(flags));
    CommandResult r;
    r.payload = classify_payload(f, verdict);
    r.diagnostics = verdict.anomalies;
    if (!verdict.anomalies.empty()) r.exit_code = kExitAnomaly;
    return r;
  });
}

CommandResult cmd_witness(const std::string& f_text) {
  return guarded("witness", [&] {
    const Word f = parse_word(f_text);
    IsometryOptions options;
    options.oracle_fallback = false;
    const IsometryVerdict verdict = decide_tilde_isometry(f, options);
    CommandResult r;
    json candidates = json::array();
    for (const MatchOutcome& o : verdict.outcomes) {
      json item = {{"case", std::string(to_string(o.match.case_id))},
                   {"shift", o.match.shift()},
                   {"length", o.match.length()},
                   {"status", std::string(to_string(o.status))},
                   {"witness", o.witness ? witness_json(*o.witness) : json(nullptr)}};
      if (!o.note.empty()) item["note"] = o.note;
      candidates.push_back(item);
    }
    r.payload = {{"word", f.str()},
                 {"witness", verdict.witness ? witness_json(*verdict.witness) : json(nullptr)},
                 {"candidates", candidates}};
    r.diagnostics = verdict.anomalies;
    if (!verdict.anomalies.empty()) r.exit_code = kExitAnomaly;
    return r;
  });
}

CommandResult cmd_verify(const std::string& f_text, const std::string& u_text,
                         const std::string& v_text) {
  return guarded("verify", [&] {
    const Word f = parse_word(f_text);
    const Word u = Word::parse(u_text);
    const Word v = Word::parse(v_text);
    if (u.size() != v.size()) {
      throw Error(ErrorCode::kLengthMismatch, "words of different lengths");
    }
    const WitnessCheck check = verify_witness(f, u, v);
    CommandResult r;
    r.payload = {{"word", f.str()},
                 {"u", u.str()},
                 {"v", v.str()},
                 {"distance", check.distance},
                 {"status", std::string(to_string(check.status))},
                 {"failed_condition", std::string(to_string(check.failed))},
                 {"certificate",
                  check.certificate ? transformation_json(*check.certificate) : json(nullptr)}};
    return r;
  });
}

CommandResult cmd_enumerate(std::size_t length, EnumerateFilter filter, bool canonical,
                            const ClassifyFlags& flags) {
  CommandResult r;
  r.command = "enumerate";
  if (length < 1 || length > 16) {
    r.exit_code = kExitUsage;
    r.payload = {{"error", "length must be in 1..16"}};
    r.diagnostics.push_back("length must be in 1..16");
    return r;
  }
  const std::uint64_t total = std::uint64_t{1} << length;
  std::vector<Word> words;
  for (std::uint64_t c = 0; c < total; ++c) {
    Word w = Word::from_code(length, c);
    if (canonical && symmetry_closure(w).front() != w) continue;
    words.push_back(std::move(w));
  }
  struct Row {
    bool tilde = true;
    bool ham = true;
    std::vector<std::string> anomalies;
  };
  std::vector<Row> rows(words.size());
  IsometryOptions options = isometry_options(flags);
  options.threads = 1;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next.fetch_add(1); k < words.size(); k = next.fetch_add(1)) {
      const IsometryVerdict v = decide_tilde_isometry(words[k], options);
      rows[k] = {v.isometric, ham_isometric_or_trivial(words[k]), v.anomalies};
    }
  };
  const std::size_t threads =
      flags.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : flags.threads;
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  json list = json::array();
  std::size_t iso = 0;
  std::size_t non = 0;
  for (std::size_t k = 0; k < words.size(); ++k) {
    const Row& row = rows[k];
    (row.tilde ? iso : non) += 1;
    for (const auto& a : row.anomalies) r.diagnostics.push_back(words[k].str() + ": " + a);
    if (filter == EnumerateFilter::kIsometric && !row.tilde) continue;
    if (filter == EnumerateFilter::kNonIsometric && row.tilde) continue;
    list.push_back({{"word", words[k].str()},
                    {"tilde_isometric", row.tilde},
                    {"ham_isometric", row.ham}});
  }
  static constexpr const char* kFilterNames[] = {"all", "isometric", "non-isometric"};
  r.payload = {{"length", length},
               {"filter", kFilterNames[static_cast<int>(filter)]},
               {"canonical", canonical},
               {"words", list},
               {"counts", {{"isometric", iso}, {"non_isometric", non}, {"total", words.size()}}}};
  if (!r.diagnostics.empty()) r.exit_code = kExitAnomaly;
  return r;
}

CommandResult cmd_oracle(const std::string& f_text, const OracleFlags& flags) {
  return guarded("oracle", [&] {
    const Word f = parse_word(f_text);
    OracleOptions options;
    options.max_len = flags.max_len;
    options.first_violation = flags.first_violation;
    options.edges = flags.hamming ? EdgeSet::kHamming : EdgeSet::kTilde;
    options.strategy = flags.source_bfs ? OracleStrategy::kSourceBfs : OracleStrategy::kBlockedPairs;
    options.threads = flags.threads;
    const OracleReport report = oracle_check(f, options);
    CommandResult r;
    r.payload = oracle_json(report);
    r.payload["edges"] = flags.hamming ? "hamming" : "tilde";
    return r;
  });
}

CommandResult cmd_cube(std::size_t length, const std::optional<std::string>& avoid,
                       GraphFormat format, bool hamming) {
  return guarded("cube", [&] {
    std::optional<Word> f;
    if (avoid) f = parse_word(*avoid);
    const CubeGraph g =
        CubeGraph::build(length, f, hamming ? EdgeSet::kHamming : EdgeSet::kTilde);
    CommandResult r;
    r.text = export_graph(g, format);
    r.payload = {{"m", length},
                 {"avoid", f ? json(f->str()) : json(nullptr)},
                 {"vertices", g.vertex_count()},
                 {"edges", g.edge_count()}};
    return r;
  });
}

CommandResult cmd_compare(const std::string& f_text) {
  return guarded("compare", [&] {
    const Word f = parse_word(f_text);
    const bool tilde = decide_tilde_isometry(f).isometric;
    const bool ham = ham_isometric_or_trivial(f);
    CommandResult r;
    r.payload = {{"word", f.str()},
                 {"tilde_isometric", tilde},
                 {"ham_isometric", ham},
                 {"agreement", tilde == ham}};
    return r;
  });
}

std::string render(const CommandResult& result, bool as_json) {
  if (as_json) return result.payload.dump(2) + "\n";
  if (!result.text.empty()) return result.text;
  std::ostringstream out;
  render_text(result.payload, "", out);
  return out.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tilde-distance isometry of binary words"};
  app.require_subcommand(1);
  bool as_json = false;
  bool quiet = false;
  std::size_t threads = 1;
  app.add_flag("--json", as_json, "Structured JSON output");
  app.add_flag("--quiet", quiet, "Suppress diagnostics on stderr");
  app.add_option("--threads", threads, "Worker threads (0 = all cores)");

  std::string a;
  std::string b;
  std::string c;
  bool show_transforms = false;
  std::optional<std::size_t> cap;
  std::optional<std::size_t> q;
  std::optional<std::size_t> bound;
  bool no_fallback = false;
  std::size_t length = 0;
  std::string filter = "all";
  bool canonical = false;
  std::optional<std::size_t> max_len;
  bool first_violation = false;
  bool hamming = false;
  std::string strategy = "blocked";
  std::optional<std::string> avoid;
  std::string format = "edgelist";
  std::string out_path;

  auto* dist = app.add_subcommand("dist", "Tilde and Hamming distance of two words")->fallthrough();
  dist->add_option("u", a)->required();
  dist->add_option("v", b)->required();
  dist->add_flag("--show-transforms", show_transforms, "List the minimal transformations");

  auto* transforms = app.add_subcommand("transforms", "Enumerate minimal transformations")->fallthrough();
  transforms->add_option("u", a)->required();
  transforms->add_option("v", b)->required();
  transforms->add_option("--cap", cap, "Stop after this many transformations");

  auto* overlaps = app.add_subcommand("overlaps", "Overlaps of a word with their errors")->fallthrough();
  overlaps->add_option("f", a)->required();
  overlaps->add_option("--q", q, "Only overlaps with this many tilde errors");

  auto* classify = app.add_subcommand("classify", "Decide tilde-isometry")->fallthrough();
  classify->add_option("f", a)->required();
  classify->add_option("--oracle-bound", bound, "Longest words searched by the fallback oracle");
  classify->add_flag("--no-oracle-fallback", no_fallback, "Never run the oracle");

  auto* witness = app.add_subcommand("witness", "Build witness pairs from case matches")->fallthrough();
  witness->add_option("f", a)->required();

  auto* verify = app.add_subcommand("verify", "Check a witness pair")->fallthrough();
  verify->add_option("f", a)->required();
  verify->add_option("u", b)->required();
  verify->add_option("v", c)->required();

  auto* enumerate = app.add_subcommand("enumerate", "Classify every word of a length")->fallthrough();
  enumerate->add_option("--len", length, "Word length (1..16)")->required();
  enumerate->add_option("--filter", filter, "all | isometric | non-isometric")
      ->check(CLI::IsMember({"all", "isometric", "non-isometric"}));
  enumerate->add_flag("--canonical", canonical, "One word per symmetry orbit");
  enumerate->add_option("--oracle-bound", bound, "Longest words searched by the fallback oracle");
  enumerate->add_flag("--no-oracle-fallback", no_fallback, "Never run the oracle");

  auto* oracle = app.add_subcommand("oracle", "Exhaustive distance-preservation check")->fallthrough();
  oracle->add_option("f", a)->required();
  oracle->add_option("--max-len", max_len, "Longest words checked (default ceil(5|f|/2))");
  oracle->add_flag("--first-violation", first_violation, "Stop at the first violating pair");
  oracle->add_flag("--hamming", hamming, "Replacement-only cube");
  oracle->add_option("--strategy", strategy, "blocked | bfs")->check(CLI::IsMember({"blocked", "bfs"}));

  auto* cube = app.add_subcommand("cube", "Export a (generalized) cube")->fallthrough();
  cube->add_option("--len", length, "Word length")->required();
  cube->add_option("--avoid", avoid, "Induce on words avoiding this factor");
  cube->add_option("--format", format, "dot | edgelist | json")
      ->check(CLI::IsMember({"dot", "edgelist", "json"}));
  cube->add_option("--out", out_path, "Write to a file instead of stdout");
  cube->add_flag("--hamming", hamming, "Replacement edges only");

  auto* compare = app.add_subcommand("compare", "Tilde versus Hamming isometry")->fallthrough();
  compare->add_option("f", a)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  ClassifyFlags cflags;
  cflags.oracle_bound = bound;
  cflags.oracle_fallback = !no_fallback;
  cflags.threads = threads;

  CommandResult result;
  if (dist->parsed()) {
    result = cmd_dist(a, b, show_transforms);
  } else if (transforms->parsed()) {
    result = cmd_transforms(a, b, cap);
  } else if (overlaps->parsed()) {
    result = cmd_overlaps(a, q);
  } else if (classify->parsed()) {
    result = cmd_classify(a, cflags);
  } else if (witness->parsed()) {
    result = cmd_witness(a);
  } else if (verify->parsed()) {
    result = cmd_verify(a, b, c);
  } else if (enumerate->parsed()) {
    const EnumerateFilter f = filter == "isometric"       ? EnumerateFilter::kIsometric
                              : filter == "non-isometric" ? EnumerateFilter::kNonIsometric
                                                          : EnumerateFilter::kAll;
    result = cmd_enumerate(length, f, canonical, cflags);
  } else if (oracle->parsed()) {
    OracleFlags oflags;
    oflags.max_len = max_len;
    oflags.first_violation = first_violation;
    oflags.hamming = hamming;
    oflags.source_bfs = strategy == "bfs";
    oflags.threads = threads;
    result = cmd_oracle(a, oflags);
  } else if (cube->parsed()) {
    const GraphFormat g = format == "dot"    ? GraphFormat::kDot
                          : format == "json" ? GraphFormat::kJson
                                             : GraphFormat::kEdgeList;
    result = cmd_cube(length, avoid, g, hamming);
    if (result.exit_code == kExitOk && !out_path.empty()) {
      std::ofstream file(out_path, std::ios::binary);
      file << result.text;
      if (!file) {
        err << "cannot write " << out_path << '\n';
        return kExitUsage;
      }
      return kExitOk;
    }
    if (result.exit_code == kExitOk) {
      out << result.text;
      return kExitOk;
    }
  } else if (compare->parsed()) {
    result = cmd_compare(a);
  }

  if (!quiet) {
    for (const auto& d : result.diagnostics) err << result.command << ": " << d << '\n';
  }
  out << render(result, as_json);
  return result.exit_code;
}

}  // namespace tildeiso::cli

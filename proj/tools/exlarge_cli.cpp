// exlarge-cli: batch runner over the exlarge headers. See README.md for the file formats.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli_config.hpp"
#include "json.hpp"

using json = nlohmann::json;
using namespace exlarge;
using namespace exlarge::cli;

namespace {

const char* kChainScope =
    "chain verification inspects only the exactly large subsets contained in the chain; it is a finite truncation of "
    "an infinite homogeneity claim";

// ---- output ----

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("write failed: " + path);
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string quote_set(const FinSet& s) { return "\"" + to_string(s) + "\""; }

json set_json(const FinSet& s) { return json(std::vector<Natural>(s.elems().begin(), s.elems().end())); }

FinSet set_from_json(const json& j) {
  try {
    std::vector<Natural> v = j.get<std::vector<Natural>>();
    return FinSet(std::move(v));
  } catch (const std::exception& e) {
    throw ConfigError(std::string("witness set is malformed: ") + e.what());
  }
}

json stats_json(const SearchStats& s) {
  return {{"candidates", s.candidates}, {"nodes", s.nodes}, {"exhausted", s.exhausted}, {"truncated", s.truncated}};
}

json budget_json(const SearchBudget& b) {
  return {{"max_universe", b.max_universe}, {"max_candidates", b.max_candidates}, {"stage_cutoff", b.stage_cutoff}};
}

json min_colors_json(const std::map<Natural, Color>& m) {
  json j = json::object();
  for (auto [k, v] : m) j[std::to_string(k)] = v;
  return j;
}

json report_json(const VerifyReport& r) {
  json j = {{"pass", r.pass}, {"sets_checked", r.sets_checked}};
  j["color"] = r.color ? json(*r.color) : json(nullptr);
  if (!r.min_colors.empty()) j["min_colors"] = min_colors_json(r.min_colors);
  if (r.reference) j["reference"] = set_json(*r.reference);
  if (r.offending) j["offending"] = set_json(*r.offending);
  return j;
}

json witness_json(const Witness& w, const Config& cfg, const SearchBudget& b) {
  json j;
  j["format"] = "exlarge-witness/1";
  j["kind"] = to_string(w.kind);
  j["set"] = set_json(w.set);
  j["color"] = w.color ? json(*w.color) : json(nullptr);
  j["min_colors"] = min_colors_json(w.min_colors);
  j["verified"] = w.verified;
  j["stats"] = stats_json(w.stats);
  j["budget"] = budget_json(b);
  j["config"] = cfg.values();
  return j;
}

struct LoadedWitness {
  FinSet set;
  WitnessKind kind = WitnessKind::Homogeneous;
  json raw;
};

LoadedWitness load_witness(const std::string& path, Config& cfg) {
  json j;
  try {
    j = json::parse(read_text(path));
  } catch (const json::parse_error& e) {
    throw ConfigError(path + ": not valid JSON: " + e.what());
  }
  if (!j.is_object() || j.value("format", "") != "exlarge-witness/1")
    throw ConfigError(path + ": not an exlarge witness file");
  LoadedWitness w;
  w.raw = j;
  w.set = set_from_json(j.at("set"));
  try {
    w.kind = parse_witness_kind(j.at("kind").get<std::string>());
  } catch (const std::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
  // The witness's own configuration is the base layer; output paths are not inherited.
  if (j.contains("config") && j["config"].is_object())
    for (auto& [k, v] : j["config"].items())
      if (k.rfind("output.", 0) != 0 && v.is_string()) cfg.set(k, v.get<std::string>());
  return w;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

bool on_stdout(const std::string& path) { return path.empty() || path == "-"; }

// When the CSV already went to stdout, an unrouted report goes to stderr so the two never interleave.
void emit_report(const Config& cfg, const json& r, bool csv_written) {
  if (csv_written && on_stdout(cfg.str("output.csv")) && on_stdout(cfg.str("output.report")))
    std::cerr << dump(r);
  else
    write_text(cfg.str("output.report"), dump(r));
}

// ---- shared option plumbing ----

struct CommonOptions {
  std::string config_file;
  std::vector<std::string> sets;
  std::map<std::string, std::string> flags;  // config key -> flag value
};

void add_flag(CLI::App* cmd, CommonOptions& o, const std::string& flag, const std::string& key, const std::string& help) {
  cmd->add_option_function<std::string>(flag, [&o, key](const std::string& v) { o.flags[key] = v; }, help);
}

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--config", o.config_file, "key = value configuration file");
  cmd->add_option("--set", o.sets, "override one configuration key (key=value)");
  add_flag(cmd, o, "--coloring", "coloring.name", "coloring name");
  add_flag(cmd, o, "--oracle", "coloring.oracle", "oracle: empty, {..} or K<n>");
  add_flag(cmd, o, "--mode", "coloring.mode", "capture or literal");
  add_flag(cmd, o, "--programs", "coloring.programs", "standard, curated, or a program universe file");
  add_flag(cmd, o, "--universe", "universe.spec", "interval:a..b, evens:a..b, odds:a..b or {..}");
  add_flag(cmd, o, "--seed", "coloring.seed", "seed for hashed colorings");
  add_flag(cmd, o, "--cutoff", "run.cutoff", "step cutoff for ground truth and K<n> oracles");
  add_flag(cmd, o, "--csv", "output.csv", "CSV output path");
  add_flag(cmd, o, "--report", "output.report", "JSON report path (default stdout)");
}

// Layers: defaults, then the input witness (if any), then --config, then --set, then flags.
void finish_config(Config& cfg, const CommonOptions& o) {
  if (!o.config_file.empty()) cfg.load_file(o.config_file);
  for (const auto& kv : o.sets) cfg.apply_override(kv);
  for (const auto& [k, v] : o.flags) cfg.set(k, v);
}

json report_head(const std::string& command, const Config& cfg) {
  return {{"command", command}, {"config", cfg.values()}};
}

// ---- subcommands ----

int cmd_enumerate(Config& cfg, std::optional<Natural> min, bool count_only) {
  FinSet u = parse_universe_spec(cfg.str("universe.spec"));
  std::ostringstream csv;
  csv << "index,set\n";
  Natural n = 0;
  auto row = [&](Tuple s) {
    if (!count_only) csv << n << "," << quote_set(detail::to_finset(s)) << "\n";
    ++n;
    return true;
  };
  if (min)
    for_each_exactly_large_with_min(u, *min, row);
  else
    for_each_exactly_large(u, row);
  if (!count_only) write_text(cfg.str("output.csv"), csv.str());
  json r = report_head("enumerate", cfg);
  r["result"] = {{"universe", set_json(u)}, {"count", n}};
  if (!min) r["result"]["closed_form_count"] = count_exactly_large(u);
  if (min) r["result"]["min"] = *min;
  emit_report(cfg, r, !count_only);
  return kOk;
}

int cmd_color(Config& cfg, Natural limit) {
  ColoringHandle h = make_coloring(cfg);
  FinSet u = parse_universe_spec(cfg.str("universe.spec"));
  std::ostringstream csv;
  csv << "set,color\n";
  Natural n = 0;
  auto row = [&](Tuple s) {
    csv << quote_set(detail::to_finset(s)) << "," << (h.exact ? (*h.exact)(s) : (*h.tuples)(s)) << "\n";
    return ++n < limit;
  };
  if (h.exact)
    for_each_exactly_large(u, row);
  else
    for_each_subset(u.view(), h.tuples->dimension(), row);
  write_text(cfg.str("output.csv"), csv.str());
  return kOk;
}

// Re-verifies a set against the configured coloring according to the witness kind.
VerifyReport verify_set(const ColoringHandle& h, const FinSet& set, WitnessKind kind) {
  if (kind == WitnessKind::MinHomogeneous) {
    if (!h.exact) throw ConfigError("min-homogeneity needs a coloring of exactly large sets");
    return verify_min_homogeneous(set, *h.exact);
  }
  if (h.tuples) {
    if (kind == WitnessKind::Chain) throw ConfigError("chain witnesses need a coloring of exactly large sets");
    return verify_finite_homogeneous(set, *h.tuples);
  }
  return verify_exact_homogeneous(set, *h.exact);
}

int cmd_search(Config& cfg) {
  ColoringHandle h = make_coloring(cfg);
  FinSet u = parse_universe_spec(cfg.str("universe.spec"));
  SearchBudget budget = cfg.budget();
  WitnessKind kind;
  try {
    kind = parse_witness_kind(cfg.str("search.kind"));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  const std::size_t size = static_cast<std::size_t>(cfg.natural("search.size", true));
  const std::string method = cfg.str("search.method");
  json r = report_head("search", cfg);
  std::ostringstream csv;
  std::optional<Witness> w;
  json extra = json::object();

  if (kind == WitnessKind::Homogeneous) {
    if (!h.tuples) throw ConfigError("homogeneous search needs a tuple coloring (c<n>, hashed-tuples); use chain for " + h.name);
    if (method == "extract") {
      w = f_a_extract(h.tuples->dimension(), *h.tuples, u, size, budget);
    } else if (method == "brute" || method == "backtrack") {
      BruteResult b = method == "brute" ? brute_homogeneous(*h.tuples, u, size) : backtrack_homogeneous(*h.tuples, u, size);
      extra["search_stats"] = stats_json(b.stats);
      w = b.witness;
    } else {
      throw ConfigError("search.method must be extract, brute or backtrack");
    }
    csv << "kind,size,color,verified,set\n";
    if (w) csv << "homogeneous," << w->set.size() << "," << (w->color ? std::to_string(*w->color) : "") << ","
               << (w->verified ? "true" : "false") << "," << quote_set(w->set) << "\n";
  } else if (kind == WitnessKind::MinHomogeneous) {
    if (!h.exact) throw ConfigError("min-homogeneous search needs a coloring of exactly large sets");
    MinHomogResult m = min_homog_search(*h.exact, u, size);
    extra["search_stats"] = stats_json(m.stats);
    w = m.witness;
    csv << "kind,size,verified,set\n";
    if (w) csv << "min-homogeneous," << w->set.size() << "," << (w->verified ? "true" : "false") << "," << quote_set(w->set) << "\n";
  } else {
    if (!h.exact) throw ConfigError("chain search needs a coloring of exactly large sets");
    ChainResult c = iterate_rtomega(*h.exact, u, budget, ChainOptions{cfg.flag("search.start_at_two")});
    w = c.witness;
    extra["raw_chain"] = c.raw;
    extra["monotone"] = c.monotone;
    extra["scope"] = kChainScope;
    json stages = json::array();
    csv << "stage,a,ground_size,extracted_size,induced_color,candidates,truncated\n";
    for (std::size_t i = 0; i < c.stages.size(); ++i) {
      const auto& st = c.stages[i];
      stages.push_back({{"a", st.a},
                        {"ground", set_json(st.ground)},
                        {"extracted", set_json(st.extracted)},
                        {"induced_color", st.color ? json(*st.color) : json(nullptr)},
                        {"stats", stats_json(st.stats)}});
      csv << i << "," << st.a << "," << st.ground.size() << "," << st.extracted.size() << ","
          << (st.color ? std::to_string(*st.color) : "") << "," << st.stats.candidates << ","
          << (st.stats.truncated ? "true" : "false") << "\n";
    }
    extra["stages"] = stages;
  }

  if (!cfg.str("output.csv").empty()) write_text(cfg.str("output.csv"), csv.str());
  if (!w) {
    r["result"] = {{"found", false}, {"details", extra}};
    emit_report(cfg, r, !cfg.str("output.csv").empty());
    return kVerifyFailed;
  }
  // Independent re-check of whatever the search returned.
  VerifyReport check = verify_set(h, w->set, w->kind);
  json wj = witness_json(*w, cfg, budget);
  wj["details"] = extra;
  if (!cfg.str("output.witness").empty()) write_text(cfg.str("output.witness"), dump(wj));
  r["result"] = {{"found", true}, {"witness", wj}, {"verification", report_json(check)}};
  emit_report(cfg, r, !cfg.str("output.csv").empty());
  return check.pass && w->verified ? kOk : kVerifyFailed;
}

int cmd_verify(Config& cfg, const LoadedWitness& lw) {
  ColoringHandle h = make_coloring(cfg);
  VerifyReport rep = verify_set(h, lw.set, lw.kind);
  json r = report_head("verify", cfg);
  r["result"] = {{"set", set_json(lw.set)}, {"kind", to_string(lw.kind)}, {"coloring", h.name}, {"report", report_json(rep)}};
  if (lw.kind == WitnessKind::Chain) r["result"]["scope"] = kChainScope;
  if (!rep.pass) r["result"]["counterexample"] = describe(rep);
  if (!cfg.str("output.csv").empty())
    write_text(cfg.str("output.csv"), std::string("set,kind,coloring,pass,sets_checked\n") + quote_set(lw.set) + "," +
                                          to_string(lw.kind) + "," + h.name + "," + (rep.pass ? "true" : "false") + "," +
                                          std::to_string(rep.sets_checked) + "\n");
  emit_report(cfg, r, !cfg.str("output.csv").empty());
  return rep.pass ? kOk : kVerifyFailed;
}

std::pair<Natural, Natural> parse_query(const std::string& q, const NumberingPtr& nb) {
  auto comma = q.find(',');
  if (comma == std::string::npos) throw ConfigError("--query expects level,index, got '" + q + "'");
  return {parse_index(trim(q.substr(0, comma)), nb), parse_index(trim(q.substr(comma + 1)), nb)};
}

int cmd_decode(Config& cfg, const LoadedWitness& lw, const std::vector<std::string>& queries, std::optional<Natural> h_opt) {
  ColoringHandle h = make_coloring(cfg);
  const NumberingPtr nb = load_numbering(cfg.str("coloring.programs"));
  const Natural cutoff = cfg.natural("run.cutoff", true);
  json r = report_head("decode", cfg);
  std::ostringstream csv;
  std::size_t disagreements = 0, insufficient = 0, rows = 0;

  if (h.family) {
    if (queries.empty()) throw ConfigError("decode needs at least one --query level,index");
    csv << "level,query,answer,status,truth,consistent,tuple,reduced_index,note\n";
    for (const auto& q : queries) {
      auto [level, j] = parse_query(q, nb);
      DecodeVerdict v = m_decode(*h.family, level, j, lw.set);
      if (v.status == VerdictStatus::Ok) {
        v.truth = halt0_truth(h.family->oracle(), static_cast<std::size_t>(level), j, cutoff, nb);
        disagreements += !v.consistent();
      } else {
        ++insufficient;
      }
      ++rows;
      csv << level << "," << j << "," << (v.status == VerdictStatus::Ok ? (v.answer ? "1" : "0") : "") << ","
          << (v.status == VerdictStatus::Ok ? "ok" : "insufficient-data") << ","
          << (v.truth ? (*v.truth ? "1" : "0") : "") << "," << (v.status == VerdictStatus::Ok ? (v.consistent() ? "true" : "false") : "")
          << "," << quote_set(v.tuple_used) << "," << v.reduced_index << ",\"" << v.note << "\"\n";
    }
  } else if (h.jump_cache && h.name == "dh") {
    Natural two_n = 0;
    if (h_opt) {
      two_n = *h_opt;
    } else {
      for (Natural x : lw.set.elems())
        if (x >= 2 && x % 2 == 0) {
          two_n = x;
          break;
        }
    }
    if (two_n == 0) throw ConfigError("dh decoding needs a positive even minimum in H (or --two-n)");
    const Natural limit = cfg.natural("decode.code_limit", true);
    const Natural stage = cfg.natural("decode.pair_stage", true);
    DhReconstruction rec = dh_reconstruct(*h.jump_cache, lw.set, two_n, limit);
    csv << "level,code,member,truth,consistent\n";
    json levels = json::array();
    for (const auto& lv : rec.levels) {
      Oracle truth = pair_tower(h.jump_cache->oracle(), lv.level, stage, nb);
      for (Natural c = 0; c < lv.covered_below; ++c) {
        bool mem = lv.members.contains(c), t = truth->contains(c);
        disagreements += mem != t;
        ++rows;
        csv << lv.level << "," << c << "," << mem << "," << t << "," << (mem == t ? "true" : "false") << "\n";
      }
      insufficient += lv.uncovered.size();
      levels.push_back({{"level", lv.level},
                        {"members", set_json(lv.members)},
                        {"covered_below", lv.covered_below},
                        {"uncovered", lv.uncovered.size()}});
    }
    r["result"]["h"] = two_n;
    r["result"]["levels"] = levels;
    r["result"]["partial"] = rec.partial;
  } else {
    throw ConfigError("decode supports the c<n>, comega and dh colorings, not " + h.name);
  }
  r["result"]["set"] = set_json(lw.set);
  r["result"]["rows"] = rows;
  r["result"]["disagreements"] = disagreements;
  r["result"]["insufficient_data"] = insufficient;
  write_text(cfg.str("output.csv"), csv.str());
  emit_report(cfg, r, true);
  return disagreements == 0 ? kOk : kVerifyFailed;
}

int cmd_reduce(Config& cfg, const LoadedWitness& lw, const std::string& direction) {
  ColoringHandle h = make_coloring(cfg);
  SearchBudget budget = cfg.budget();
  json r = report_head("reduce", cfg);
  Witness out;
  VerifyReport input_check, output_check;
  if (direction == "km-to-rt") {
    if (!h.regressive) throw ConfigError("km-to-rt needs a regressive coloring, got " + h.name);
    ExactColoring rt = memoize(km_to_rt(*h.regressive));
    input_check = verify_exact_homogeneous(lw.set, rt);
    out.kind = WitnessKind::MinHomogeneous;
    out.set = km_witness_transform(lw.set);
    output_check = verify_min_homogeneous(out.set, *h.regressive);
    out.min_colors = output_check.min_colors;
    r["result"]["input_color"] = input_check.color ? json(*input_check.color) : json(nullptr);
    // Only color-1 (or vacuous) homogeneity for the derived coloring transfers on finite sets.
    if (input_check.color == Color{0}) r["result"]["warning"] = "input is homogeneous of color 0; the transfer is not guaranteed";
  } else if (direction == "rt-via-km") {
    if (!h.exact) throw ConfigError("rt-via-km needs a coloring of exactly large sets");
    input_check = verify_min_homogeneous(lw.set, *h.exact);
    if (!input_check.pass) {
      r["result"] = {{"input", report_json(input_check)}, {"error", "input set is not min-homogeneous"}};
      write_text(cfg.str("output.report"), dump(r));
      return kVerifyFailed;
    }
    PigeonholeResult p = rt_via_km(*h.exact, lw.set);
    out.kind = WitnessKind::Homogeneous;
    out.set = p.set;
    out.color = p.color;
    out.min_colors = p.induced;
    output_check = verify_exact_homogeneous(out.set, *h.exact);
  } else {
    throw ConfigError("--direction must be km-to-rt or rt-via-km");
  }
  if (output_check.color && !out.color) out.color = output_check.color;
  out.verified = output_check.pass;
  json wj = witness_json(out, cfg, budget);
  wj["details"] = {{"direction", direction}, {"source", set_json(lw.set)}};
  if (!cfg.str("output.witness").empty()) write_text(cfg.str("output.witness"), dump(wj));
  r["result"]["input"] = report_json(input_check);
  r["result"]["output"] = report_json(output_check);
  r["result"]["witness"] = wj;
  write_text(cfg.str("output.report"), dump(r));
  return output_check.pass ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ramsey theory workbench for exactly large sets"};
  app.require_subcommand(1);

  CommonOptions o_enum, o_color, o_search, o_verify, o_decode, o_reduce;

  auto* enumerate = app.add_subcommand("enumerate", "list the exactly large subsets of a universe");
  add_common(enumerate, o_enum);
  std::optional<Natural> enum_min;
  bool count_only = false;
  enumerate->add_option("--min", enum_min, "only sets with this minimum");
  enumerate->add_flag("--count", count_only, "report the count only");

  auto* color = app.add_subcommand("color", "write a coloring trace (set,color) as CSV");
  add_common(color, o_color);
  Natural limit = 1'000'000;
  color->add_option("--limit", limit, "maximum number of rows");

  auto* search = app.add_subcommand("search", "search for a homogeneous, min-homogeneous or chain witness");
  add_common(search, o_search);
  add_flag(search, o_search, "--kind", "search.kind", "homogeneous, min-homogeneous or chain");
  add_flag(search, o_search, "--size", "search.size", "witness size for homogeneous and min-homogeneous searches");
  add_flag(search, o_search, "--method", "search.method", "extract, brute or backtrack (homogeneous only)");
  add_flag(search, o_search, "--dimension", "coloring.dimension", "tuple size for hashed-tuples");
  add_flag(search, o_search, "--out", "output.witness", "witness JSON path");
  search->add_flag_function("--start-at-two", [&](std::int64_t) { o_search.flags["search.start_at_two"] = "true"; },
                            "start the chain at 2 instead of min(U)");

  std::string witness_in;
  auto* verify = app.add_subcommand("verify", "re-verify a witness file");
  add_common(verify, o_verify);
  verify->add_option("--witness", witness_in, "witness JSON")->required();

  auto* decode = app.add_subcommand("decode", "read jump membership off a homogeneous set");
  add_common(decode, o_decode);
  decode->add_option("--witness", witness_in, "witness JSON")->required();
  std::vector<std::string> queries;
  std::optional<Natural> dh_h;
  decode->add_option("--query", queries, "level,index (index may be eH)");
  decode->add_option("--two-n", dh_h, "even minimum used by dh reconstruction");
  add_flag(decode, o_decode, "--code-limit", "decode.code_limit", "codes examined by dh reconstruction");

  auto* reduce = app.add_subcommand("reduce", "transfer witnesses between regressive and two-color principles");
  add_common(reduce, o_reduce);
  reduce->add_option("--witness", witness_in, "witness JSON")->required();
  std::string direction;
  reduce->add_option("--direction", direction, "km-to-rt or rt-via-km")->required();
  add_flag(reduce, o_reduce, "--out", "output.witness", "witness JSON path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kConfigError;
  }

  try {
    Config cfg;
    if (*enumerate) {
      finish_config(cfg, o_enum);
      return cmd_enumerate(cfg, enum_min, count_only);
    }
    if (*color) {
      finish_config(cfg, o_color);
      return cmd_color(cfg, limit);
    }
    if (*search) {
      finish_config(cfg, o_search);
      return cmd_search(cfg);
    }
    if (*verify) {
      LoadedWitness lw = load_witness(witness_in, cfg);
      finish_config(cfg, o_verify);
      return cmd_verify(cfg, lw);
    }
    if (*decode) {
      LoadedWitness lw = load_witness(witness_in, cfg);
      finish_config(cfg, o_decode);
      return cmd_decode(cfg, lw, queries, dh_h);
    }
    if (*reduce) {
      LoadedWitness lw = load_witness(witness_in, cfg);
      finish_config(cfg, o_reduce);
      return cmd_reduce(cfg, lw, direction);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  }
  return kOk;
}

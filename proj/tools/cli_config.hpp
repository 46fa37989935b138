#pragma once

// Configuration for the command-line tool: key = value files with [section] headers,
// flag overrides, and the factories that turn spec strings into library objects.

#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "exlarge/exlarge.hpp"

namespace exlarge::cli {

enum ExitCode { kOk = 0, kConfigError = 2, kVerifyFailed = 3, kIoError = 4 };

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string trim(std::string s) {
  const char* ws = " \t\r\n";
  s.erase(0, s.find_first_not_of(ws));
  s.erase(s.find_last_not_of(ws) + 1);
  return s;
}

inline Natural default_cutoff() {
  if (const char* env = std::getenv("EXLARGE_CUTOFF"); env && *env) {
    try {
      std::size_t used = 0;
      unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw ConfigError("EXLARGE_CUTOFF must be a positive integer, got '" + std::string(env) + "'");
  }
  return 1'000'000;
}

/// Every recognized key with its default. Reports echo the full table.
inline std::map<std::string, std::string> default_config() {
  return {
      {"coloring.name", "parity-of-min"},
      {"coloring.oracle", "empty"},
      {"coloring.mode", "capture"},
      {"coloring.programs", "standard"},
      {"coloring.seed", "0"},
      {"coloring.dimension", "2"},
      {"universe.spec", "interval:2..20"},
      {"search.kind", "chain"},
      {"search.size", "5"},
      {"search.method", "extract"},
      {"search.start_at_two", "false"},
      {"budget.max_universe", "4096"},
      {"budget.max_candidates", "50000000"},
      {"budget.stage_cutoff", std::to_string(default_cutoff())},
      {"run.cutoff", std::to_string(default_cutoff())},
      {"decode.pair_stage", "5000"},
      {"decode.code_limit", "40"},
      {"output.witness", ""},
      {"output.csv", ""},
      {"output.report", ""},
  };
}

class Config {
 public:
  Config() : values_(default_config()) {}

  void set(const std::string& key, const std::string& value) {
    if (!values_.count(key)) throw ConfigError("unknown configuration key '" + key + "'");
    values_[key] = value;
  }

  /// key = value lines; `[section]` prefixes later keys with "section.". `#` starts a comment.
  void load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config file " + path);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      line = trim(line);
      if (line.empty()) continue;
      if (line.front() == '[') {
        if (line.back() != ']') throw ConfigError(path + ":" + std::to_string(lineno) + ": malformed section header");
        section = trim(line.substr(1, line.size() - 2));
        continue;
      }
      auto eq = line.find('=');
      if (eq == std::string::npos) throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
      std::string key = trim(line.substr(0, eq));
      if (!section.empty()) key = section + "." + key;
      set(key, trim(line.substr(eq + 1)));
    }
  }

  /// `key=value` from the command line.
  void apply_override(const std::string& kv) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw ConfigError("--set expects key=value, got '" + kv + "'");
    set(trim(kv.substr(0, eq)), trim(kv.substr(eq + 1)));
  }

  const std::string& str(const std::string& key) const { return values_.at(key); }

  Natural natural(const std::string& key, bool positive = false) const {
    const std::string& v = str(key);
    try {
      std::size_t used = 0;
      unsigned long long n = std::stoull(v, &used);
      if (used != v.size() || v.front() == '-') throw std::invalid_argument("");
      if (positive && n == 0) throw ConfigError(key + " must be positive");
      return n;
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception&) {
      throw ConfigError(key + " must be a non-negative integer, got '" + v + "'");
    }
  }

  bool flag(const std::string& key) const {
    const std::string& v = str(key);
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError(key + " must be true or false, got '" + v + "'");
  }

  SearchBudget budget() const {
    SearchBudget b;
    b.max_universe = natural("budget.max_universe", true);
    b.max_candidates = natural("budget.max_candidates", true);
    b.stage_cutoff = natural("budget.stage_cutoff", true);
    return b;
  }

  const std::map<std::string, std::string>& values() const noexcept { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

// ---- spec parsers ----

inline std::pair<Natural, Natural> parse_range(const std::string& text, const std::string& what) {
  auto dots = text.find("..");
  if (dots == std::string::npos) throw ConfigError("malformed " + what + " range '" + text + "' (want a..b)");
  try {
    Natural lo = std::stoull(text.substr(0, dots)), hi = std::stoull(text.substr(dots + 2));
    if (lo > hi) throw ConfigError(what + " range is empty: " + text);
    if (hi - lo > 10'000'000) throw ConfigError(what + " range too large: " + text);
    return {lo, hi};
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    throw ConfigError("malformed " + what + " range '" + text + "' (want a..b)");
  }
}

/// interval:a..b, evens:a..b, odds:a..b, or an explicit set {a,b,...}.
inline FinSet parse_universe_spec(const std::string& spec) {
  try {
    if (!spec.empty() && spec.front() == '{') return parse_finset(spec);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw ConfigError("malformed universe '" + spec + "'");
  std::string kind = spec.substr(0, colon);
  auto [lo, hi] = parse_range(spec.substr(colon + 1), "universe");
  if (kind == "interval") return FinSet::interval(lo, hi);
  std::vector<Natural> v;
  if (kind == "evens" || kind == "odds") {
    const Natural parity = kind == "evens" ? 0 : 1;
    for (Natural x = lo; x <= hi; ++x)
      if (x % 2 == parity) v.push_back(x);
    return FinSet(std::move(v));
  }
  throw ConfigError("unknown universe kind '" + kind + "' (interval, evens, odds or {..})");
}

inline NumberingPtr load_numbering(const std::string& spec) {
  if (spec.empty() || spec == "standard") return standard_numbering();
  if (spec == "curated" || spec == "curated16") return curated_numbering();
  std::ifstream in(spec);
  if (!in) throw IoError("cannot read program universe " + spec);
  try {
    return std::make_shared<CuratedNumbering>(parse_universe(in), spec);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(spec + ": " + e.what());
  }
}

/// empty, an explicit set {..}, or K<n> (the n-th halt-on-0 jump of the empty set at the cutoff).
inline Oracle parse_oracle(const std::string& spec, Natural cutoff, const NumberingPtr& nb) {
  if (spec == "empty") return empty_oracle();
  if (!spec.empty() && spec.front() == '{') {
    try {
      return explicit_oracle(parse_finset(spec));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  if (spec.size() > 1 && spec.front() == 'K') {
    try {
      std::size_t used = 0;
      Natural n = std::stoull(spec.substr(1), &used);
      if (used + 1 == spec.size() && n <= 8) return halt0_tower(empty_oracle(), n, cutoff, nb);
    } catch (const std::exception&) {
    }
  }
  throw ConfigError("unknown oracle '" + spec + "' (empty, {..} or K0..K8)");
}

inline CaptureMode parse_mode(const std::string& s) {
  if (s == "capture") return CaptureMode::Capture;
  if (s == "literal") return CaptureMode::Literal;
  throw ConfigError("coloring.mode must be capture or literal, got '" + s + "'");
}

/// A named coloring: exactly large (optionally regressive) or on fixed-size tuples.
struct ColoringHandle {
  std::string name;
  std::optional<ExactColoring> exact;
  std::optional<RegressiveColoring> regressive;
  std::optional<FiniteColoring> tuples;
  CaptureFamilyPtr family;        // set for c<n> and comega
  StagedJumpCachePtr jump_cache;  // set for dh and km-dh
};

inline std::optional<RegressiveColoring> named_regressive(const std::string& name, const Oracle& oracle,
                                                          const NumberingPtr& nb, StagedJumpCachePtr& cache) {
  if (name == "min-minus-one") return min_minus_one();
  if (name == "second-mod-min") return second_mod_min();
  if (name == "tail-sum-mod-min") return tail_sum_mod_min();
  if (name == "km-dh") {
    cache = make_jump_cache(oracle, nb);
    return km_dh_coloring(cache);
  }
  return std::nullopt;
}

inline std::string coloring_names() {
  return "constant-0, constant-1, parity-of-min, parity-of-sum, hashed, dh, comega, diagonal, min-minus-one, "
         "second-mod-min, tail-sum-mod-min, km-dh, km-to-rt:<regressive>, c<n>, hashed-tuples, embed:<tuple coloring>";
}

inline ColoringHandle make_coloring(const Config& cfg) {
  const std::string name = cfg.str("coloring.name");
  const NumberingPtr nb = load_numbering(cfg.str("coloring.programs"));
  const Natural cutoff = cfg.natural("run.cutoff", true);
  const Oracle oracle = parse_oracle(cfg.str("coloring.oracle"), cutoff, nb);
  const Natural seed = cfg.natural("coloring.seed");
  ColoringHandle h;
  h.name = name;

  auto tuple_coloring = [&](const std::string& n) -> std::optional<FiniteColoring> {
    if (n.size() >= 2 && n[0] == 'c' && std::isdigit(static_cast<unsigned char>(n[1]))) {
      std::size_t k = 0;
      try {
        k = std::stoul(n.substr(1));
      } catch (const std::exception&) {
        throw ConfigError("malformed coloring '" + n + "'");
      }
      if (k < 2 || k > 16) throw ConfigError("c<n> needs 2 <= n <= 16");
      h.family = make_capture_family(oracle, parse_mode(cfg.str("coloring.mode")), nb);
      return cn_coloring(k, h.family);
    }
    if (n == "hashed-tuples") {
      Natural dim = cfg.natural("coloring.dimension", true);
      if (dim > 16) throw ConfigError("coloring.dimension must be at most 16");
      return hashed_tuple_coloring(static_cast<std::size_t>(dim), seed);
    }
    return std::nullopt;
  };

  if (auto r = named_regressive(name, oracle, nb, h.jump_cache)) {
    h.regressive = *r;
    h.exact = r->as_exact();
  } else if (name == "constant-0" || name == "constant-1") {
    h.exact = constant_coloring(name.back() - '0');
  } else if (name == "parity-of-min") {
    h.exact = parity_of_min();
  } else if (name == "parity-of-sum") {
    h.exact = parity_of_sum();
  } else if (name == "hashed") {
    h.exact = hashed_coloring(seed);
  } else if (name == "dh") {
    h.jump_cache = make_jump_cache(oracle, nb);
    h.exact = dh_coloring(h.jump_cache);
  } else if (name == "comega") {
    h.family = make_capture_family(oracle, parse_mode(cfg.str("coloring.mode")), nb);
    h.exact = comega_coloring(h.family);
  } else if (name == "diagonal") {
    h.exact = diagonal_coloring(std::make_shared<ColoringTower>(disagreement_base(), nb), oracle);
  } else if (name.rfind("km-to-rt:", 0) == 0) {
    StagedJumpCachePtr unused;
    auto r = named_regressive(name.substr(9), oracle, nb, unused);
    if (!r) throw ConfigError("km-to-rt needs a regressive coloring, got '" + name.substr(9) + "'");
    h.exact = km_to_rt(*r);
  } else if (name.rfind("embed:", 0) == 0) {
    auto t = tuple_coloring(name.substr(6));
    if (!t) throw ConfigError("embed needs a tuple coloring, got '" + name.substr(6) + "'");
    h.exact = embed_finite(*t);
  } else if (auto t = tuple_coloring(name)) {
    h.tuples = *t;
  } else {
    throw ConfigError("unknown coloring '" + name + "'; known: " + coloring_names());
  }
  if (h.exact) h.exact = memoize(*h.exact);
  if (h.tuples) h.tuples = memoize(*h.tuples);
  return h;
}

/// Index of a query token: a number, or eH for the bare HALT program of the numbering.
inline Natural parse_index(const std::string& tok, const NumberingPtr& nb) {
  if (tok == "eH") {
    if (auto* cur = dynamic_cast<const CuratedNumbering*>(nb.get())) {
      const Program halt{Instr::halt()};
      for (std::size_t i = 0; i < cur->size(); ++i)
        if (cur->programs()[i] == halt) return i;
      return cur->size() + encode_program(halt);
    }
    return encode_program({Instr::halt()});
  }
  try {
    std::size_t used = 0;
    Natural v = std::stoull(tok, &used);
    if (used == tok.size() && tok.front() != '-') return v;
  } catch (const std::exception&) {
  }
  throw ConfigError("malformed index '" + tok + "'");
}

}  // namespace exlarge::cli

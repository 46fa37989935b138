#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "exlarge/finset.hpp"

namespace exlarge {

using Color = Natural;

/// Limits for every search that stands in for an unbounded question.
struct SearchBudget {
  Natural max_universe = 4096;        // universe elements considered
  Natural max_candidates = 50'000'000;  // candidate evaluations across one search
  Natural stage_cutoff = 1'000'000;   // step cutoff for oracle answers

  void validate() const {
    if (max_universe == 0 || max_candidates == 0 || stage_cutoff == 0)
      throw std::invalid_argument("search budget values must be positive");
  }
};

enum class WitnessKind { Homogeneous, MinHomogeneous, Chain };

inline std::string to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::Homogeneous: return "homogeneous";
    case WitnessKind::MinHomogeneous: return "min-homogeneous";
    case WitnessKind::Chain: return "chain";
  }
  return "?";
}

inline WitnessKind parse_witness_kind(const std::string& s) {
  if (s == "homogeneous") return WitnessKind::Homogeneous;
  if (s == "min-homogeneous") return WitnessKind::MinHomogeneous;
  if (s == "chain") return WitnessKind::Chain;
  throw std::invalid_argument("unknown witness kind: " + s);
}

struct SearchStats {
  Natural candidates = 0;   // colorings evaluated / candidates scanned
  Natural nodes = 0;        // search nodes visited
  bool exhausted = false;   // true: the search space was fully explored
  bool truncated = false;   // true: the budget cut the search short
};

/// A set plus the color data that makes it interesting. `verified` is set only by a verifier pass.
struct Witness {
  FinSet set;
  WitnessKind kind = WitnessKind::Homogeneous;
  std::optional<Color> color;
  std::map<Natural, Color> min_colors;
  bool verified = false;
  SearchStats stats;
};

}  // namespace exlarge

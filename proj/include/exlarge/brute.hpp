#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "exlarge/coloring.hpp"
#include "exlarge/verify.hpp"
#include "exlarge/witness.hpp"

namespace exlarge {

/// Outcome of an exhaustive finite Ramsey search. With no witness, `stats.exhausted` certifies
/// that every k-subset of the universe was examined.
struct BruteResult {
  std::optional<Witness> witness;
  SearchStats stats;
};

namespace detail {

inline bool monochromatic(Tuple h, const FiniteColoring& c, Color& color, Natural& evals) {
  bool first = true, ok = true;
  for_each_subset(h, c.dimension(), [&](Tuple t) {
    ++evals;
    Color col = c(t);
    if (first) {
      color = col;
      first = false;
    }
    ok = col == color;
    return ok;
  });
  if (first) color = 0;  // no tuples at all
  return ok;
}

inline Witness finish(std::vector<Natural> set, Color color, const FiniteColoring& c, SearchStats stats) {
  Witness w;
  w.set = FinSet(std::move(set));
  w.kind = WitnessKind::Homogeneous;
  w.color = color;
  w.stats = stats;
  w.verified = verify_finite_homogeneous(w.set, c).pass;
  return w;
}

}  // namespace detail

/// Lexicographically least size-k monochromatic subset of u, by plain enumeration.
inline BruteResult brute_homogeneous(const FiniteColoring& c, const FinSet& u, std::size_t k) {
  if (k < c.dimension()) throw std::invalid_argument("brute_homogeneous: k must be at least the dimension");
  BruteResult r;
  std::vector<Natural> found;
  Color color = 0;
  for_each_subset(u.view(), k, [&](Tuple h) {
    ++r.stats.nodes;
    if (detail::monochromatic(h, c, color, r.stats.candidates)) {
      found.assign(h.begin(), h.end());
      return false;
    }
    return true;
  });
  if (found.empty() && k > 0) {
    r.stats.exhausted = true;
    return r;
  }
  r.witness = detail::finish(std::move(found), color, c, r.stats);
  return r;
}

/// Same answer as brute_homogeneous, found by extending partial sets and pruning on the first
/// color clash. Kept as an independent second implementation.
inline BruteResult backtrack_homogeneous(const FiniteColoring& c, const FinSet& u, std::size_t k) {
  if (k < c.dimension()) throw std::invalid_argument("backtrack_homogeneous: k must be at least the dimension");
  const std::size_t n = c.dimension();
  const auto pool = u.view();
  BruteResult r;
  std::vector<Natural> cur;
  std::optional<Color> color;
  std::vector<Natural> scratch;

  // Tuples that end at the newest element of cur.
  auto consistent = [&]() {
    if (cur.size() < n) return true;
    if (n == 0) return true;
    bool ok = true;
    std::span<const Natural> head(cur.data(), cur.size() - 1);
    scratch.resize(n);
    scratch[n - 1] = cur.back();
    for_each_subset(head, n - 1, [&](Tuple t) {
      std::copy(t.begin(), t.end(), scratch.begin());
      ++r.stats.candidates;
      Color col = c(Tuple(scratch));
      if (!color) color = col;
      ok = col == *color;
      return ok;
    });
    return ok;
  };

  std::function<bool(std::size_t)> go = [&](std::size_t from) -> bool {
    ++r.stats.nodes;
    if (cur.size() == k) return true;
    for (std::size_t i = from; i + (k - cur.size()) <= pool.size(); ++i) {
      const auto saved = color;
      cur.push_back(pool[i]);
      if (consistent() && go(i + 1)) return true;
      cur.pop_back();
      color = saved;
    }
    return false;
  };

  if (!go(0)) {
    r.stats.exhausted = true;
    return r;
  }
  r.witness = detail::finish(cur, color.value_or(0), c, r.stats);
  return r;
}

}  // namespace exlarge

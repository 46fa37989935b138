#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "exlarge/erdos_rado.hpp"
#include "exlarge/verify.hpp"
#include "exlarge/witness.hpp"

namespace exlarge {

namespace detail {

// Returns a C-homogeneous subset of u (never truncated; may be shorter than target).
inline std::vector<Natural> extract_rec(const FiniteColoring& c, std::vector<Natural> u, std::size_t target,
                                        const SearchBudget& budget, SearchStats& stats, std::optional<Color>& color) {
  const std::size_t a = c.dimension();
  if (u.size() < a) return u;  // no a-tuples at all
  if (a == 1) {
    // "Infinitely many of color 0 in U" is read as "at least target of them"; color 0 is asked first.
    std::vector<Natural> cls[2];
    for (Natural x : u) {
      ++stats.candidates;
      Color col = c(Tuple(&x, 1));
      if (col > 1) throw std::invalid_argument("f_a_extract expects a two-coloring");
      cls[col].push_back(x);
    }
    int pick = cls[0].size() >= target ? 0 : cls[1].size() >= target ? 1 : cls[1].size() > cls[0].size() ? 1 : 0;
    if (!cls[pick].empty()) color = pick;
    return cls[pick];
  }
  // Along the leftmost branch the color of an a-tuple ignores its last element, so the
  // (a-1)-dimensional coloring "x followed by the next branch element" decides it.
  SearchBudget local = budget;
  local.max_candidates = budget.max_candidates > stats.candidates ? budget.max_candidates - stats.candidates : 1;
  PathResult p = leftmost_path(c, FinSet(u), u.size(), local);
  stats.candidates += p.stats.candidates;
  stats.nodes += p.stats.nodes;
  stats.truncated = stats.truncated || p.stats.truncated;
  std::vector<Natural> path(p.path.elems().begin(), p.path.elems().end());
  if (path.size() < 2) return path;
  std::vector<Natural> ground(path.begin(), path.end() - 1);
  FiniteColoring restricted(c.name() + "|path", a - 1, [&c, &path](Tuple t) {
    auto it = std::upper_bound(path.begin(), path.end(), t.back());
    std::vector<Natural> full(t.begin(), t.end());
    full.push_back(*it);
    return c(Tuple(full));
  });
  return extract_rec(restricted, std::move(ground), target, budget, stats, color);
}

}  // namespace detail

/// Homogeneous set for an a-dimensional two-coloring, following the Erdős–Rado recursion.
/// Every oracle question is answered by bounded search over u. verified = the verifier passed
/// and the witness has `target` elements.
inline Witness f_a_extract(std::size_t a, const FiniteColoring& c, const FinSet& u, std::size_t target,
                           const SearchBudget& budget = {}) {
  if (a == 0) throw std::invalid_argument("f_a_extract: a must be at least 1");
  if (c.dimension() != a) throw std::invalid_argument("f_a_extract: coloring dimension does not match a");
  budget.validate();
  Witness w;
  w.kind = WitnessKind::Homogeneous;
  auto v = u.view();
  std::vector<Natural> ground(v.begin(), v.begin() + std::min<std::size_t>(v.size(), budget.max_universe));
  std::vector<Natural> h = detail::extract_rec(c, std::move(ground), target, budget, w.stats, w.color);
  if (h.size() > target) h.resize(target);
  w.set = FinSet(std::move(h));
  VerifyReport rep = verify_finite_homogeneous(w.set, c);
  if (rep.color) w.color = rep.color;
  w.verified = rep.pass && w.set.size() == target;
  return w;
}

/// One stage of the chain: a_i, the ground set it was extracted from, and the extracted set.
struct ChainStage {
  Natural a = 0;
  FinSet ground;
  FinSet extracted;
  std::optional<Color> color;  // color of exactly large chain subsets with minimum a (if any exist)
  SearchStats stats;
};

struct ChainOptions {
  bool start_at_two = false;  // a_0 = 2 instead of min(U)
};

struct ChainResult {
  Witness witness;               // the thinned chain, kind Chain
  std::vector<Natural> raw;      // a_0, a_1, ... before thinning
  std::vector<ChainStage> stages;
  bool monotone = true;          // ground sets shrink and a_{i+1} is least above a_i
};

/// Builds a_0 < a_1 < ... where X_i is homogeneous for C restricted to minimum a_i and
/// a_{i+1} = min X_i, then keeps one induced color class (larger class, ties to 0; minima
/// that start no exactly large chain subset fit either class).
inline ChainResult iterate_rtomega(const ExactColoring& c, const FinSet& u, const SearchBudget& budget = {},
                                   ChainOptions opt = {}) {
  budget.validate();
  ChainResult r;
  if (u.empty()) return r;
  Natural a = opt.start_at_two ? 2 : u.min();
  if (a == 0) throw std::invalid_argument("iterate_rtomega: universe must lie above 0");
  FinSet prev = u;
  for (;;) {
    r.raw.push_back(a);
    ChainStage st;
    st.a = a;
    st.ground = prev.above(a);
    if (st.ground.empty()) {
      r.stages.push_back(std::move(st));
      break;
    }
    FiniteColoring sec = memoize(section(c, a));
    Witness w = f_a_extract(static_cast<std::size_t>(a), sec, st.ground, st.ground.size(), budget);
    st.extracted = w.set;
    st.stats = w.stats;
    if (!st.extracted.is_subset_of(st.ground)) r.monotone = false;
    prev = st.extracted;
    r.stages.push_back(std::move(st));
    if (prev.empty() || w.stats.truncated) break;
    Natural next = prev.min();
    if (next <= a) r.monotone = false;
    a = next;
  }

  // Induced color of each chain element, read off the first exactly large chain subset it starts.
  FinSet chain(r.raw);
  std::size_t count[2] = {0, 0};
  for (auto& st : r.stages) {
    bool done = false;
    for_each_exactly_large_with_min(chain, st.a, [&](Tuple s) {
      st.color = c(s);
      done = true;
      return false;
    });
    if (done) {
      if (*st.color > 1) throw std::invalid_argument("iterate_rtomega expects a two-coloring");
      ++count[*st.color];
    }
  }
  const Color keep = count[1] > count[0] ? 1 : 0;
  std::vector<Natural> thinned;
  for (const auto& st : r.stages)
    if (!st.color || *st.color == keep) thinned.push_back(st.a);

  Witness& w = r.witness;
  w.kind = WitnessKind::Chain;
  w.set = FinSet(std::move(thinned));
  for (const auto& st : r.stages) {
    w.stats.candidates += st.stats.candidates;
    w.stats.nodes += st.stats.nodes;
    w.stats.truncated = w.stats.truncated || st.stats.truncated;
  }
  VerifyReport rep = verify_exact_homogeneous(w.set, c);
  w.color = rep.color ? *rep.color : keep;
  w.verified = rep.pass;
  return r;
}

}  // namespace exlarge

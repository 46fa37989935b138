#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "exlarge/coloring.hpp"
#include "exlarge/witness.hpp"

namespace exlarge {

/// Children of one Erdős–Rado tree node, least first.
struct ErChildren {
  std::vector<Natural> children;
  bool truncated = false;
};

/// Result of a leftmost-branch search.
struct PathResult {
  FinSet path;
  bool reached = false;  // a branch of the requested length exists
  bool stable = false;   // reached, and no part of the search was cut by the budget
  SearchStats stats;
};

namespace detail {

// A tree node together with the universe elements that can still follow it: everything above
// the last entry that agrees with the entries on all tuples already fixed by condition (2).
struct ErState {
  std::vector<Natural> entries;
  std::vector<Natural> survivors;
};

class ErEngine {
 public:
  ErEngine(const FiniteColoring& c, const SearchBudget& budget, SearchStats& stats)
      : c_(c), a_(c.dimension() - 1), budget_(budget), stats_(stats) {
    if (c.dimension() < 2) throw std::invalid_argument("Erdős–Rado tree needs a coloring of dimension >= 2");
  }

  ErState root(const FinSet& u) const {
    auto v = u.view();
    std::size_t n = std::min<std::size_t>(v.size(), budget_.max_universe);
    return ErState{{}, std::vector<Natural>(v.begin(), v.begin() + n)};
  }

  // Survivors grouped by color signature over the a-subsets that contain the newest entry
  // (the other a-subsets already color every survivor alike). One child per class.
  std::vector<ErState> expand(const ErState& node, bool& truncated) {
    ++stats_.nodes;
    std::vector<ErState> out;
    std::map<std::vector<Color>, std::size_t> classes;
    const std::size_t n = node.entries.size();
    std::vector<Natural> tuple(a_ + 1);
    for (Natural j : node.survivors) {
      if (stats_.candidates >= budget_.max_candidates) {
        truncated = true;
        stats_.truncated = true;
        break;
      }
      ++stats_.candidates;
      std::vector<Color> sig;
      if (n >= a_ && n > 0) {
        std::span<const Natural> head(node.entries.data(), n - 1);
        tuple[a_ - 1] = node.entries.back();
        tuple[a_] = j;
        for_each_subset(head, a_ - 1, [&](Tuple t) {
          std::copy(t.begin(), t.end(), tuple.begin());
          sig.push_back(c_(Tuple(tuple)));
          return true;
        });
      }
      auto [it, inserted] = classes.emplace(std::move(sig), out.size());
      if (inserted) {
        ErState child{node.entries, {}};
        child.entries.push_back(j);
        out.push_back(std::move(child));
      } else {
        out[it->second].survivors.push_back(j);
      }
    }
    return out;
  }

 private:
  const FiniteColoring& c_;
  std::size_t a_;
  const SearchBudget& budget_;
  SearchStats& stats_;
};

}  // namespace detail

/// Children of `node` in the Erdős–Rado tree of C (dimension a+1) over u. Throws if `node`
/// is not a node of that tree.
inline ErChildren er_children(const std::vector<Natural>& node, const FiniteColoring& c, const FinSet& u,
                              const SearchBudget& budget = {}) {
  SearchStats stats;
  detail::ErEngine engine(c, budget, stats);
  ErChildren r;
  detail::ErState cur = engine.root(u);
  for (Natural x : node) {
    auto kids = engine.expand(cur, r.truncated);
    auto it = std::find_if(kids.begin(), kids.end(), [x](const detail::ErState& s) { return s.entries.back() == x; });
    if (it == kids.end()) throw std::invalid_argument("er_children: not a tree node: " + to_string(node));
    cur = std::move(*it);
  }
  for (auto& k : engine.expand(cur, r.truncated)) r.children.push_back(k.entries.back());
  return r;
}

/// Length-`len` prefix of the leftmost branch that reaches length `len`; if none does, the
/// leftmost of the longest branches found.
inline PathResult leftmost_path(const FiniteColoring& c, const FinSet& u, std::size_t len,
                                const SearchBudget& budget = {}) {
  if (len == 0) throw std::invalid_argument("leftmost_path: len must be positive");
  PathResult r;
  detail::ErEngine engine(c, budget, r.stats);
  bool truncated = false;
  std::vector<Natural> best;

  std::function<bool(const detail::ErState&)> dfs = [&](const detail::ErState& s) -> bool {
    if (s.entries.size() > best.size()) best = s.entries;
    if (s.entries.size() == len) return true;
    for (const auto& child : engine.expand(s, truncated))
      if (dfs(child)) return true;
    return false;
  };

  r.reached = dfs(engine.root(u));
  r.path = FinSet(best);
  r.stable = r.reached && !truncated;
  r.stats.truncated = truncated;
  r.stats.exhausted = !r.reached && !truncated;
  return r;
}

}  // namespace exlarge

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "exlarge/coloring.hpp"
#include "exlarge/verify.hpp"
#include "exlarge/witness.hpp"

namespace exlarge {

struct MinHomogResult {
  std::optional<Witness> witness;
  SearchStats stats;  // with no witness, stats.exhausted certifies a complete search
};

/// Lexicographically least size-k subset of u on which the color of exactly large subsets
/// depends only on their minimum. Backtracking: each new (largest) element is checked against
/// every exactly large subset it completes.
template <class Coloring>
MinHomogResult min_homog_search(const Coloring& c, const FinSet& u, std::size_t k) {
  if (k < 2) throw std::invalid_argument("min_homog_search: k must be at least 2");
  const auto pool = u.view();
  MinHomogResult r;
  std::vector<Natural> cur;
  std::map<Natural, Color> colors;
  std::vector<Natural> s;

  // Exactly large subsets of cur whose largest element is cur.back().
  auto consistent = [&](std::map<Natural, Color>& added) {
    const Natural x = cur.back();
    for (std::size_t mi = 0; mi + 1 < cur.size(); ++mi) {
      const Natural m = cur[mi];
      if (m == 0) continue;  // {0} never contains x
      // m, then m-1 elements strictly between m and x, then x.
      std::span<const Natural> mid(cur.data() + mi + 1, cur.size() - mi - 2);
      bool ok = true;
      for_each_subset(mid, static_cast<std::size_t>(m - 1), [&](Tuple t) {
        s.assign(1, m);
        s.insert(s.end(), t.begin(), t.end());
        s.push_back(x);
        ++r.stats.candidates;
        Color col = c(Tuple(s));
        auto [it, inserted] = colors.emplace(m, col);
        if (inserted) added.emplace(m, col);
        ok = it->second == col;
        return ok;
      });
      if (!ok) return false;
    }
    return true;
  };

  std::function<bool(std::size_t)> go = [&](std::size_t from) -> bool {
    ++r.stats.nodes;
    if (cur.size() == k) return true;
    for (std::size_t i = from; i + (k - cur.size()) <= pool.size(); ++i) {
      cur.push_back(pool[i]);
      std::map<Natural, Color> added;
      bool ok = consistent(added);
      if (ok && go(i + 1)) return true;
      for (auto& [m, col] : added) colors.erase(m);
      cur.pop_back();
    }
    return false;
  };

  if (!go(0)) {
    r.stats.exhausted = true;
    return r;
  }
  Witness w;
  w.kind = WitnessKind::MinHomogeneous;
  w.set = FinSet(cur);
  w.stats = r.stats;
  VerifyReport rep = verify_min_homogeneous(w.set, c);
  w.min_colors = rep.min_colors;
  w.verified = rep.pass;
  r.witness = std::move(w);
  return r;
}

}  // namespace exlarge

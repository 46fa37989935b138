#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "exlarge/coloring.hpp"
#include "exlarge/jump.hpp"

namespace exlarge {

/// Shared engine behind the jump-disagreement colorings. Staged jump approximations are
/// cached by (stage list, bound); the cache is synchronized and invisible to callers.
class StagedJumpCache {
 public:
  StagedJumpCache(Oracle x, NumberingPtr nb = standard_numbering()) : x_(std::move(x)), nb_(std::move(nb)) {}

  /// staged_jump(X, stages) ∩ [0, bound).
  FinSet below(const std::vector<Natural>& stages, Natural bound) const {
    std::vector<Natural> key = stages;
    key.push_back(bound);
    {
      std::lock_guard lock(mu_);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    FinSet r = staged_jump_below(*x_, JumpStageSpec{stages}, bound, *nb_);
    std::lock_guard lock(mu_);
    memo_.emplace(std::move(key), r);
    return r;
  }

  /// Least i in [1, n] at which the two staged approximations read off A = {2n, a_1..a_2n}
  /// disagree on a code below a_{n-i}; 0 if none or if min(A) is odd.
  Natural least_disagreement(Tuple a) const {
    if (a.front() % 2 != 0) return 0;
    const std::size_t n = static_cast<std::size_t>(a.front() / 2);
    for (std::size_t i = 1; i <= n; ++i) {
      std::vector<Natural> left, right;
      for (std::size_t k = 0; k < i; ++k) {
        left.push_back(a[n - k]);
        right.push_back(a[2 * n - k]);
      }
      const Natural bound = a[n - i];
      if (below(left, bound) != below(right, bound)) return i;
    }
    return 0;
  }

  const Oracle& oracle() const noexcept { return x_; }
  const NumberingPtr& numbering() const noexcept { return nb_; }

 private:
  Oracle x_;
  NumberingPtr nb_;
  mutable std::mutex mu_;
  mutable std::map<std::vector<Natural>, FinSet> memo_;
};

using StagedJumpCachePtr = std::shared_ptr<const StagedJumpCache>;

inline StagedJumpCachePtr make_jump_cache(Oracle x, NumberingPtr nb = standard_numbering()) {
  return std::make_shared<StagedJumpCache>(std::move(x), std::move(nb));
}

/// Two-coloring: 1 iff some level i in [1, n] disagrees (min = 2n); 0 on odd minimum.
inline ExactColoring dh_coloring(const StagedJumpCachePtr& cache) {
  return ExactColoring("dh", 2, [cache](Tuple a) -> Color { return cache->least_disagreement(a) ? 1 : 0; });
}

/// Regressive variant: the least disagreeing level itself (at most n < 2n = min).
inline RegressiveColoring km_dh_coloring(const StagedJumpCachePtr& cache) {
  return RegressiveColoring(
      ExactColoring("km-dh", 0, [cache](Tuple a) -> Color { return cache->least_disagreement(a); }));
}

}  // namespace exlarge

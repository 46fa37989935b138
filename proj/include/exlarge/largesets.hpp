#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "exlarge/finset.hpp"

namespace exlarge {

/// card(S) = min(S) + 1. The empty set is not exactly large; {0} is.
inline bool is_exactly_large(std::span<const Natural> s) noexcept {
  return !s.empty() && s.size() == s.front() + 1;
}

inline bool is_exactly_large(const FinSet& s) noexcept { return is_exactly_large(s.view()); }

/// A FinSet known to satisfy card = min + 1.
class ExactlyLargeSet {
 public:
  explicit ExactlyLargeSet(FinSet s) : set_(std::move(s)) {
    if (!is_exactly_large(set_)) throw std::invalid_argument("not exactly large: " + to_string(set_));
  }
  const FinSet& set() const noexcept { return set_; }
  Natural min() const { return set_.min(); }

 private:
  FinSet set_;
};

struct MinDecomposition {
  Natural head;
  FinSet tail;
};

/// Splits S into its minimum and the remaining min(S) elements.
inline MinDecomposition min_decompose(const FinSet& s) {
  if (!is_exactly_large(s)) throw std::invalid_argument("min_decompose: not exactly large: " + to_string(s));
  return {s.min(), s.without(s.min())};
}

/// Lazily streams every exactly large subset of a finite pool in lexicographic order.
class ExactlyLargeStream {
 public:
  explicit ExactlyLargeStream(const FinSet& pool) : pool_(pool.elems()) {}

  /// Advances to the next set; false once exhausted.
  bool next() {
    if (done_) return false;
    if (started_ && advance_combination()) return fill();
    started_ = true;
    for (;;) {
      if (started_min_) ++head_;
      started_min_ = true;
      if (head_ >= pool_.size()) {
        done_ = true;
        return false;
      }
      const Natural m = pool_[head_];
      const std::size_t avail = pool_.size() - head_ - 1;
      if (m > avail) continue;
      idx_.resize(static_cast<std::size_t>(m));
      for (std::size_t i = 0; i < idx_.size(); ++i) idx_[i] = head_ + 1 + i;
      return fill();
    }
  }

  std::span<const Natural> current() const noexcept { return cur_; }

 private:
  bool advance_combination() {
    const std::size_t n = pool_.size();
    const std::size_t k = idx_.size();
    std::size_t i = k;
    while (i > 0 && idx_[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return false;
    ++idx_[i - 1];
    for (std::size_t j = i; j < k; ++j) idx_[j] = idx_[j - 1] + 1;
    return true;
  }

  bool fill() {
    cur_.resize(idx_.size() + 1);
    cur_[0] = pool_[head_];
    for (std::size_t i = 0; i < idx_.size(); ++i) cur_[i + 1] = pool_[idx_[i]];
    return true;
  }

  std::vector<Natural> pool_;
  std::vector<std::size_t> idx_;
  std::vector<Natural> cur_;
  std::size_t head_ = 0;
  bool started_ = false;
  bool started_min_ = false;
  bool done_ = false;
};

/// Visits exactly large subsets of `pool` in lexicographic order. `fn` returns false to stop.
/// Returns false iff stopped early.
template <class Fn>
bool for_each_exactly_large(const FinSet& pool, Fn&& fn) {
  ExactlyLargeStream stream(pool);
  while (stream.next())
    if (!fn(stream.current())) return false;
  return true;
}

/// Exactly large subsets of `pool` whose minimum is `m` (m must belong to pool).
template <class Fn>
bool for_each_exactly_large_with_min(const FinSet& pool, Natural m, Fn&& fn) {
  if (!pool.contains(m)) return true;
  FinSet rest = pool.above(m);
  std::vector<Natural> buf;
  return for_each_subset(rest.view(), static_cast<std::size_t>(m), [&](std::span<const Natural> tail) {
    buf.assign(1, m);
    buf.insert(buf.end(), tail.begin(), tail.end());
    return fn(std::span<const Natural>(buf));
  });
}

inline std::vector<FinSet> enumerate_exactly_large(const FinSet& pool) {
  std::vector<FinSet> out;
  for_each_exactly_large(pool, [&](std::span<const Natural> s) {
    out.emplace_back(std::vector<Natural>(s.begin(), s.end()));
    return true;
  });
  return out;
}

/// Sum over m in pool of binomial(#{x in pool : x > m}, m).
inline Natural count_exactly_large(const FinSet& pool) {
  Natural total = 0;
  for (std::size_t i = 0; i < pool.size(); ++i) total += binomial(pool.size() - i - 1, pool[i]);
  return total;
}

}  // namespace exlarge

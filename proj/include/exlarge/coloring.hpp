#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exlarge/largesets.hpp"

namespace exlarge {

using Color = Natural;
using Tuple = std::span<const Natural>;

/// A pure total coloring of exactly large sets.
class ExactColoring {
 public:
  using Fn = std::function<Color(Tuple)>;

  ExactColoring(std::string name, Natural palette, Fn fn)
      : name_(std::move(name)), palette_(palette), fn_(std::move(fn)) {}

  Color operator()(Tuple s) const {
    if (!is_exactly_large(s)) throw std::invalid_argument(name_ + ": input not exactly large: " + to_string(s));
    return fn_(s);
  }
  Color operator()(const FinSet& s) const { return (*this)(s.view()); }

  const std::string& name() const noexcept { return name_; }
  /// Number of colors; 0 means unbounded (regressive colorings).
  Natural palette() const noexcept { return palette_; }

 private:
  std::string name_;
  Natural palette_;
  Fn fn_;
};

/// An exactly large coloring with C(S) < min(S) whenever min(S) > 0, and C(S) = 0 when min(S) = 0.
/// The bound is enforced on every evaluation.
class RegressiveColoring {
 public:
  explicit RegressiveColoring(ExactColoring base) : base_(std::move(base)) {}

  Color operator()(Tuple s) const {
    Color c = base_(s);
    if ((s.front() == 0 && c != 0) || (s.front() > 0 && c >= s.front()))
      throw std::logic_error(base_.name() + ": regressive bound violated on " + to_string(s));
    return c;
  }
  Color operator()(const FinSet& s) const { return (*this)(s.view()); }

  const std::string& name() const noexcept { return base_.name(); }
  const ExactColoring& as_exact() const noexcept { return base_; }

 private:
  ExactColoring base_;
};

/// A coloring of increasing n-tuples.
class FiniteColoring {
 public:
  using Fn = std::function<Color(Tuple)>;

  FiniteColoring(std::string name, std::size_t dimension, Fn fn, Natural palette = 2)
      : name_(std::move(name)), dimension_(dimension), palette_(palette), fn_(std::move(fn)) {}

  Color operator()(Tuple t) const {
    if (t.size() != dimension_)
      throw std::invalid_argument(name_ + ": expected " + std::to_string(dimension_) + "-tuple, got " + to_string(t));
    return fn_(t);
  }
  Color operator()(std::initializer_list<Natural> t) const { return (*this)(Tuple(t.begin(), t.size())); }

  const std::string& name() const noexcept { return name_; }
  std::size_t dimension() const noexcept { return dimension_; }
  Natural palette() const noexcept { return palette_; }

 private:
  std::string name_;
  std::size_t dimension_;
  Natural palette_;
  Fn fn_;
};

namespace detail {

class TupleMemo {
 public:
  template <class Compute>
  Color get(Tuple t, Compute&& compute) {
    std::vector<Natural> key(t.begin(), t.end());
    {
      std::lock_guard lock(mu_);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    Color c = compute();
    std::lock_guard lock(mu_);
    memo_.emplace(std::move(key), c);
    return c;
  }

 private:
  std::mutex mu_;
  std::map<std::vector<Natural>, Color> memo_;
};

}  // namespace detail

/// Same coloring with a shared, synchronized result cache.
inline FiniteColoring memoize(const FiniteColoring& c) {
  auto memo = std::make_shared<detail::TupleMemo>();
  return FiniteColoring(c.name(), c.dimension(), [c, memo](Tuple t) { return memo->get(t, [&] { return c(t); }); },
                        c.palette());
}

inline ExactColoring memoize(const ExactColoring& c) {
  auto memo = std::make_shared<detail::TupleMemo>();
  return ExactColoring(c.name(), c.palette(), [c, memo](Tuple t) { return memo->get(t, [&] { return c(t); }); });
}

// ---- simple colorings used as fixtures and CLI presets ----

inline ExactColoring constant_coloring(Color c) {
  return ExactColoring("constant-" + std::to_string(c), 2, [c](Tuple) { return c; });
}

inline ExactColoring parity_of_min() {
  return ExactColoring("parity-of-min", 2, [](Tuple s) { return s.front() % 2; });
}

inline ExactColoring parity_of_sum() {
  return ExactColoring("parity-of-sum", 2, [](Tuple s) {
    Natural sum = 0;
    for (Natural x : s) sum += x;
    return sum % 2;
  });
}

namespace detail {

inline std::uint64_t mix_tuple(std::uint64_t seed, Tuple t) {
  std::uint64_t h = seed * 0x9E3779B97F4A7C15ull + 1;
  for (Natural x : t) {
    h ^= x + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    h *= 0xBF58476D1CE4E5B9ull;
  }
  return h >> 29;
}

}  // namespace detail

/// Pseudo-random two-coloring fixed by a seed; independent of evaluation order.
inline ExactColoring hashed_coloring(std::uint64_t seed) {
  return ExactColoring("hashed-" + std::to_string(seed), 2,
                       [seed](Tuple s) -> Color { return detail::mix_tuple(seed, s) & 1; });
}

inline FiniteColoring hashed_tuple_coloring(std::size_t dimension, std::uint64_t seed) {
  return FiniteColoring("hashed-tuples-" + std::to_string(seed), dimension,
                        [seed](Tuple t) -> Color { return detail::mix_tuple(seed, t) & 1; });
}

/// C(S) = min(S) - 1 (0 on min 0).
inline RegressiveColoring min_minus_one() {
  return RegressiveColoring(ExactColoring("min-minus-one", 0, [](Tuple s) { return s.front() == 0 ? 0 : s.front() - 1; }));
}

/// C(S) = second element mod min(S) (0 on min 0).
inline RegressiveColoring second_mod_min() {
  return RegressiveColoring(ExactColoring("second-mod-min", 0, [](Tuple s) -> Color {
    if (s.front() == 0) return 0;
    return s[1] % s.front();
  }));
}

/// C(S) = (sum of S minus its minimum) mod min(S) (0 on min 0).
inline RegressiveColoring tail_sum_mod_min() {
  return RegressiveColoring(ExactColoring("tail-sum-mod-min", 0, [](Tuple s) -> Color {
    if (s.front() == 0) return 0;
    Natural sum = 0;
    for (std::size_t i = 1; i < s.size(); ++i) sum += s[i];
    return sum % s.front();
  }));
}

/// Restriction of an exact coloring to sets with a fixed minimum a: C_a(x_1..x_a) = C(a, x_1..x_a).
inline FiniteColoring section(const ExactColoring& c, Natural a) {
  return FiniteColoring(c.name() + "@" + std::to_string(a), static_cast<std::size_t>(a), [c, a](Tuple t) {
    std::vector<Natural> s;
    s.reserve(t.size() + 1);
    s.push_back(a);
    s.insert(s.end(), t.begin(), t.end());
    return c(Tuple(s));
  });
}

/// C'(s_0..s_m) = C(s_0..s_{n-1}) if s_0 >= n, else 0.
inline ExactColoring embed_finite(const FiniteColoring& c) {
  const std::size_t n = c.dimension();
  if (n == 0) throw std::invalid_argument("embed_finite: dimension must be at least 1");
  return ExactColoring("embed(" + c.name() + ")", c.palette(), [c, n](Tuple s) -> Color {
    if (s.front() < n) return 0;
    return c(s.first(n));
  });
}

/// A homogeneous set for embed_finite(C) becomes homogeneous for C after dropping elements below n.
inline FinSet embed_witness(const FinSet& h, std::size_t n) {
  if (n == 0) return h;
  return h.above(static_cast<Natural>(n) - 1);
}

}  // namespace exlarge

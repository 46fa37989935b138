#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace exlarge {

/// Naturals are 64-bit throughout; every desk-scale experiment stays far below 2^32.
using Natural = std::uint64_t;

/// A strictly increasing finite sequence of naturals.
class FinSet {
 public:
  FinSet() = default;

  FinSet(std::initializer_list<Natural> elems) : elems_(elems) { check(); }

  explicit FinSet(std::vector<Natural> elems) : elems_(std::move(elems)) { check(); }

  /// Builds from arbitrary values, sorting and removing duplicates.
  static FinSet from_unsorted(std::vector<Natural> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    FinSet s;
    s.elems_ = std::move(values);
    return s;
  }

  static FinSet interval(Natural lo, Natural hi) {
    FinSet s;
    for (Natural x = lo; x <= hi; ++x) s.elems_.push_back(x);
    return s;
  }

  bool empty() const noexcept { return elems_.empty(); }
  std::size_t size() const noexcept { return elems_.size(); }
  Natural min() const {
    if (elems_.empty()) throw std::domain_error("min of empty set");
    return elems_.front();
  }
  Natural max() const {
    if (elems_.empty()) throw std::domain_error("max of empty set");
    return elems_.back();
  }
  Natural operator[](std::size_t i) const { return elems_[i]; }

  bool contains(Natural x) const { return std::binary_search(elems_.begin(), elems_.end(), x); }

  bool is_subset_of(const FinSet& other) const {
    return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
  }

  /// Elements strictly greater than `bound`.
  FinSet above(Natural bound) const {
    FinSet s;
    s.elems_.assign(std::upper_bound(elems_.begin(), elems_.end(), bound), elems_.end());
    return s;
  }

  /// Elements strictly less than `bound`.
  FinSet below(Natural bound) const {
    FinSet s;
    s.elems_.assign(elems_.begin(), std::lower_bound(elems_.begin(), elems_.end(), bound));
    return s;
  }

  FinSet with(Natural x) const {
    std::vector<Natural> v = elems_;
    v.insert(std::lower_bound(v.begin(), v.end(), x), x);
    return FinSet(std::move(v));
  }

  FinSet without(Natural x) const {
    FinSet s = *this;
    auto it = std::lower_bound(s.elems_.begin(), s.elems_.end(), x);
    if (it != s.elems_.end() && *it == x) s.elems_.erase(it);
    return s;
  }

  std::span<const Natural> view() const noexcept { return elems_; }
  const std::vector<Natural>& elems() const noexcept { return elems_; }
  auto begin() const noexcept { return elems_.begin(); }
  auto end() const noexcept { return elems_.end(); }

  friend bool operator==(const FinSet&, const FinSet&) = default;
  friend auto operator<=>(const FinSet& a, const FinSet& b) { return a.elems_ <=> b.elems_; }

 private:
  void check() const {
    for (std::size_t i = 1; i < elems_.size(); ++i)
      if (elems_[i - 1] >= elems_[i]) throw std::invalid_argument("FinSet elements must be strictly increasing");
  }

  std::vector<Natural> elems_;
};

inline std::string to_string(std::span<const Natural> elems) {
  std::string out = "{";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(elems[i]);
  }
  out += '}';
  return out;
}

inline std::string to_string(const FinSet& s) { return to_string(s.view()); }

inline std::ostream& operator<<(std::ostream& os, const FinSet& s) { return os << to_string(s); }

/// Parses `{a,b,c}` with optional whitespace; elements must be strictly increasing.
inline FinSet parse_finset(std::string_view text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const char* why) {
    throw std::invalid_argument(std::string("malformed set '") + std::string(text) + "': " + why);
  };
  skip();
  if (i >= text.size() || text[i] != '{') fail("expected '{'");
  ++i;
  std::vector<Natural> elems;
  skip();
  if (i < text.size() && text[i] == '}') {
    ++i;
  } else {
    for (;;) {
      skip();
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) fail("expected a number");
      Natural v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        Natural d = static_cast<Natural>(text[i] - '0');
        if (v > (std::numeric_limits<Natural>::max() - d) / 10) fail("number out of range");
        v = v * 10 + d;
        ++i;
      }
      elems.push_back(v);
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == '}') {
        ++i;
        break;
      }
      fail("expected ',' or '}'");
    }
  }
  skip();
  if (i != text.size()) fail("trailing characters");
  for (std::size_t k = 1; k < elems.size(); ++k)
    if (elems[k - 1] >= elems[k]) fail("elements not strictly increasing");
  return FinSet(std::move(elems));
}

/// binomial(n, k), saturating at the maximum Natural.
inline Natural binomial(Natural n, Natural k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (Natural i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<Natural>::max()) return std::numeric_limits<Natural>::max();
  }
  return static_cast<Natural>(r);
}

/// Calls `fn(span)` on every size-k subset of `pool` in lexicographic order; stops early if fn returns false.
/// Returns false iff stopped early.
template <class Fn>
bool for_each_subset(std::span<const Natural> pool, std::size_t k, Fn&& fn) {
  const std::size_t n = pool.size();
  if (k > n) return true;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<Natural> buf(k);
  for (;;) {
    for (std::size_t i = 0; i < k; ++i) buf[i] = pool[idx[i]];
    if (!fn(std::span<const Natural>(buf))) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace exlarge

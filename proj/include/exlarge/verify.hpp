#pragma once

#include <map>
#include <optional>
#include <string>

#include "exlarge/coloring.hpp"

namespace exlarge {

/// Outcome of a brute-force homogeneity check. Only subsets fully inside the tested set are inspected.
struct VerifyReport {
  bool pass = true;
  Natural sets_checked = 0;
  std::optional<Color> color;                 // common color (homogeneous checks)
  std::map<Natural, Color> min_colors;        // per-minimum color (min-homogeneous checks)
  std::optional<FinSet> reference;            // first set of the conflicting pair
  std::optional<FinSet> offending;            // set whose color disagrees with `reference`
};

inline std::string describe(const VerifyReport& r) {
  if (r.pass) return "pass (" + std::to_string(r.sets_checked) + " sets)";
  return "fail: " + to_string(*r.reference) + " vs " + to_string(*r.offending);
}

namespace detail {

inline FinSet to_finset(Tuple t) { return FinSet(std::vector<Natural>(t.begin(), t.end())); }

}  // namespace detail

/// Every exactly large subset of h gets the same color.
template <class Coloring>
VerifyReport verify_exact_homogeneous(const FinSet& h, const Coloring& c) {
  VerifyReport r;
  FinSet first;
  for_each_exactly_large(h, [&](Tuple s) {
    ++r.sets_checked;
    Color col = c(s);
    if (!r.color) {
      r.color = col;
      first = detail::to_finset(s);
      return true;
    }
    if (col != *r.color) {
      r.pass = false;
      r.reference = first;
      r.offending = detail::to_finset(s);
      return false;
    }
    return true;
  });
  return r;
}

/// Exactly large subsets of h with equal minimum get equal colors.
template <class Coloring>
VerifyReport verify_min_homogeneous(const FinSet& h, const Coloring& c) {
  VerifyReport r;
  std::map<Natural, FinSet> first;
  for_each_exactly_large(h, [&](Tuple s) {
    ++r.sets_checked;
    Color col = c(s);
    auto [it, inserted] = r.min_colors.emplace(s.front(), col);
    if (inserted) {
      first.emplace(s.front(), detail::to_finset(s));
      return true;
    }
    if (it->second != col) {
      r.pass = false;
      r.reference = first.at(s.front());
      r.offending = detail::to_finset(s);
      return false;
    }
    return true;
  });
  return r;
}

/// Every n-subset of h gets the same color under a dimension-n coloring.
inline VerifyReport verify_finite_homogeneous(const FinSet& h, const FiniteColoring& c) {
  VerifyReport r;
  FinSet first;
  for_each_subset(h.view(), c.dimension(), [&](Tuple t) {
    ++r.sets_checked;
    Color col = c(t);
    if (!r.color) {
      r.color = col;
      first = detail::to_finset(t);
      return true;
    }
    if (col != *r.color) {
      r.pass = false;
      r.reference = first;
      r.offending = detail::to_finset(t);
      return false;
    }
    return true;
  });
  return r;
}

}  // namespace exlarge

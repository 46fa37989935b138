#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "exlarge/coloring.hpp"
#include "exlarge/verify.hpp"

namespace exlarge {

/// Two-coloring from a regressive one. For A = {a_0 < a_1 < ... < a_{a_0}} with a_0 >= 1,
/// C'(A) = 1 iff all exactly large sets with minimum a_0 - 1 drawn from {a - 1 : a in A} share
/// one C-color. C' is 0 on sets with minimum 0.
inline ExactColoring km_to_rt(const RegressiveColoring& c) {
  return ExactColoring("rt(" + c.name() + ")", 2, [c](Tuple a) -> Color {
    if (a.front() == 0) return 0;
    const Natural m = a.front() - 1;
    std::vector<Natural> rest;
    for (std::size_t i = 1; i < a.size(); ++i) rest.push_back(a[i] - 1);
    std::optional<Color> seen;
    bool same = true;
    std::vector<Natural> s(1, m);
    for_each_subset(rest, static_cast<std::size_t>(m), [&](Tuple pick) {
      s.resize(1);
      s.insert(s.end(), pick.begin(), pick.end());
      Color col = c(s);
      if (!seen) seen = col;
      same = *seen == col;
      return same;
    });
    return same ? 1 : 0;
  });
}

/// Y = {x - 1 : x in X, x >= 1}.
inline FinSet km_witness_transform(const FinSet& x) {
  std::vector<Natural> v;
  for (Natural e : x.elems())
    if (e >= 1) v.push_back(e - 1);
  return FinSet(std::move(v));
}

/// Result of thinning a min-homogeneous set to a homogeneous one.
struct PigeonholeResult {
  FinSet set;
  Color color = 0;
  std::map<Natural, Color> induced;  // minima that start at least one exactly large subset of H
};

/// Keeps the elements whose induced color matches the larger class (ties to 0). Elements
/// that start no exactly large subset of H impose no constraint and are kept in either class.
inline PigeonholeResult rt_via_km(const ExactColoring& c, const FinSet& h) {
  VerifyReport check = verify_min_homogeneous(h, c);
  if (!check.pass) throw std::invalid_argument("rt_via_km: set is not min-homogeneous: " + describe(check));
  std::size_t count[2] = {0, 0};
  for (auto [m, col] : check.min_colors) {
    if (col > 1) throw std::invalid_argument("rt_via_km: coloring is not two-valued");
    ++count[col];
  }
  PigeonholeResult r;
  r.color = count[1] > count[0] ? 1 : 0;
  r.induced = check.min_colors;
  std::vector<Natural> keep;
  for (Natural x : h.elems()) {
    auto it = check.min_colors.find(x);
    if (it == check.min_colors.end() || it->second == r.color) keep.push_back(x);
  }
  r.set = FinSet(std::move(keep));
  return r;
}

}  // namespace exlarge

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "exlarge/capture.hpp"
#include "exlarge/hardness.hpp"
#include "exlarge/jump.hpp"
#include "exlarge/largesets.hpp"

namespace exlarge {

enum class VerdictStatus { Ok, InsufficientData };

struct DecodeVerdict {
  Natural level = 0;       // i in "j ∈ A^(i)"
  Natural query = 0;       // j
  bool answer = false;
  VerdictStatus status = VerdictStatus::Ok;
  FinSet tuple_used;
  Natural reduced_index = 0;         // the index handed to the level decoder
  std::optional<bool> truth;         // cutoff ground truth, when requested
  std::string note;

  /// Matches ground truth; vacuously true when no truth is attached.
  bool consistent() const { return status == VerdictStatus::Ok && (!truth || *truth == answer); }
};

/// M_2(e, (k, b, b')): does e halt relative to A within bound b? Requires e <= k.
inline bool m2_decode(const CaptureFamily& fam, Natural e, Tuple t) {
  if (t.size() != 3) throw std::invalid_argument("m2_decode expects a triple");
  return fam.decode(2, e, t);
}

/// M_n(e, (a_1..a_{n+1})); decides A^(n-1) on C_n-homogeneous tuples.
inline bool mn_decode(const CaptureFamily& fam, std::size_t n, Natural e, Tuple t) { return fam.decode(n, e, t); }

/// M_omega(e, S) = M_{min S}(e, S).
inline bool momega_decode(const CaptureFamily& fam, Natural e, Tuple s) {
  if (!is_exactly_large(s)) throw std::invalid_argument("momega_decode: input not exactly large: " + to_string(s));
  if (s.front() < 2) throw std::invalid_argument("momega_decode: minimum must be at least 2");
  return fam.decode(static_cast<std::size_t>(s.front()), e, s);
}

/// Cutoff ground truth for e ∈ A^(level) in the halt-on-0 flavor.
inline bool halt0_truth(const Oracle& a, std::size_t level, Natural e, Natural cutoff, NumberingPtr nb) {
  return halt0_tower(a, level, cutoff, std::move(nb))->contains(e);
}

/// Decides j ∈ A^(i): takes the least a_1 ∈ H above i and j and the a_1 elements after it,
/// reduces j to level a_1 - 1 (the level M_{a_1} decides) and runs M_{a_1}.
inline DecodeVerdict m_decode(const CaptureFamily& fam, Natural i, Natural j, const FinSet& h) {
  DecodeVerdict v;
  v.level = i;
  v.query = j;
  auto insufficient = [&](std::string why) {
    v.status = VerdictStatus::InsufficientData;
    v.note = std::move(why);
    return v;
  };
  auto above = h.above(std::max(i, j));
  if (above.empty()) return insufficient("no element of H above " + std::to_string(std::max(i, j)));
  const Natural a1 = above.min();
  if (a1 < 2) return insufficient("least candidate is below 2");
  auto elems = above.elems();
  if (elems.size() < a1 + 1) return insufficient("H has fewer than " + std::to_string(a1 + 1) + " elements from " +
                                                 std::to_string(a1));
  std::vector<Natural> t(elems.begin(), elems.begin() + static_cast<std::ptrdiff_t>(a1 + 1));
  v.tuple_used = FinSet(t);
  Natural e = j;
  if (i + 1 < a1) {
    try {
      e = mone_reduction(i, a1 - 1, j, JumpFlavor::Halt0Jump);
    } catch (const std::overflow_error&) {
      return insufficient("reduced index exceeds 64 bits");
    }
    if (auto* cur = dynamic_cast<const CuratedNumbering*>(fam.numbering().get())) e += cur->size();
  }
  v.reduced_index = e;
  if (e > a1) return insufficient("reduced index " + std::to_string(e) + " exceeds tuple minimum " + std::to_string(a1));
  v.answer = fam.decode(static_cast<std::size_t>(a1), e, t);
  return v;
}

/// One reconstructed level of the jump hierarchy.
struct DhLevel {
  std::size_t level = 0;
  FinSet members;                 // covered codes in the level
  Natural covered_below = 0;      // every code below this is covered
  std::vector<Natural> uncovered;  // codes below the limit without a qualifying tuple
};

struct DhReconstruction {
  std::vector<DhLevel> levels;  // levels 0 .. n-1
  bool partial = false;
};

/// Reads X_0 = X, X_1, ..., X_{n-1} off a color-0 homogeneous set for dh_coloring, with h = 2n.
/// Level i decides a code c with the lexicographically least exactly large A ⊆ H of minimum h
/// whose a_{n-i} exceeds c, answering from the staged jump along a_n, ..., a_{n-i+1}. Codes are
/// examined below `code_limit`.
inline DhReconstruction dh_reconstruct(const StagedJumpCache& cache, const FinSet& h, Natural two_n,
                                       Natural code_limit) {
  if (two_n == 0 || two_n % 2 != 0) throw std::invalid_argument("dh_reconstruct: h must be a positive even number");
  if (!h.contains(two_n)) throw std::invalid_argument("dh_reconstruct: h is not an element of H");
  const std::size_t n = static_cast<std::size_t>(two_n / 2);
  DhReconstruction r;
  DhLevel base;
  base.level = 0;
  base.members = restrict_below(*cache.oracle(), code_limit);
  base.covered_below = code_limit;
  r.levels.push_back(std::move(base));
  const FinSet rest = h.above(two_n);

  for (std::size_t i = 1; i < n; ++i) {
    DhLevel lv;
    lv.level = i;
    std::vector<Natural> members;
    Natural next = 0;  // least code not yet decided
    // Largest a_{n-i} any exactly large A of minimum 2n can have.
    const std::size_t need_after = 2 * n - (n - i);
    Natural ceiling = 0;
    if (rest.size() >= 2 * n) ceiling = rest.elems()[rest.size() - 1 - need_after];
    const Natural target = std::min(ceiling, code_limit);
    if (next < target) {
      for_each_exactly_large_with_min(h, two_n, [&](Tuple a) {
        const Natural bound = a[n - i];
        if (bound <= next) return true;
        std::vector<Natural> stages;
        for (std::size_t k = 0; k < i; ++k) stages.push_back(a[n - k]);
        FinSet level = cache.below(stages, bound);
        for (Natural c = next; c < std::min(bound, target); ++c)
          if (level.contains(c)) members.push_back(c);
        next = std::min(bound, target);
        return next < target;
      });
    }
    lv.members = FinSet(std::move(members));
    lv.covered_below = next;
    for (Natural c = next; c < code_limit; ++c) lv.uncovered.push_back(c);
    if (!lv.uncovered.empty()) r.partial = true;
    r.levels.push_back(std::move(lv));
  }
  return r;
}

}  // namespace exlarge

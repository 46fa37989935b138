#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "exlarge/coloring.hpp"
#include "exlarge/jump.hpp"

namespace exlarge {

/// Direction of the stage comparison in C_2 and C_{n+1}.
/// Literal: halting by the smaller stage implies halting by the larger (a tautology for
/// monotone bounded runs, so the coloring is constant 1).
/// Capture: halting by the larger stage implies halting by the smaller one.
enum class CaptureMode { Capture, Literal };

/// The colorings C_n (n >= 2, dimension n+1) and the decoders M_n, all relative to A.
/// Results are cached per tuple; the object is safe to share between threads.
class CaptureFamily {
 public:
  CaptureFamily(Oracle a, CaptureMode mode = CaptureMode::Capture, NumberingPtr nb = standard_numbering())
      : a_(std::move(a)), mode_(mode), nb_(std::move(nb)) {}

  /// C_n on an increasing (n+1)-tuple.
  Color color(std::size_t n, Tuple t) const {
    check(n, t, "C");
    Key key{n, {t.begin(), t.end()}};
    {
      std::lock_guard lock(mu_);
      if (auto it = colors_.find(key); it != colors_.end()) return it->second;
    }
    Color c = compute_color(n, t);
    std::lock_guard lock(mu_);
    colors_.emplace(std::move(key), c);
    return c;
  }

  /// M_n(e, t): n = 2 searches for a halting computation of e relative to A below t[1];
  /// n > 2 first builds Y from M_{n-1} on the tail, then runs e relative to Y below t[1].
  /// Total on every input; requires e <= t[0].
  bool decode(std::size_t n, Natural e, Tuple t) const {
    check(n, t, "M");
    if (e > t[0]) throw std::invalid_argument("decoder query index exceeds the tuple's first element");
    if (n == 2) return halts_within(e, *a_, 0, t[1], *nb_);
    ExplicitOracle y(decoded_set(n, t));
    return halts_within(e, y, 0, t[1], *nb_);
  }

  /// Y = {i <= t[1] : M_{n-1}(i, tail(t))} for n >= 3.
  FinSet decoded_set(std::size_t n, Tuple t) const {
    check(n, t, "Y");
    if (n < 3) throw std::invalid_argument("decoded_set requires n >= 3");
    Key key{n, {t.begin(), t.end()}};
    {
      std::lock_guard lock(mu_);
      if (auto it = ysets_.find(key); it != ysets_.end()) return it->second;
    }
    Tuple tail = t.subspan(1);
    std::vector<Natural> v;
    for (Natural i = 0; i <= t[1]; ++i)
      if (decode(n - 1, i, tail)) v.push_back(i);
    FinSet y(std::move(v));
    std::lock_guard lock(mu_);
    ysets_.emplace(std::move(key), y);
    return y;
  }

  const Oracle& oracle() const noexcept { return a_; }
  CaptureMode mode() const noexcept { return mode_; }
  const NumberingPtr& numbering() const noexcept { return nb_; }

 private:
  using Key = std::pair<std::size_t, std::vector<Natural>>;

  static void check(std::size_t n, Tuple t, const char* what) {
    if (n < 2) throw std::invalid_argument(std::string(what) + "_n requires n >= 2");
    if (t.size() != n + 1)
      throw std::invalid_argument(std::string(what) + "_" + std::to_string(n) + " expects an " + std::to_string(n + 1) +
                                  "-tuple, got " + to_string(t));
    for (std::size_t i = 1; i < t.size(); ++i)
      if (t[i - 1] >= t[i]) throw std::invalid_argument("tuple not strictly increasing: " + to_string(t));
  }

  bool implication(const OracleSet& oracle, Natural bound, Natural small, Natural large) const {
    for (Natural e = 0; e <= bound; ++e) {
      bool at_small = halts_within(e, oracle, 0, small, *nb_);
      bool at_large = halts_within(e, oracle, 0, large, *nb_);
      bool ok = mode_ == CaptureMode::Capture ? (!at_large || at_small) : (!at_small || at_large);
      if (!ok) return false;
    }
    return true;
  }

  Color compute_color(std::size_t n, Tuple t) const {
    if (n == 2) return implication(*a_, t[0], t[1], t[2]) ? 1 : 0;
    // First conjunct: the whole tuple is C_{n-1}-homogeneous.
    std::optional<Color> common;
    bool homogeneous = true;
    for_each_subset(t, n, [&](Tuple sub) {
      Color c = color(n - 1, sub);
      if (!common) common = c;
      if (c != *common) homogeneous = false;
      return homogeneous;
    });
    if (!homogeneous) return 0;
    ExplicitOracle y(decoded_set(n, t));
    return implication(y, t[0], t[1], t[2]) ? 1 : 0;
  }

  Oracle a_;
  CaptureMode mode_;
  NumberingPtr nb_;
  mutable std::mutex mu_;
  mutable std::map<Key, Color> colors_;
  mutable std::map<Key, FinSet> ysets_;
};

using CaptureFamilyPtr = std::shared_ptr<const CaptureFamily>;

inline CaptureFamilyPtr make_capture_family(Oracle a, CaptureMode mode = CaptureMode::Capture,
                                            NumberingPtr nb = standard_numbering()) {
  return std::make_shared<CaptureFamily>(std::move(a), mode, std::move(nb));
}

inline FiniteColoring c2_coloring(const CaptureFamilyPtr& fam) {
  return FiniteColoring("C2", 3, [fam](Tuple t) { return fam->color(2, t); });
}

inline FiniteColoring cn_coloring(std::size_t n, const CaptureFamilyPtr& fam) {
  if (n < 2) throw std::invalid_argument("cn_coloring requires n >= 2");
  return FiniteColoring("C" + std::to_string(n), n + 1, [fam, n](Tuple t) { return fam->color(n, t); });
}

/// C_omega(a_1..a_k) = C_{a_1}(a_1..a_k); 0 when a_1 < 2.
inline ExactColoring comega_coloring(const CaptureFamilyPtr& fam) {
  return ExactColoring("comega", 2, [fam](Tuple s) -> Color {
    if (s.front() < 2) return 0;
    return fam->color(static_cast<std::size_t>(s.front()), s);
  });
}

}  // namespace exlarge

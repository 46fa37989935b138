#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "exlarge/coloring.hpp"
#include "exlarge/jump.hpp"

namespace exlarge {

/// A finite coloring that reads an oracle: e^X(x_1..x_n).
class OracleColoring {
 public:
  using Fn = std::function<Color(const OracleSet&, Tuple)>;

  OracleColoring(std::string name, std::size_t dimension, Fn fn)
      : name_(std::move(name)), dimension_(dimension), fn_(std::move(fn)) {}

  Color operator()(const OracleSet& x, Tuple t) const {
    if (t.size() != dimension_)
      throw std::invalid_argument(name_ + ": expected " + std::to_string(dimension_) + "-tuple, got " + to_string(t));
    return fn_(x, t);
  }

  /// Freezes the oracle.
  FiniteColoring relative_to(Oracle x) const {
    auto self = *this;
    return FiniteColoring(name_ + "^" + x->describe(), dimension_, [self, x](Tuple t) { return self(*x, t); });
  }

  const std::string& name() const noexcept { return name_; }
  std::size_t dimension() const noexcept { return dimension_; }

 private:
  std::string name_;
  std::size_t dimension_;
  Fn fn_;
};

/// Default pluggable base e_0^X(x, y) = 1 iff X has an element in [x, y).
inline OracleColoring disagreement_base() {
  return OracleColoring("gap", 2, [](const OracleSet& x, Tuple t) -> Color {
    for (Natural j = t[0]; j < t[1]; ++j)
      if (x.contains(j)) return 1;
    return 0;
  });
}

/// Stage-s approximation of the halt-on-0 jump: {j < s : {j}^X_s(0) halts}.
inline FinSet halt0_stage(const OracleSet& x, Natural s, const Numbering& nb = *standard_numbering()) {
  std::vector<Natural> v;
  Program scratch;
  for (Natural j = 0; j < s; ++j)
    if (run_program(nb.program(j, scratch), j, x, 0, s).halted) v.push_back(j);
  return FinSet(std::move(v));
}

/// e_{n+1}^X(x_1..x_{n+2}, s) = e_n evaluated against the stage-s jump approximation of X
/// (0 when s = 0). The last coordinate is the stage.
inline OracleColoring tower_step(const OracleColoring& e, NumberingPtr nb = standard_numbering()) {
  return OracleColoring("step(" + e.name() + ")", e.dimension() + 1, [e, nb](const OracleSet& x, Tuple t) -> Color {
    const Natural s = t.back();
    if (s == 0) return 0;
    ExplicitOracle stage(halt0_stage(x, s, *nb));
    return e(stage, t.first(t.size() - 1));
  });
}

/// The sequence e_0, e_1, ... built lazily from a base coloring.
class ColoringTower {
 public:
  explicit ColoringTower(OracleColoring base, NumberingPtr nb = standard_numbering())
      : nb_(std::move(nb)), levels_{std::move(base)} {}

  OracleColoring level(std::size_t n) const {
    std::lock_guard lock(mu_);
    while (levels_.size() <= n) levels_.push_back(tower_step(levels_.back(), nb_));
    return levels_[n];
  }

  const NumberingPtr& numbering() const noexcept { return nb_; }

 private:
  NumberingPtr nb_;
  mutable std::mutex mu_;
  mutable std::vector<OracleColoring> levels_;
};

/// C(S) = e_{s_1 - 1}^X(s_1, ..., s_card) for min s_1 >= 2; 0 otherwise.
inline ExactColoring diagonal_coloring(std::shared_ptr<const ColoringTower> tower, Oracle x) {
  return ExactColoring("diagonal", 2, [tower, x](Tuple s) -> Color {
    if (s.front() < 2) return 0;
    return tower->level(static_cast<std::size_t>(s.front() - 1))(*x, s);
  });
}

}  // namespace exlarge

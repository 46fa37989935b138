#pragma once

#include <memory>
#include <vector>

#include "exlarge/machine.hpp"

namespace exlarge {

namespace detail {

// Busy loop of roughly 4ab steps using r1 and r2, leaving both at 0.
inline void append_delay(Program& p, std::int64_t a, std::int64_t b) {
  for (std::int64_t i = 0; i < a; ++i) p.push_back(Instr::inc(1));
  p.push_back(Instr::jz(1, b + 6));
  for (std::int64_t i = 0; i < b; ++i) p.push_back(Instr::inc(2));
  p.push_back(Instr::jz(2, 3));
  p.push_back(Instr::dec(2));
  p.push_back(Instr::jz(3, -2));
  p.push_back(Instr::dec(1));
  p.push_back(Instr::jz(3, -(b + 5)));
}

// From input 0: halts iff m is (or, negated, is not) in the oracle.
inline void append_member(Program& p, Natural m, bool negated = false) {
  for (Natural i = 0; i < m; ++i) p.push_back(Instr::inc(0));
  p.push_back(Instr::query(0));
  if (negated) {
    p.push_back(Instr::jz(0, 2));
    p.push_back(Instr::jz(3, 0));
  } else {
    p.push_back(Instr::jz(0, 0));
  }
}

}  // namespace detail

/// Sixteen hand-written programs for experiments with known ground truth. On input 0 every
/// halting program halts in under 10^3 steps and every other one never halts; program i only
/// queries numbers below i. Relative to the empty oracle the halting ones are 1-6, 11 and 15.
inline std::vector<Program> curated_universe() {
  using detail::append_delay;
  using detail::append_member;
  std::vector<Program> u(16);
  u[1] = {Instr::halt()};
  append_delay(u[2], 1, 0);
  append_delay(u[3], 3, 1);
  append_delay(u[4], 5, 2);
  append_delay(u[5], 6, 5);
  append_delay(u[6], 10, 9);
  for (int i = 2; i <= 6; ++i) u[i].push_back(Instr::halt());
  u[7] = {Instr::jz(0, 0)};
  append_member(u[8], 1);
  append_member(u[9], 7);
  append_delay(u[10], 3, 2);
  append_member(u[10], 3);
  append_member(u[11], 7, true);
  append_member(u[12], 4);
  u[12].push_back(Instr::dec(0));
  for (int i = 0; i < 6; ++i) u[12].push_back(Instr::inc(0));
  u[12].push_back(Instr::query(0));
  u[12].push_back(Instr::jz(0, 0));
  append_delay(u[13], 14, 11);
  append_member(u[13], 2);
  append_member(u[14], 0);
  append_delay(u[15], 5, 3);
  append_member(u[15], 9, true);
  for (int i : {8, 9, 10, 11, 12, 13, 14, 15}) u[i].push_back(Instr::halt());
  return u;
}

inline NumberingPtr curated_numbering() {
  static const NumberingPtr nb = std::make_shared<CuratedNumbering>(curated_universe(), "curated16");
  return nb;
}

}  // namespace exlarge

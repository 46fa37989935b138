#pragma once

#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "exlarge/machine.hpp"
#include "exlarge/pairing.hpp"

namespace exlarge {

/// Stage list (u_n, ..., u_1, s): the first entry is the innermost jump's stage.
struct JumpStageSpec {
  std::vector<Natural> stages;

  friend bool operator==(const JumpStageSpec&, const JumpStageSpec&) = default;
};

inline std::string format_stages(const JumpStageSpec& spec) {
  std::string out;
  for (std::size_t i = 0; i < spec.stages.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(spec.stages[i]);
  }
  return out;
}

inline JumpStageSpec parse_stages(const std::string& text) {
  JumpStageSpec spec;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad stage '" + tok + "'");
    }
    if (tok.find('-') != std::string::npos || tok.find_first_not_of(" \t", used) != std::string::npos)
      throw std::invalid_argument("bad stage '" + tok + "'");
    spec.stages.push_back(v);
  }
  if (spec.stages.empty()) throw std::invalid_argument("empty stage list");
  return spec;
}

// ---- pair-code jump:  X'_s = { <m,e> : (exists t < s) m in W^X_{e,t} } ----

/// Membership of one code in X'_s. By monotonicity of bounded runs the existential
/// over t < s reduces to the single bound s - 1.
inline bool jump_pairs_member(const OracleSet& x, Natural code, Natural s, const Numbering& nb = *standard_numbering()) {
  if (s == 0) return false;
  auto [m, e] = unpair(code);
  return run_bounded(e, x, m, s - 1, nb).halted;
}

/// X'_s as an explicit finite set.
inline FinSet jump_pairs_approx(const OracleSet& x, Natural s, const Numbering& nb = *standard_numbering()) {
  std::vector<Natural> codes;
  if (s < 2) return FinSet{};
  const Natural t = s - 1;
  Program scratch;
  for (Natural e = 0; e < t; ++e) {
    const Program& p = nb.program(e, scratch);
    for (Natural m = 0; m < t; ++m)
      if (run_program(p, e, x, m, t).halted) codes.push_back(pair(m, e));
  }
  return FinSet::from_unsorted(std::move(codes));
}

/// X'_s restricted to codes below `bound`.
inline FinSet jump_pairs_below(const OracleSet& x, Natural s, Natural bound, const Numbering& nb = *standard_numbering()) {
  std::vector<Natural> codes;
  if (s < 2) return FinSet{};
  for (Natural c = 0; c < bound; ++c)
    if (jump_pairs_member(x, c, s, nb)) codes.push_back(c);
  return FinSet(std::move(codes));
}

/// X^{(n)} staged along `spec`, innermost stage first.
inline FinSet staged_jump(const OracleSet& x, const JumpStageSpec& spec, const Numbering& nb = *standard_numbering()) {
  if (spec.stages.empty()) throw std::invalid_argument("staged_jump: empty stage list");
  FinSet cur = jump_pairs_approx(x, spec.stages.front(), nb);
  for (std::size_t k = 1; k < spec.stages.size(); ++k) cur = jump_pairs_approx(ExplicitOracle(cur), spec.stages[k], nb);
  return cur;
}

/// staged_jump(x, spec) ∩ [0, bound). Each inner level is only computed below the next
/// stage, which is all the outer run can query.
inline FinSet staged_jump_below(const OracleSet& x, const JumpStageSpec& spec, Natural bound,
                                const Numbering& nb = *standard_numbering()) {
  if (spec.stages.empty()) throw std::invalid_argument("staged_jump_below: empty stage list");
  const auto& st = spec.stages;
  auto need = [&](std::size_t k) { return k + 1 < st.size() ? st[k + 1] : bound; };
  FinSet cur = jump_pairs_below(x, st[0], need(0), nb);
  for (std::size_t k = 1; k < st.size(); ++k) cur = jump_pairs_below(ExplicitOracle(cur), st[k], need(k), nb);
  return cur;
}

/// Lazy X'_s with memoized membership.
class JumpPairsOracle final : public OracleSet {
 public:
  JumpPairsOracle(Oracle base, Natural stage, NumberingPtr nb = standard_numbering())
      : base_(std::move(base)), stage_(stage), nb_(std::move(nb)) {}
  bool contains(Natural code) const override {
    return memo_.get(code, [&] { return jump_pairs_member(*base_, code, stage_, *nb_); });
  }
  std::string describe() const override { return "pairjump(" + base_->describe() + "," + std::to_string(stage_) + ")"; }

 private:
  Oracle base_;
  Natural stage_;
  NumberingPtr nb_;
  MembershipMemo memo_;
};

// ---- halt-on-0 jump:  X' = { e : {e}^X(0) halts }, decided by a step cutoff ----

class Halt0JumpOracle final : public OracleSet {
 public:
  Halt0JumpOracle(Oracle base, Natural cutoff, NumberingPtr nb = standard_numbering())
      : base_(std::move(base)), cutoff_(cutoff), nb_(std::move(nb)) {
    if (cutoff_ == 0) throw std::invalid_argument("jump_halt0: cutoff must be positive");
  }
  bool contains(Natural e) const override {
    return memo_.get(e, [&] { return run_bounded(e, *base_, 0, cutoff_, *nb_).halted; });
  }
  std::string describe() const override { return "halt0jump(" + base_->describe() + "," + std::to_string(cutoff_) + ")"; }

 private:
  Oracle base_;
  Natural cutoff_;
  NumberingPtr nb_;
  MembershipMemo memo_;
};

inline Oracle jump_halt0(Oracle x, Natural cutoff, NumberingPtr nb = standard_numbering()) {
  return std::make_shared<Halt0JumpOracle>(std::move(x), cutoff, std::move(nb));
}

/// n-fold cutoff halt-on-0 jump; the K-tower when x is empty.
inline Oracle halt0_tower(Oracle x, std::size_t n, Natural cutoff, NumberingPtr nb = standard_numbering()) {
  for (std::size_t i = 0; i < n; ++i) x = jump_halt0(std::move(x), cutoff, nb);
  return x;
}

/// n-fold pair-code jump at a fixed stage.
inline Oracle pair_tower(Oracle x, std::size_t n, Natural stage, NumberingPtr nb = standard_numbering()) {
  for (std::size_t i = 0; i < n; ++i) x = std::make_shared<JumpPairsOracle>(std::move(x), stage, nb);
  return x;
}

// ---- many-one reductions between consecutive jumps ----

enum class JumpFlavor { PairJump, Halt0Jump };

/// QUERY 0; JZ 0 0; HALT — on input m halts iff m is in the oracle.
inline Program membership_program() { return {Instr::query(0), Instr::jz(0, 0), Instr::halt()}; }

/// m times INC 0, then membership_program() — on input 0 halts iff m is in the oracle.
inline Program constant_membership_program(Natural m) {
  Program p(static_cast<std::size_t>(m), Instr::inc(0));
  for (const Instr& in : membership_program()) p.push_back(in);
  return p;
}

/// f_{i,j}(m) with m ∈ X^{(i)} iff f_{i,j}(m) ∈ X^{(j)} under the chosen jump flavor.
/// Indices refer to the standard numbering.
inline Natural mone_reduction(Natural i, Natural j, Natural m, JumpFlavor flavor) {
  if (i > j) throw std::invalid_argument("mone_reduction: requires i <= j");
  static const Natural q = encode_program(membership_program());
  for (Natural k = i; k < j; ++k) {
    if (flavor == JumpFlavor::PairJump) {
      m = pair(m, q);
    } else {
      if (m > 64) throw std::overflow_error("mone_reduction: index exceeds 64 bits");
      m = encode_program(constant_membership_program(m));
    }
  }
  return m;
}

}  // namespace exlarge

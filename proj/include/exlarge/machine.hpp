#pragma once

#include <memory>
#include <string>
#include <vector>

#include "exlarge/oracle.hpp"
#include "exlarge/program.hpp"

namespace exlarge {

/// Maps indices to programs. The standard numbering is `decode_program`; curated
/// numberings put hand-picked programs at the smallest indices.
class Numbering {
 public:
  virtual ~Numbering() = default;
  /// Returns the program for `e`, possibly decoding into `scratch`.
  virtual const Program& program(Natural e, Program& scratch) const = 0;
  virtual std::string describe() const = 0;

  Program program(Natural e) const {
    Program scratch;
    return program(e, scratch);
  }
};

using NumberingPtr = std::shared_ptr<const Numbering>;

class StandardNumbering final : public Numbering {
 public:
  static constexpr Natural kTable = Natural{1} << 15;

  StandardNumbering() {
    table_.reserve(kTable);
    for (Natural e = 0; e < kTable; ++e) table_.push_back(decode_program(e));
  }

  const Program& program(Natural e, Program& scratch) const override {
    if (e < kTable) return table_[e];
    scratch = decode_program(e);
    return scratch;
  }
  std::string describe() const override { return "standard"; }

 private:
  std::vector<Program> table_;
};

/// Index i < size() is the i-th curated program; larger indices e run decode_program(e - size()).
class CuratedNumbering final : public Numbering {
 public:
  explicit CuratedNumbering(std::vector<Program> programs, std::string name = "curated")
      : programs_(std::move(programs)), name_(std::move(name)) {}

  const Program& program(Natural e, Program& scratch) const override {
    if (e < programs_.size()) return programs_[e];
    scratch = decode_program(e - programs_.size());
    return scratch;
  }
  std::string describe() const override { return name_; }
  std::size_t size() const noexcept { return programs_.size(); }
  const std::vector<Program>& programs() const noexcept { return programs_; }

 private:
  std::vector<Program> programs_;
  std::string name_;
};

inline const NumberingPtr& standard_numbering() {
  static const NumberingPtr nb = std::make_shared<StandardNumbering>();
  return nb;
}

struct RunOutcome {
  bool halted = false;
  Natural value = 0;
  Natural steps_used = 0;
  Natural max_value_seen = 0;
};

/// Runs `p` on input x with oracle X under bound s. Halting requires fewer than s
/// executed instructions (HALT included) and every register value below s.
/// Leaving the instruction range never halts. `index` is the program's index, which must also be below s.
inline RunOutcome run_program(const Program& p, Natural index, const OracleSet& oracle, Natural x, Natural s) {
  RunOutcome out;
  out.max_value_seen = x;
  if (s == 0 || index >= s || x >= s) return out;
  Natural reg[kRegisters] = {x, 0, 0, 0};
  std::int64_t pc = 0;
  const auto len = static_cast<std::int64_t>(p.size());
  for (;;) {
    if (pc < 0 || pc >= len) return out;
    if (out.steps_used + 1 >= s) return out;
    const Instr& in = p[static_cast<std::size_t>(pc)];
    ++out.steps_used;
    Natural& r = reg[in.reg];
    switch (in.op) {
      case Op::Halt:
        out.halted = true;
        out.value = reg[0];
        return out;
      case Op::Inc:
        if (r + 1 >= s) return out;
        ++r;
        if (r > out.max_value_seen) out.max_value_seen = r;
        ++pc;
        break;
      case Op::Dec:
        if (r > 0) --r;
        ++pc;
        break;
      case Op::Query:
        r = oracle.contains(r) ? 1 : 0;
        if (r > out.max_value_seen) out.max_value_seen = r;
        ++pc;
        break;
      case Op::Jz:
        pc += (r == 0) ? in.offset : 1;
        break;
    }
  }
}

/// {e}^X_s(x): the step- and use-bounded run of program e.
inline RunOutcome run_bounded(Natural e, const OracleSet& oracle, Natural x, Natural s,
                              const Numbering& nb = *standard_numbering()) {
  if (s == 0 || e >= s || x >= s) return RunOutcome{false, 0, 0, x};
  Program scratch;
  return run_program(nb.program(e, scratch), e, oracle, x, s);
}

inline bool halts_within(Natural e, const OracleSet& oracle, Natural x, Natural s,
                         const Numbering& nb = *standard_numbering()) {
  return run_bounded(e, oracle, x, s, nb).halted;
}

/// W^X_{i,s}: the inputs below s on which program i halts under bound s.
inline FinSet domain_stage(Natural i, const OracleSet& oracle, Natural s, const Numbering& nb = *standard_numbering()) {
  std::vector<Natural> v;
  if (i >= s) return FinSet{};
  Program scratch;
  const Program& p = nb.program(i, scratch);
  for (Natural x = 0; x < s; ++x)
    if (run_program(p, i, oracle, x, s).halted) v.push_back(x);
  return FinSet(std::move(v));
}

/// Shoenfield-style stage function: the value of {e}_s with oracle W_{i,s}^X on x, or 0.
inline Natural g_limit(Natural i, Natural e, Natural s, Natural x, const OracleSet& oracle,
                       const Numbering& nb = *standard_numbering()) {
  if (s == 0) return 0;
  ExplicitOracle stage(domain_stage(i, oracle, s, nb));
  RunOutcome r = run_bounded(e, stage, x, s, nb);
  return r.halted ? r.value : 0;
}

}  // namespace exlarge

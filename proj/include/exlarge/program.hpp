#pragma once

#include <bit>
#include <cstdint>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "exlarge/finset.hpp"

namespace exlarge {

inline constexpr std::uint8_t kRegisters = 4;

enum class Op : std::uint8_t { Halt, Inc, Dec, Query, Jz };

/// One counter-machine instruction. `offset` is only meaningful for JZ and is relative to
/// the instruction's own position.
struct Instr {
  Op op = Op::Halt;
  std::uint8_t reg = 0;
  std::int64_t offset = 0;

  friend bool operator==(const Instr&, const Instr&) = default;

  static Instr halt() { return {Op::Halt, 0, 0}; }
  static Instr inc(std::uint8_t r) { return {Op::Inc, r, 0}; }
  static Instr dec(std::uint8_t r) { return {Op::Dec, r, 0}; }
  static Instr query(std::uint8_t r) { return {Op::Query, r, 0}; }
  static Instr jz(std::uint8_t r, std::int64_t off) { return {Op::Jz, r, off}; }
};

using Program = std::vector<Instr>;

// Instruction codes: HALT = 0, INC r = 1+r, DEC r = 5+r, QUERY r = 9+r,
// JZ r k = 13 + 4*zigzag(k) + r. This is a bijection between instructions and naturals.

inline Natural zigzag(std::int64_t v) {
  return v >= 0 ? static_cast<Natural>(v) * 2 : static_cast<Natural>(-(v + 1)) * 2 + 1;
}

inline std::int64_t unzigzag(Natural z) {
  return (z & 1) ? -static_cast<std::int64_t>(z / 2) - 1 : static_cast<std::int64_t>(z / 2);
}

inline Natural encode_instr(const Instr& in) {
  if (in.reg >= kRegisters) throw std::invalid_argument("register out of range");
  switch (in.op) {
    case Op::Halt: return 0;
    case Op::Inc: return 1 + in.reg;
    case Op::Dec: return 5 + in.reg;
    case Op::Query: return 9 + in.reg;
    case Op::Jz: {
      Natural z = zigzag(in.offset);
      if (z > (std::numeric_limits<Natural>::max() - 13 - in.reg) / 4) throw std::overflow_error("jump offset too large");
      return 13 + 4 * z + in.reg;
    }
  }
  throw std::logic_error("unknown opcode");
}

inline Instr decode_instr(Natural c) {
  if (c == 0) return Instr::halt();
  if (c < 5) return Instr::inc(static_cast<std::uint8_t>(c - 1));
  if (c < 9) return Instr::dec(static_cast<std::uint8_t>(c - 5));
  if (c < 13) return Instr::query(static_cast<std::uint8_t>(c - 9));
  c -= 13;
  return Instr::jz(static_cast<std::uint8_t>(c % 4), unzigzag(c / 4));
}

/// Index of a program: the instruction codes c_1..c_k become the set bits
/// p_1 < ... < p_k with p_1 = c_1 and p_i = p_{i-1} + c_i + 1. Bijective onto the naturals;
/// the empty program is 0. Throws std::overflow_error beyond 64 bits.
inline Natural encode_program(const Program& p) {
  Natural e = 0;
  Natural pos = 0;
  bool first = true;
  for (const Instr& in : p) {
    Natural c = encode_instr(in);
    Natural next = first ? c : pos + c + 1;
    if ((!first && next <= pos) || next >= 64) throw std::overflow_error("program index exceeds 64 bits");
    pos = next;
    first = false;
    e |= Natural{1} << pos;
  }
  return e;
}

inline Program decode_program(Natural e) {
  Program p;
  int prev = -1;
  while (e) {
    int bit = std::countr_zero(e);
    p.push_back(decode_instr(static_cast<Natural>(bit - prev - 1)));
    prev = bit;
    e &= e - 1;
  }
  return p;
}

inline std::string format_instr(const Instr& in) {
  switch (in.op) {
    case Op::Halt: return "HALT";
    case Op::Inc: return "INC " + std::to_string(in.reg);
    case Op::Dec: return "DEC " + std::to_string(in.reg);
    case Op::Query: return "QUERY " + std::to_string(in.reg);
    case Op::Jz: return "JZ " + std::to_string(in.reg) + " " + std::to_string(in.offset);
  }
  return "?";
}

inline std::string format_program(const Program& p) {
  std::string out;
  for (const Instr& in : p) out += format_instr(in) + "\n";
  return out;
}

namespace detail {

inline std::string upper(std::string s) {
  for (char& ch : s) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  return s;
}

inline std::string strip_comment(std::string_view line) {
  auto hash = line.find('#');
  std::string s(line.substr(0, hash));
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace detail

inline Instr parse_instr(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::string op;
  in >> op;
  op = detail::upper(op);
  auto reg = [&]() -> std::uint8_t {
    long long r = -1;
    if (!(in >> r) || r < 0 || r >= kRegisters) throw std::invalid_argument("bad register in '" + std::string(line) + "'");
    return static_cast<std::uint8_t>(r);
  };
  Instr result;
  if (op == "HALT") {
    result = Instr::halt();
  } else if (op == "INC") {
    result = Instr::inc(reg());
  } else if (op == "DEC") {
    result = Instr::dec(reg());
  } else if (op == "QUERY") {
    result = Instr::query(reg());
  } else if (op == "JZ") {
    auto r = reg();
    long long off = 0;
    if (!(in >> off)) throw std::invalid_argument("bad jump offset in '" + std::string(line) + "'");
    result = Instr::jz(r, off);
  } else {
    throw std::invalid_argument("unknown instruction '" + std::string(line) + "'");
  }
  std::string rest;
  if (in >> rest) throw std::invalid_argument("trailing tokens in '" + std::string(line) + "'");
  return result;
}

/// One instruction per line; blank lines and `#` comments are ignored.
inline Program parse_program(std::string_view text) {
  Program p;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::string s = detail::strip_comment(line);
    if (!s.empty()) p.push_back(parse_instr(s));
  }
  return p;
}

/// A program universe file: programs in text format separated by lines reading `---`.
/// The i-th program gets index i.
inline std::vector<Program> parse_universe(std::istream& in) {
  std::vector<Program> out;
  Program cur;
  bool any = false;
  std::string line;
  while (std::getline(in, line)) {
    std::string s = detail::strip_comment(line);
    if (s == "---") {
      out.push_back(std::move(cur));
      cur.clear();
      any = false;
      continue;
    }
    if (s.empty()) continue;
    cur.push_back(parse_instr(s));
    any = true;
  }
  if (any || !out.empty()) out.push_back(std::move(cur));
  return out;
}

inline std::string format_universe(const std::vector<Program>& programs) {
  std::string out;
  for (std::size_t i = 0; i < programs.size(); ++i) {
    if (i) out += "---\n";
    out += "# index " + std::to_string(i) + "\n";
    out += format_program(programs[i]);
  }
  return out;
}

}  // namespace exlarge

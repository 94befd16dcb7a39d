#ifndef SLPGRAM_SLP_HPP
#define SLPGRAM_SLP_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "slpgram/symbols.hpp"

namespace slpgram {

// One grammar rule: a terminal symbol or a pairing of two earlier variables.
struct Rule {
  enum class Kind : std::uint8_t { Terminal, Pair };
  Kind kind = Kind::Terminal;
  Sym sym = 0;             // Terminal only
  std::uint32_t left = 0;  // Pair only, 1-based variable indices
  std::uint32_t right = 0;

  static Rule terminal(Sym s) { return Rule{Kind::Terminal, s, 0, 0}; }
  static Rule pair(std::uint32_t l, std::uint32_t r) {
    return Rule{Kind::Pair, 0, l, r};
  }
  bool is_terminal() const { return kind == Kind::Terminal; }
};

// A straight-line program: rules in topological order (every Pair references
// strictly smaller indices) plus a start variable. Immutable by convention
// once built.
struct Slp {
  std::vector<Rule> rules;  // rules[i-1] is variable i
  std::uint32_t root = 0;

  std::uint32_t size() const { return static_cast<std::uint32_t>(rules.size()); }
  const Rule& rule(std::uint32_t i) const { return rules[i - 1]; }
};

// Parses the SLP text format:
//   SLP <n> <root>
//   <i> T <byte>      or      <i> P <l> <r>
// one rule per line in index order, single spaces, LF endings, trailing
// newline required. Throws ParseError with the offending line number.
Slp parse_slp(std::string_view text);

// Canonical text form; parse_slp(serialize_slp(s)) reproduces s.
std::string serialize_slp(const Slp& slp);

// Structural validation (indices, symbol codes, derived-length cap).
// Returns warnings (e.g. unreachable variables); throws Error on violations.
std::vector<std::string> validate_slp(const Slp& slp);

// The same grammar deriving the reversed string: every pairing swapped.
Slp reversed(const Slp& slp);

// Derived length of each variable, checked against kMaxDerivedLength.
std::vector<std::uint64_t> derived_lengths(const Slp& slp);

// Wraps the grammar so the root derives #^(q-1) T $^(q-1). Original
// variables keep their indices.
Slp augment_with_sentinels(const Slp& slp, int q);

// Full expansion of a variable's derived string, iteratively; refuses with
// LimitError when the derived length exceeds `limit`.
SymStr expand_variable(const Slp& slp, std::uint32_t var, std::uint64_t limit);

inline SymStr expand(const Slp& slp, std::uint64_t limit) {
  return expand_variable(slp, slp.root, limit);
}

}  // namespace slpgram

#endif  // SLPGRAM_SLP_HPP

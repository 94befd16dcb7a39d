#ifndef SLPGRAM_SYMBOLS_HPP
#define SLPGRAM_SYMBOLS_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace slpgram {

// A symbol is either an input byte (0..255) or one of two reserved
// sentinel codes sitting above the byte range.
using Sym = std::uint32_t;
using SymStr = std::vector<Sym>;

inline constexpr Sym kSentinelBegin = 0x10000;  // '#'
inline constexpr Sym kSentinelEnd = 0x10001;    // '$'

// Positions and lengths are 1-based 64-bit throughout the library.
// kAbsent marks "no value" in DP tables; 0 is deliberately not used
// for that so an arithmetic bug producing 0 cannot masquerade as absence.
inline constexpr std::uint64_t kAbsent = std::numeric_limits<std::uint64_t>::max();

// Derived lengths are capped below 2^62 so sums and vocc*count products
// cannot wrap in 64 bits.
inline constexpr std::uint64_t kMaxDerivedLength = std::uint64_t{1} << 62;

inline bool is_sentinel(Sym s) { return s == kSentinelBegin || s == kSentinelEnd; }

inline bool is_valid_symbol(Sym s) { return s <= 0xff || is_sentinel(s); }

inline SymStr to_symbols(std::string_view bytes) {
  SymStr out;
  out.reserve(bytes.size());
  for (unsigned char c : bytes) out.push_back(static_cast<Sym>(c));
  return out;
}

inline std::string to_bytes(const SymStr& s) {
  std::string out;
  out.reserve(s.size());
  for (Sym c : s) {
    if (c > 0xff) throw std::runtime_error("symbol string contains non-byte symbols");
    out.push_back(static_cast<char>(static_cast<unsigned char>(c)));
  }
  return out;
}

// Base error type; subtypes let the CLI map failures onto exit codes.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input files; carries a 1-based line number when known.
struct ParseError : Error {
  ParseError(std::size_t line_no, const std::string& msg)
      : Error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
  std::size_t line;
};

// Invalid arguments or preconditions.
struct ArgError : Error {
  using Error::Error;
};

// A resource limit was exceeded; carries the offending size.
struct LimitError : Error {
  LimitError(std::uint64_t actual_size, const std::string& msg)
      : Error(msg), actual(actual_size) {}
  std::uint64_t actual;
};

}  // namespace slpgram

#endif  // SLPGRAM_SYMBOLS_HPP

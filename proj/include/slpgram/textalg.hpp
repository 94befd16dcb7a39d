#ifndef SLPGRAM_TEXTALG_HPP
#define SLPGRAM_TEXTALG_HPP

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "slpgram/symbols.hpp"

namespace slpgram {

// A maximal chain of mutually overlapping occurrences of one q-gram,
// as an inclusive 1-based position pair.
struct Cover {
  std::uint64_t b = 0;
  std::uint64_t e = 0;
  friend bool operator==(const Cover&, const Cover&) = default;
};

// All start positions of `pattern` in `text`, ascending, 1-based.
std::vector<std::uint64_t> kmp_occurrences(std::span<const Sym> text,
                                           std::span<const Sym> pattern);

// Longest overlapping cover of the q-gram text[j:j+q-1] around position j:
// walk the sorted occurrence list left and right from j while consecutive
// occurrences are at most q-1 apart.
Cover loc_plain(std::span<const Sym> text, int q, std::uint64_t j);

// Left-priority / right-priority non-overlapping occurrence sets, ascending.
// Both have cardinality nOcc(text, pattern).
std::vector<std::uint64_t> lnocc_greedy(std::span<const Sym> text,
                                        std::span<const Sym> pattern);
std::vector<std::uint64_t> rnocc_greedy(std::span<const Sym> text,
                                        std::span<const Sym> pattern);

// Suffix array by prefix doubling (1-based suffix starts) and the
// rank-scan LCP array: LCP[0] = 0, LCP[i] = lcp(suffix SA[i-1], suffix SA[i]).
std::vector<std::uint64_t> suffix_array(std::span<const Sym> text);
std::vector<std::uint64_t> lcp_array(std::span<const Sym> text,
                                     std::span<const std::uint64_t> sa);

// Weighted overlapping q-gram frequencies: for every q-gram occurring in
// text, the sum of w[i] over its occurrence starts i. Grams whose weights
// sum to zero are still reported.
std::map<SymStr, std::uint64_t> weighted_qgram_freqs(std::span<const Sym> text, int q,
                                                     std::span<const std::uint64_t> w);

}  // namespace slpgram

#endif  // SLPGRAM_TEXTALG_HPP

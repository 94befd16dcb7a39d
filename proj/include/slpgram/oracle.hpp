#ifndef SLPGRAM_ORACLE_HPP
#define SLPGRAM_ORACLE_HPP

#include <cstdint>
#include <map>
#include <span>

#include "slpgram/slp.hpp"
#include "slpgram/symbols.hpp"

namespace slpgram {

// Ground truth by full decompression: expands the grammar and counts each
// distinct q-gram's non-overlapping frequency with a single left-to-right
// greedy pass. Intentionally unoptimized.
std::map<SymStr, std::uint64_t> oracle_count(const Slp& slp, int q,
                                             std::uint64_t limit = 1000000);

// Maximum number of pairwise non-overlapping occurrences, certified by an
// interval DP over the occurrence list rather than any greedy rule.
// Refuses occurrence lists longer than 20.
std::uint64_t exhaustive_nocc(std::span<const Sym> text, std::span<const Sym> pattern);

}  // namespace slpgram

#endif  // SLPGRAM_ORACLE_HPP

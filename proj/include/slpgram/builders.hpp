#ifndef SLPGRAM_BUILDERS_HPP
#define SLPGRAM_BUILDERS_HPP

#include <span>

#include "slpgram/slp.hpp"

namespace slpgram {

// Recursive halving with hash-consing of identical subtrees. Deterministic;
// repetitive inputs share structure aggressively.
Slp build_balanced(std::span<const unsigned char> input);

// Iterative most-frequent-adjacent-pair replacement (frequency = number of
// live adjacencies, ties broken by the smaller (left, right) symbol pair;
// stops when the maximum frequency drops below 2), then balanced assembly
// of the residual sequence.
Slp build_pairs(std::span<const unsigned char> input);

inline Slp build_slp(std::span<const unsigned char> input, const std::string& method) {
  if (method == "balanced") return build_balanced(input);
  if (method == "pairs") return build_pairs(input);
  throw ArgError("unknown build method '" + method + "'");
}

}  // namespace slpgram

#endif  // SLPGRAM_BUILDERS_HPP

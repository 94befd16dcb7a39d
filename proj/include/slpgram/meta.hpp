#ifndef SLPGRAM_META_HPP
#define SLPGRAM_META_HPP

#include <cstdint>
#include <vector>

#include "slpgram/slp.hpp"
#include "slpgram/symbols.hpp"

namespace slpgram {

// Per-variable derived metadata: lengths, derivation-tree occurrence counts,
// and the boundary context strings pre/suf of width kappa = 3(q-1) (floored
// at 1 so q = 1 still yields usable contexts). Index 0 is unused.
struct Meta {
  int q = 0;
  std::uint64_t kappa = 0;
  std::vector<std::uint64_t> len;
  std::vector<std::uint64_t> vocc;
  std::vector<SymStr> pre;
  std::vector<SymStr> suf;

  std::uint64_t footprint_entries() const;
};

Meta compute_meta(const Slp& slp, int q);

// The materialized boundary context of a Pair variable: the last `width`
// symbols of the left child followed by the first `width` of the right
// child. boundary_offset is the number of window symbols drawn from the
// left child, so global position p in X_i maps to window position
// boundary_offset - len(left) + p.
struct BoundaryWindow {
  SymStr window;
  std::uint64_t boundary_offset = 0;
};

BoundaryWindow boundary_window(const Slp& slp, const Meta& meta, std::uint32_t i,
                               std::uint64_t width);

}  // namespace slpgram

#endif  // SLPGRAM_META_HPP

#ifndef SLPGRAM_OCCDP_HPP
#define SLPGRAM_OCCDP_HPP

#include <cstdint>

#include "slpgram/covers.hpp"

namespace slpgram {

// Largest / second largest starts of the left-priority non-overlapping set
// within each right cover, as absolute positions in val(X_i).
struct LnOccColumns {
  FlatCol max1, max2;  // width 2(q-1)
};

// Smallest / second smallest starts of the right-priority set within each
// left cover.
struct RnOccColumns {
  FlatCol min1, min2;  // width 2(q-1)
};

// Extremal occurrence positions per (variable, boundary offset).
struct ExtremalTable {
  FlatCol max1l, max2l;        // LnOcc within right covers, width 2(q-1)
  FlatCol min1r, min2r;        // RnOcc within left covers, width 2(q-1)
  FlatCol maxl_in_lloc;        // largest LnOcc start within left covers, width q-1
  FlatCol minr_in_rloc;        // smallest RnOcc start within right covers, width q-1
};

// Non-overlapping occurrence counts within the covers.
struct CoverCountTable {
  FlatCol nocc_right;  // nOcc(X_i[j:be], p_j) over right covers
  FlatCol nocc_left;   // nOcc over left covers
};

struct DpTables {
  CoverTables covers;
  ExtremalTable extremal;
  CoverCountTable counts;

  std::uint64_t footprint_entries() const {
    return covers.right.entries() + covers.left.entries() + extremal.max1l.entries() +
           extremal.max2l.entries() + extremal.min1r.entries() + extremal.min2r.entries() +
           extremal.maxl_in_lloc.entries() + extremal.minr_in_rloc.entries() +
           counts.nocc_right.entries() + counts.nocc_left.entries();
  }
};

LnOccColumns build_extremal_lnocc(const Slp& slp, const Meta& meta,
                                  const RightCoverTable& covers, int q);
RnOccColumns build_extremal_rnocc(const Slp& slp, const Meta& meta,
                                  const LeftCoverTable& covers, int q);

FlatCol build_nocc_right(const Slp& slp, const Meta& meta, const RightCoverTable& covers,
                         int q);
FlatCol build_nocc_left(const Slp& slp, const Meta& meta, const LeftCoverTable& covers,
                        int q);

FlatCol build_max_lnocc_in_left_cover(const Slp& slp, const Meta& meta,
                                      const CoverTables& covers,
                                      const LnOccColumns& extremal, int q);
FlatCol build_min_rnocc_in_right_cover(const Slp& slp, const Meta& meta,
                                       const CoverTables& covers,
                                       const RnOccColumns& extremal, int q);

// Everything the pipeline needs for one grammar, built bottom-up in one
// sweep per direction.
DpTables build_dp_tables(const Slp& slp, const Meta& meta, int q);

// nOcc(X_i[b:e], s_j) where (b, e) = crossing_cover(i, j), combining the
// per-child count tables with a KMP pass over the O(q) seam gap.
std::uint64_t nocc_in_crossing_cover(const Slp& slp, const Meta& meta,
                                     const DpTables& tables, std::uint32_t i,
                                     std::uint64_t j);

namespace detail {

struct RightFacing {
  FlatCol max1, max2, nocc;
};

RightFacing build_right_facing(const Slp& slp, const Meta& meta,
                               const RightCoverTable& rloc, int q);

FlatCol build_maxl_in_lloc(const Slp& slp, const Meta& meta, const LeftCoverTable& lloc,
                           const RightFacing& rf, int q);

}  // namespace detail

}  // namespace slpgram

#endif  // SLPGRAM_OCCDP_HPP

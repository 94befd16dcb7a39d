#ifndef SLPGRAM_COVERS_HPP
#define SLPGRAM_COVERS_HPP

#include <cassert>
#include <cstdint>
#include <optional>
#include <vector>

#include "slpgram/meta.hpp"
#include "slpgram/slp.hpp"
#include "slpgram/textalg.hpp"

namespace slpgram {

// Dense (variable x boundary-offset) column of 64-bit values, kAbsent where
// no value applies.
struct FlatCol {
  std::uint64_t width = 0;
  std::vector<std::uint64_t> v;

  FlatCol() = default;
  FlatCol(std::uint32_t n, std::uint64_t w) : width(w), v(std::size_t(n) * w, kAbsent) {}

  std::uint64_t get(std::uint32_t i, std::uint64_t j) const {
    assert(j >= 1 && j <= width);
    return v[std::size_t(i - 1) * width + (j - 1)];
  }
  void set(std::uint32_t i, std::uint64_t j, std::uint64_t val) {
    assert(j >= 1 && j <= width);
    v[std::size_t(i - 1) * width + (j - 1)] = val;
  }
  std::uint64_t entries() const { return v.size(); }
};

// Right-extended covers: entry (i, j) is the chain of the q-gram starting at
// position j of val(X_i), extended rightwards only, for 1 <= j <= 2(q-1).
// When the gram overruns the variable the cover clamps to (j, len).
class RightCoverTable {
 public:
  RightCoverTable() = default;
  RightCoverTable(std::uint32_t n, int q, std::vector<std::uint64_t> lens)
      : q_(q), end_(n, 2 * (std::uint64_t(q) - 1)), len_(std::move(lens)) {}

  std::optional<Cover> cover(std::uint32_t i, std::uint64_t j) const {
    if (j < 1 || j > end_.width) return std::nullopt;
    std::uint64_t e = end_.get(i, j);
    if (e == kAbsent) return std::nullopt;
    return Cover{j, e};
  }
  int q() const { return q_; }
  std::uint64_t width() const { return end_.width; }
  std::uint64_t len(std::uint32_t i) const { return len_[i]; }

  FlatCol& ends() { return end_; }
  const FlatCol& ends() const { return end_; }
  std::uint64_t entries() const { return end_.entries(); }

 private:
  int q_ = 0;
  FlatCol end_;
  std::vector<std::uint64_t> len_;
};

// Left-extended covers: entry (i, j) is the chain of the q-gram ending at
// position len - j + 1 of val(X_i), extended leftwards only.
class LeftCoverTable {
 public:
  LeftCoverTable() = default;
  LeftCoverTable(std::uint32_t n, int q, std::vector<std::uint64_t> lens)
      : q_(q), begin_(n, 2 * (std::uint64_t(q) - 1)), len_(std::move(lens)) {}

  std::optional<Cover> cover(std::uint32_t i, std::uint64_t j) const {
    if (j < 1 || j > begin_.width) return std::nullopt;
    std::uint64_t b = begin_.get(i, j);
    if (b == kAbsent) return std::nullopt;
    return Cover{b, len_[i] - j + 1};
  }
  int q() const { return q_; }
  std::uint64_t width() const { return begin_.width; }
  std::uint64_t len(std::uint32_t i) const { return len_[i]; }

  FlatCol& begins() { return begin_; }
  const FlatCol& begins() const { return begin_; }
  std::uint64_t entries() const { return begin_.entries(); }

 private:
  int q_ = 0;
  FlatCol begin_;
  std::vector<std::uint64_t> len_;
};

struct CoverTables {
  RightCoverTable right;
  LeftCoverTable left;
};

RightCoverTable build_right_covers(const Slp& slp, const Meta& meta, int q);
LeftCoverTable build_left_covers(const Slp& slp, const Meta& meta, int q);

// Both directions at once, reusing a caller-provided reversed grammar.
CoverTables build_cover_tables(const Slp& slp, const Meta& meta, const Slp& rev,
                               const Meta& revmeta, int q);

// Full two-sided cover of the q-gram at position j of a Pair variable,
// spliced from the local boundary chain and the child cover tables. j must
// lie in the boundary enumeration window
//   max(1, len_l - 2(q-1) + 1) <= j <= min(len_l + q - 1, len_i - q + 1).
Cover crossing_cover(const Slp& slp, const Meta& meta, const CoverTables& tables,
                     std::uint32_t i, std::uint64_t j);

namespace detail {

// Shared result of the crossing-cover case analysis; the occurrence-count
// query reuses the anchors instead of re-deriving them.
struct CrossingAnalysis {
  enum class Kind { InsideLeft, InsideRight, Crossing };
  Kind kind = Kind::Crossing;
  Cover cover;
  Cover local;                           // chain within the boundary window
  std::uint64_t left_anchor = kAbsent;   // lloc offset into the left child
  std::uint64_t right_anchor = kAbsent;  // rloc offset into the right child
};

CrossingAnalysis analyze_crossing(const Slp& slp, const Meta& meta,
                                  const CoverTables& tables, std::uint32_t i,
                                  std::uint64_t j);

// Right-cover DP over one grammar orientation.
RightCoverTable build_rloc(const Slp& slp, const Meta& meta, int q);

// Absolute-position occurrence scan of `pattern` inside the kappa boundary
// window of Pair variable i.
std::vector<std::uint64_t> window_occurrences(const Slp& slp, const Meta& meta,
                                              std::uint32_t i,
                                              std::span<const Sym> pattern);

}  // namespace detail

}  // namespace slpgram

#endif  // SLPGRAM_COVERS_HPP

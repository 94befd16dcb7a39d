#include "slpgram/occdp.hpp"

#include <algorithm>

namespace slpgram {

namespace detail {

namespace {

std::uint64_t min_in(const std::vector<std::uint64_t>& occ, std::uint64_t lo,
                     std::uint64_t hi) {
  auto it = std::lower_bound(occ.begin(), occ.end(), lo);
  if (it == occ.end() || *it > hi) return kAbsent;
  return *it;
}

std::uint64_t max_in(const std::vector<std::uint64_t>& occ, std::uint64_t lo,
                     std::uint64_t hi) {
  auto it = std::upper_bound(occ.begin(), occ.end(), hi);
  if (it == occ.begin() || *(it - 1) < lo) return kAbsent;
  return *(it - 1);
}

std::uint64_t shifted(std::uint64_t pos, std::uint64_t offset) {
  return pos == kAbsent ? kAbsent : pos + offset;
}

}  // namespace

RightFacing build_right_facing(const Slp& slp, const Meta& meta,
                               const RightCoverTable& rloc, int q) {
  if (q < 2) throw ArgError("occurrence DP requires q >= 2");
  const std::uint64_t uq = static_cast<std::uint64_t>(q);
  const std::uint64_t w2 = 2 * (uq - 1);
  const std::uint32_t n = slp.size();
  RightFacing rf{FlatCol(n, w2), FlatCol(n, w2), FlatCol(n, w2)};

  for (std::uint32_t i = 1; i <= n; ++i) {
    const std::uint64_t len = meta.len[i];
    const Rule& rule = slp.rule(i);
    for (std::uint64_t j = 1; j <= w2 && j <= len; ++j) {
      if (j + uq - 1 > len) {
        rf.nocc.set(i, j, 0);  // clamped cover holds no full gram
        continue;
      }
      const std::uint64_t len_l = meta.len[rule.left];
      if (j > len_l) {
        const std::uint64_t k = j - len_l;
        rf.max1.set(i, j, shifted(rf.max1.get(rule.right, k), len_l));
        rf.max2.set(i, j, shifted(rf.max2.get(rule.right, k), len_l));
        rf.nocc.set(i, j, rf.nocc.get(rule.right, k));
        continue;
      }
      const std::uint64_t mstar = rf.max1.get(rule.left, j);
      const std::uint64_t m2star = rf.max2.get(rule.left, j);
      const std::uint64_t cl = rf.nocc.get(rule.left, j);
      const std::uint64_t be = rloc.cover(i, j)->e;

      SymStr gram(meta.pre[i].begin() + static_cast<std::ptrdiff_t>(j - 1),
                  meta.pre[i].begin() + static_cast<std::ptrdiff_t>(j - 1 + uq));
      auto occ = window_occurrences(slp, meta, i, gram);
      const std::uint64_t hi = be - uq + 1;
      const std::uint64_t t0 = mstar != kAbsent ? mstar + uq : j;

      // Next left-greedy element after the left child's part. No occurrence
      // fully inside the left child can sit here, so it crosses the
      // boundary or lies inside the right child.
      const std::uint64_t x = min_in(occ, t0, hi);
      if (x == kAbsent) {
        rf.max1.set(i, j, mstar);
        rf.max2.set(i, j, m2star);
        rf.nocc.set(i, j, cl);
        continue;
      }
      assert(x + uq - 1 > len_l);
      if (x <= len_l) {
        // x is the single crossing greedy element.
        const std::uint64_t y = min_in(occ, x + uq, hi);
        if (y == kAbsent) {
          rf.max1.set(i, j, x);
          rf.max2.set(i, j, mstar);
          rf.nocc.set(i, j, cl + 1);
        } else {
          const std::uint64_t k = y - len_l;
          assert(k >= 1 && k <= w2);
          const std::uint64_t tail1 = rf.max1.get(rule.right, k);
          const std::uint64_t tail2 = rf.max2.get(rule.right, k);
          assert(tail1 != kAbsent);
          rf.max1.set(i, j, len_l + tail1);
          rf.max2.set(i, j, tail2 != kAbsent ? len_l + tail2 : x);
          rf.nocc.set(i, j, cl + 1 + rf.nocc.get(rule.right, k));
        }
      } else {
        const std::uint64_t k = x - len_l;
        assert(k >= 1 && k <= w2);
        const std::uint64_t tail1 = rf.max1.get(rule.right, k);
        const std::uint64_t tail2 = rf.max2.get(rule.right, k);
        assert(tail1 != kAbsent);
        rf.max1.set(i, j, len_l + tail1);
        rf.max2.set(i, j, tail2 != kAbsent ? len_l + tail2 : mstar);
        rf.nocc.set(i, j, cl + rf.nocc.get(rule.right, k));
      }
    }
  }
  return rf;
}

FlatCol build_maxl_in_lloc(const Slp& slp, const Meta& meta, const LeftCoverTable& lloc,
                           const RightFacing& rf, int q) {
  const std::uint64_t uq = static_cast<std::uint64_t>(q);
  const std::uint64_t w1 = uq - 1;
  [[maybe_unused]] const std::uint64_t w2 = 2 * (uq - 1);
  const std::uint32_t n = slp.size();
  FlatCol col(n, w1);

  for (std::uint32_t i = 1; i <= n; ++i) {
    const std::uint64_t len = meta.len[i];
    const Rule& rule = slp.rule(i);
    for (std::uint64_t j = 1; j <= w1 && j <= len; ++j) {
      const std::uint64_t ee = len - j + 1;
      if (ee < uq) continue;  // gram overruns the variable; absent
      const std::uint64_t len_l = meta.len[rule.left];
      const std::uint64_t len_r = meta.len[rule.right];
      if (ee <= len_l) {
        const std::uint64_t v = col.get(rule.left, j - len_r);
        assert(v != kAbsent);
        col.set(i, j, v);
        continue;
      }
      const std::uint64_t eb = lloc.cover(i, j)->b;
      if (eb > len_l) {
        const std::uint64_t v = col.get(rule.right, j);
        assert(v != kAbsent);
        col.set(i, j, len_l + v);
        continue;
      }

      // Cover straddles the boundary. Work outwards from the last greedy
      // element inside the left child.
      const SymStr& suf = meta.suf[i];
      const std::uint64_t suf_start = len - suf.size() + 1;
      assert(ee - uq + 1 >= suf_start);
      SymStr gram(suf.begin() + static_cast<std::ptrdiff_t>(ee - uq + 1 - suf_start),
                  suf.begin() + static_cast<std::ptrdiff_t>(ee + 1 - suf_start));
      auto occ = window_occurrences(slp, meta, i, gram);
      const std::uint64_t cover_hi = ee - uq + 1;

      std::uint64_t m = kAbsent;
      if (eb + uq - 1 <= len_l) {
        const std::uint64_t s_a =
            max_in(occ, eb, std::min(cover_hi, len_l - uq + 1));
        assert(s_a != kAbsent);
        const std::uint64_t j_l = len_l - (s_a + uq - 1) + 1;
        assert(j_l >= 1 && j_l <= w1);
        m = col.get(rule.left, j_l);
        assert(m != kAbsent);
      }
      const std::uint64_t t = m != kAbsent ? m + uq : eb;
      std::uint64_t d = min_in(occ, t, cover_hi);
      if (d == kAbsent) {
        assert(m != kAbsent);
        col.set(i, j, m);
        continue;
      }
      std::uint64_t g = d;
      if (d <= len_l) {
        g = min_in(occ, d + uq, cover_hi);
        if (g == kAbsent) {
          col.set(i, j, d);
          continue;
        }
      }
      assert(g > len_l);
      const std::uint64_t k = g - len_l;
      assert(k >= 1 && k <= w2);
      // The right child's chain from k runs past the cover's anchored end;
      // at most one greedy element can overshoot it.
      const std::uint64_t h = rf.max1.get(rule.right, k);
      assert(h != kAbsent);
      if (len_l + h <= cover_hi) {
        col.set(i, j, len_l + h);
      } else {
        const std::uint64_t h2 = rf.max2.get(rule.right, k);
        assert(h2 != kAbsent && len_l + h2 <= cover_hi);
        col.set(i, j, len_l + h2);
      }
    }
  }
  return col;
}

}  // namespace detail

namespace {

// Position maps between a grammar and its reversal: a length-q occurrence
// starting at s maps to len - s - q + 2.
std::uint64_t mirror_pos(std::uint64_t len, std::uint64_t pos, int q) {
  return pos == kAbsent ? kAbsent : len - pos - static_cast<std::uint64_t>(q) + 2;
}

FlatCol mirror_col(const FlatCol& src, const Meta& meta, int q) {
  FlatCol out(static_cast<std::uint32_t>(meta.len.size() - 1), src.width);
  for (std::uint32_t i = 1; i < meta.len.size(); ++i)
    for (std::uint64_t j = 1; j <= src.width; ++j)
      out.set(i, j, mirror_pos(meta.len[i], src.get(i, j), q));
  return out;
}

RightCoverTable right_covers_of_reverse(const LeftCoverTable& left, const Meta& meta,
                                        int q) {
  const std::uint32_t n = static_cast<std::uint32_t>(meta.len.size() - 1);
  RightCoverTable rev(n, q, meta.len);
  for (std::uint32_t i = 1; i <= n; ++i)
    for (std::uint64_t j = 1; j <= left.width(); ++j) {
      auto c = left.cover(i, j);
      if (c) rev.ends().set(i, j, meta.len[i] - c->b + 1);
    }
  return rev;
}

LeftCoverTable left_covers_of_reverse(const RightCoverTable& right, const Meta& meta,
                                      int q) {
  const std::uint32_t n = static_cast<std::uint32_t>(meta.len.size() - 1);
  LeftCoverTable rev(n, q, meta.len);
  for (std::uint32_t i = 1; i <= n; ++i)
    for (std::uint64_t j = 1; j <= right.width(); ++j) {
      auto c = right.cover(i, j);
      if (c) rev.begins().set(i, j, meta.len[i] - c->e + 1);
    }
  return rev;
}

}  // namespace

LnOccColumns build_extremal_lnocc(const Slp& slp, const Meta& meta,
                                  const RightCoverTable& covers, int q) {
  auto rf = detail::build_right_facing(slp, meta, covers, q);
  return LnOccColumns{std::move(rf.max1), std::move(rf.max2)};
}

RnOccColumns build_extremal_rnocc(const Slp& slp, const Meta& meta,
                                  const LeftCoverTable& covers, int q) {
  Slp rev = reversed(slp);
  Meta revmeta = compute_meta(rev, meta.q);
  auto rev_rloc = right_covers_of_reverse(covers, meta, q);
  auto rf = detail::build_right_facing(rev, revmeta, rev_rloc, q);
  return RnOccColumns{mirror_col(rf.max1, meta, q), mirror_col(rf.max2, meta, q)};
}

FlatCol build_nocc_right(const Slp& slp, const Meta& meta, const RightCoverTable& covers,
                         int q) {
  return detail::build_right_facing(slp, meta, covers, q).nocc;
}

FlatCol build_nocc_left(const Slp& slp, const Meta& meta, const LeftCoverTable& covers,
                        int q) {
  Slp rev = reversed(slp);
  Meta revmeta = compute_meta(rev, meta.q);
  auto rev_rloc = right_covers_of_reverse(covers, meta, q);
  return detail::build_right_facing(rev, revmeta, rev_rloc, q).nocc;
}

FlatCol build_max_lnocc_in_left_cover(const Slp& slp, const Meta& meta,
                                      const CoverTables& covers,
                                      const LnOccColumns& extremal, int q) {
  detail::RightFacing rf{extremal.max1, extremal.max2, FlatCol()};
  return detail::build_maxl_in_lloc(slp, meta, covers.left, rf, q);
}

FlatCol build_min_rnocc_in_right_cover(const Slp& slp, const Meta& meta,
                                       const CoverTables& covers,
                                       const RnOccColumns& extremal, int q) {
  Slp rev = reversed(slp);
  Meta revmeta = compute_meta(rev, meta.q);
  detail::RightFacing rev_rf{mirror_col(extremal.min1, meta, q),
                             mirror_col(extremal.min2, meta, q), FlatCol()};
  auto rev_lloc = left_covers_of_reverse(covers.right, meta, q);
  auto col = detail::build_maxl_in_lloc(rev, revmeta, rev_lloc, rev_rf, q);
  FlatCol out(slp.size(), col.width);
  for (std::uint32_t i = 1; i <= slp.size(); ++i)
    for (std::uint64_t j = 1; j <= col.width; ++j)
      out.set(i, j, mirror_pos(meta.len[i], col.get(i, j), q));
  return out;
}

DpTables build_dp_tables(const Slp& slp, const Meta& meta, int q) {
  Slp rev = reversed(slp);
  Meta revmeta = compute_meta(rev, meta.q);

  DpTables t;
  t.covers = build_cover_tables(slp, meta, rev, revmeta, q);
  auto rev_rloc = right_covers_of_reverse(t.covers.left, meta, q);

  auto rf_fwd = detail::build_right_facing(slp, meta, t.covers.right, q);
  auto rf_rev = detail::build_right_facing(rev, revmeta, rev_rloc, q);

  t.extremal.maxl_in_lloc =
      detail::build_maxl_in_lloc(slp, meta, t.covers.left, rf_fwd, q);
  auto rev_lloc = left_covers_of_reverse(t.covers.right, meta, q);
  auto rev_l9 = detail::build_maxl_in_lloc(rev, revmeta, rev_lloc, rf_rev, q);
  t.extremal.minr_in_rloc = mirror_col(rev_l9, meta, q);

  t.extremal.min1r = mirror_col(rf_rev.max1, meta, q);
  t.extremal.min2r = mirror_col(rf_rev.max2, meta, q);
  t.extremal.max1l = std::move(rf_fwd.max1);
  t.extremal.max2l = std::move(rf_fwd.max2);
  t.counts.nocc_right = std::move(rf_fwd.nocc);
  t.counts.nocc_left = std::move(rf_rev.nocc);
  return t;
}

std::uint64_t nocc_in_crossing_cover(const Slp& slp, const Meta& meta,
                                     const DpTables& tables, std::uint32_t i,
                                     std::uint64_t j) {
  const int q = tables.covers.right.q();
  const std::uint64_t uq = static_cast<std::uint64_t>(q);
  auto an = detail::analyze_crossing(slp, meta, tables.covers, i, j);
  const Rule& rule = slp.rule(i);

  switch (an.kind) {
    case detail::CrossingAnalysis::Kind::InsideLeft:
      return tables.counts.nocc_left.get(rule.left, an.left_anchor);
    case detail::CrossingAnalysis::Kind::InsideRight:
      return tables.counts.nocc_right.get(rule.right, an.right_anchor);
    case detail::CrossingAnalysis::Kind::Crossing:
      break;
  }

  const std::uint64_t len_l = meta.len[rule.left];
  const Cover cover = an.cover;
  std::uint64_t count_left = 0, count_right = 0;
  std::uint64_t u1 = cover.b - 1;       // end of the left part's greedy tail
  std::uint64_t u2 = cover.e + 1;       // start of the right part's greedy head
  if (an.left_anchor != kAbsent) {
    assert(an.left_anchor <= tables.extremal.maxl_in_lloc.width);
    count_left = tables.counts.nocc_left.get(rule.left, an.left_anchor);
    const std::uint64_t m = tables.extremal.maxl_in_lloc.get(rule.left, an.left_anchor);
    assert(m != kAbsent);
    u1 = m + uq - 1;
  }
  if (an.right_anchor != kAbsent) {
    assert(an.right_anchor <= tables.extremal.minr_in_rloc.width);
    count_right = tables.counts.nocc_right.get(rule.right, an.right_anchor);
    const std::uint64_t r = tables.extremal.minr_in_rloc.get(rule.right, an.right_anchor);
    assert(r != kAbsent);
    u2 = len_l + r;
  }

  // Count the seam gap [u1+1, u2-1] directly; it always fits inside the
  // materialized boundary window.
  std::uint64_t middle = 0;
  if (u1 + 1 + uq - 1 <= u2 - 1) {
    BoundaryWindow bw = boundary_window(slp, meta, i, meta.kappa);
    const std::uint64_t shift = len_l - bw.boundary_offset;
    const std::uint64_t lo = u1 + 1, hi = u2 - 1;
    if (lo < shift + 1 || hi > shift + bw.window.size())
      throw Error("internal: seam gap escapes the boundary window");
    SymStr gram(bw.window.begin() + static_cast<std::ptrdiff_t>(j - shift - 1),
                bw.window.begin() + static_cast<std::ptrdiff_t>(j - shift - 1 + uq));
    auto slice = std::span<const Sym>(bw.window)
                     .subspan(lo - shift - 1, hi - lo + 1);
    middle = lnocc_greedy(slice, gram).size();
  }
  return count_left + middle + count_right;
}

}  // namespace slpgram

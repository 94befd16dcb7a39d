#include "slpgram/covers.hpp"

#include <algorithm>

namespace slpgram {

namespace detail {

std::vector<std::uint64_t> window_occurrences(const Slp& slp, const Meta& meta,
                                              std::uint32_t i,
                                              std::span<const Sym> pattern) {
  BoundaryWindow bw = boundary_window(slp, meta, i, meta.kappa);
  auto occ = kmp_occurrences(bw.window, pattern);
  const Rule& r = slp.rule(i);
  // Window position 1 sits at absolute position len_l - boundary_offset + 1.
  std::uint64_t shift = meta.len[r.left] - bw.boundary_offset;
  for (auto& p : occ) p += shift;
  return occ;
}

namespace {

// Smallest occurrence in [lo, hi], or kAbsent. `occ` ascending.
std::uint64_t min_in(const std::vector<std::uint64_t>& occ, std::uint64_t lo,
                     std::uint64_t hi) {
  auto it = std::lower_bound(occ.begin(), occ.end(), lo);
  if (it == occ.end() || *it > hi) return kAbsent;
  return *it;
}

// Largest occurrence in [lo, hi], or kAbsent.
std::uint64_t max_in(const std::vector<std::uint64_t>& occ, std::uint64_t lo,
                     std::uint64_t hi) {
  auto it = std::upper_bound(occ.begin(), occ.end(), hi);
  if (it == occ.begin() || *(it - 1) < lo) return kAbsent;
  return *(it - 1);
}

}  // namespace

RightCoverTable build_rloc(const Slp& slp, const Meta& meta, int q) {
  if (q < 2) throw ArgError("cover tables require q >= 2");
  const std::uint64_t uq = static_cast<std::uint64_t>(q);
  const std::uint64_t w2 = 2 * (uq - 1);
  const std::uint32_t n = slp.size();
  RightCoverTable table(n, q, meta.len);
  FlatCol& end = table.ends();

  for (std::uint32_t i = 1; i <= n; ++i) {
    const std::uint64_t len = meta.len[i];
    const Rule& rule = slp.rule(i);
    const bool is_pair = !rule.is_terminal();
    const std::uint64_t len_l = is_pair ? meta.len[rule.left] : 0;

    for (std::uint64_t j = 1; j <= w2; ++j) {
      if (j > len) break;  // absent
      if (j + uq - 1 > len) {
        end.set(i, j, len);  // gram overruns the variable
        continue;
      }
      // Terminals have len 1 < q, handled above.
      if (j > len_l) {
        end.set(i, j, len_l + end.get(rule.right, j - len_l));
        continue;
      }
      const std::uint64_t be_l = end.get(rule.left, j);

      // All occurrences crossing the child boundary mutually overlap, so
      // those at positions >= j form one local chain.
      SymStr gram(meta.pre[i].begin() + static_cast<std::ptrdiff_t>(j - 1),
                  meta.pre[i].begin() + static_cast<std::ptrdiff_t>(j - 1 + uq));
      auto occ = window_occurrences(slp, meta, i, gram);
      std::uint64_t cross_lo = std::max<std::uint64_t>(j, len_l >= uq - 2 ? len_l - uq + 2 : 1);
      std::uint64_t b_i = min_in(occ, cross_lo, len_l);
      if (b_i == kAbsent || be_l < b_i) {
        end.set(i, j, be_l);
        continue;
      }
      std::uint64_t e_i = max_in(occ, cross_lo, len_l) + uq - 1;
      // First occurrence fully inside the right child, within table reach.
      std::uint64_t k_abs = min_in(occ, len_l + 1, len_l + w2);
      if (k_abs == kAbsent || e_i < k_abs) {
        end.set(i, j, e_i);
        continue;
      }
      end.set(i, j, len_l + end.get(rule.right, k_abs - len_l));
    }
  }
  return table;
}

CrossingAnalysis analyze_crossing(const Slp& slp, const Meta& meta,
                                  const CoverTables& tables, std::uint32_t i,
                                  std::uint64_t j) {
  const int q = tables.right.q();
  const std::uint64_t uq = static_cast<std::uint64_t>(q);
  const std::uint64_t w2 = 2 * (uq - 1);
  const Rule& rule = slp.rule(i);
  if (rule.is_terminal()) throw ArgError("crossing_cover: terminal variable");
  const std::uint64_t len = meta.len[i];
  const std::uint64_t len_l = meta.len[rule.left];
  const std::uint64_t j_lo = len_l + 1 > w2 ? len_l + 1 - w2 : 1;
  const std::uint64_t j_hi = std::min(len_l + uq - 1, len - uq + 1);
  if (j < j_lo || j > j_hi) throw ArgError("crossing_cover: j outside the boundary window");

  BoundaryWindow bw = boundary_window(slp, meta, i, meta.kappa);
  const std::uint64_t shift = len_l - bw.boundary_offset;  // abs = win + shift
  SymStr gram(bw.window.begin() + static_cast<std::ptrdiff_t>(j - shift - 1),
              bw.window.begin() + static_cast<std::ptrdiff_t>(j - shift - 1 + uq));

  // Chain of the gram within the two-sided local window [wl, wr].
  const std::uint64_t wl = j_lo;
  const std::uint64_t wr = std::min(len, len_l + w2);
  const std::uint64_t win_from = wl - shift, win_to = wr - shift;
  auto local_occ = kmp_occurrences(
      std::span<const Sym>(bw.window).subspan(win_from - 1, win_to - win_from + 1), gram);
  for (auto& p : local_occ) p += wl - 1;  // absolute

  auto it = std::lower_bound(local_occ.begin(), local_occ.end(), j);
  if (it == local_occ.end() || *it != j)
    throw Error("internal: anchor gram missing from its own boundary window");
  std::size_t lo = static_cast<std::size_t>(it - local_occ.begin()), hi = lo;
  while (lo > 0 && local_occ[lo] - local_occ[lo - 1] <= uq - 1) --lo;
  while (hi + 1 < local_occ.size() && local_occ[hi + 1] - local_occ[hi] <= uq - 1) ++hi;
  const std::uint64_t b_i = local_occ[lo];
  const std::uint64_t e_i = local_occ[hi] + uq - 1;

  CrossingAnalysis out;
  out.local = Cover{b_i, e_i};

  if (e_i <= len_l) {
    // Entirely within the left child: left-extend from the chain's end.
    out.kind = CrossingAnalysis::Kind::InsideLeft;
    out.left_anchor = len_l - e_i + 1;
    auto c = tables.left.cover(rule.left, out.left_anchor);
    assert(c.has_value());
    out.cover = *c;
    return out;
  }
  if (b_i > len_l) {
    // Entirely within the right child: right-extend from the chain's start.
    out.kind = CrossingAnalysis::Kind::InsideRight;
    out.right_anchor = b_i - len_l;
    auto c = tables.right.cover(rule.right, out.right_anchor);
    assert(c.has_value());
    out.cover = Cover{b_i, len_l + c->e};
    return out;
  }

  out.kind = CrossingAnalysis::Kind::Crossing;
  std::uint64_t b = b_i, e = e_i;
  // Last occurrence fully inside the left child that belongs to the chain.
  if (len_l >= uq) {
    std::uint64_t s_a = max_in(local_occ, b_i, std::min(e_i - uq + 1, len_l - uq + 1));
    if (s_a != kAbsent) {
      out.left_anchor = len_l - (s_a + uq - 1) + 1;
      auto c = tables.left.cover(rule.left, out.left_anchor);
      assert(c.has_value());
      b = c->b;
    }
  }
  // First occurrence fully inside the right child that belongs to the chain.
  std::uint64_t f = min_in(local_occ, len_l + 1, e_i - uq + 1);
  if (f != kAbsent) {
    out.right_anchor = f - len_l;
    auto c = tables.right.cover(rule.right, out.right_anchor);
    assert(c.has_value());
    e = len_l + c->e;
  }
  out.cover = Cover{b, e};
  return out;
}

}  // namespace detail

RightCoverTable build_right_covers(const Slp& slp, const Meta& meta, int q) {
  return detail::build_rloc(slp, meta, q);
}

namespace {

LeftCoverTable map_left_from_reverse(const RightCoverTable& revloc, const Meta& meta,
                                     int q) {
  const std::uint32_t n = static_cast<std::uint32_t>(meta.len.size() - 1);
  LeftCoverTable left(n, q, meta.len);
  for (std::uint32_t i = 1; i <= n; ++i) {
    for (std::uint64_t j = 1; j <= left.width(); ++j) {
      auto c = revloc.cover(i, j);
      if (c) left.begins().set(i, j, meta.len[i] - c->e + 1);
    }
  }
  return left;
}

}  // namespace

LeftCoverTable build_left_covers(const Slp& slp, const Meta& meta, int q) {
  Slp rev = reversed(slp);
  Meta revmeta = compute_meta(rev, meta.q);
  return map_left_from_reverse(detail::build_rloc(rev, revmeta, q), meta, q);
}

CoverTables build_cover_tables(const Slp& slp, const Meta& meta, const Slp& rev,
                               const Meta& revmeta, int q) {
  CoverTables t;
  t.right = detail::build_rloc(slp, meta, q);
  t.left = map_left_from_reverse(detail::build_rloc(rev, revmeta, q), meta, q);
  return t;
}

Cover crossing_cover(const Slp& slp, const Meta& meta, const CoverTables& tables,
                     std::uint32_t i, std::uint64_t j) {
  return detail::analyze_crossing(slp, meta, tables, i, j).cover;
}

}  // namespace slpgram

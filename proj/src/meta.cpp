#include "slpgram/meta.hpp"

#include <algorithm>

namespace slpgram {

std::uint64_t Meta::footprint_entries() const {
  std::uint64_t total = len.size() + vocc.size();
  for (const auto& s : pre) total += s.size();
  for (const auto& s : suf) total += s.size();
  return total;
}

Meta compute_meta(const Slp& slp, int q) {
  if (q < 1) throw ArgError("compute_meta: q must be positive");
  Meta m;
  m.q = q;
  m.kappa = std::max<std::uint64_t>(3 * (static_cast<std::uint64_t>(q) - 1), 1);
  m.len = derived_lengths(slp);

  const std::uint32_t n = slp.size();
  m.vocc.assign(n + 1, 0);
  m.vocc[slp.root] = 1;
  for (std::uint32_t i = n; i >= 1; --i) {
    const Rule& r = slp.rule(i);
    if (r.is_terminal()) continue;
    // A rule X_i = X_j X_j contributes twice: once per side used.
    m.vocc[r.left] += m.vocc[i];
    m.vocc[r.right] += m.vocc[i];
  }

  m.pre.assign(n + 1, {});
  m.suf.assign(n + 1, {});
  for (std::uint32_t i = 1; i <= n; ++i) {
    const Rule& r = slp.rule(i);
    if (r.is_terminal()) {
      m.pre[i] = {r.sym};
      m.suf[i] = {r.sym};
      continue;
    }
    const SymStr& pl = m.pre[r.left];
    const SymStr& pr = m.pre[r.right];
    SymStr& p = m.pre[i];
    p = pl;
    for (std::size_t k = 0; p.size() < m.kappa && k < pr.size(); ++k) p.push_back(pr[k]);
    if (p.size() > m.kappa) p.resize(m.kappa);

    const SymStr& sl = m.suf[r.left];
    const SymStr& sr = m.suf[r.right];
    SymStr& s = m.suf[i];
    if (sr.size() >= m.kappa) {
      s = sr;
    } else {
      std::uint64_t take = std::min<std::uint64_t>(m.kappa - sr.size(), sl.size());
      s.assign(sl.end() - static_cast<std::ptrdiff_t>(take), sl.end());
      s.insert(s.end(), sr.begin(), sr.end());
    }
  }
  return m;
}

BoundaryWindow boundary_window(const Slp& slp, const Meta& meta, std::uint32_t i,
                               std::uint64_t width) {
  if (i < 1 || i > slp.size()) throw ArgError("boundary_window: variable out of range");
  const Rule& r = slp.rule(i);
  if (r.is_terminal()) throw ArgError("boundary_window: terminal rule has no boundary");
  if (width > meta.kappa) throw ArgError("boundary_window: width exceeds kappa");

  const SymStr& sl = meta.suf[r.left];
  const SymStr& pr = meta.pre[r.right];
  std::uint64_t take_l = std::min<std::uint64_t>(width, meta.len[r.left]);
  std::uint64_t take_r = std::min<std::uint64_t>(width, meta.len[r.right]);
  BoundaryWindow bw;
  bw.boundary_offset = take_l;
  bw.window.assign(sl.end() - static_cast<std::ptrdiff_t>(take_l), sl.end());
  bw.window.insert(bw.window.end(), pr.begin(), pr.begin() + static_cast<std::ptrdiff_t>(take_r));
  return bw;
}

}  // namespace slpgram

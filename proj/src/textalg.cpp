#include "slpgram/textalg.hpp"

#include <algorithm>
#include <numeric>

namespace slpgram {

std::vector<std::uint64_t> kmp_occurrences(std::span<const Sym> text,
                                           std::span<const Sym> pattern) {
  if (pattern.empty()) throw ArgError("kmp_occurrences: empty pattern");
  std::vector<std::uint64_t> occ;
  const std::size_t n = text.size();
  const std::size_t m = pattern.size();
  if (m > n) return occ;

  // Failure function: fail[i] = length of the longest proper border of
  // pattern[0..i].
  std::vector<std::size_t> fail(m, 0);
  for (std::size_t i = 1, k = 0; i < m; ++i) {
    while (k > 0 && pattern[i] != pattern[k]) k = fail[k - 1];
    if (pattern[i] == pattern[k]) ++k;
    fail[i] = k;
  }

  for (std::size_t i = 0, k = 0; i < n; ++i) {
    while (k > 0 && text[i] != pattern[k]) k = fail[k - 1];
    if (text[i] == pattern[k]) ++k;
    if (k == m) {
      occ.push_back(i + 2 - m);  // 1-based start
      k = fail[k - 1];
    }
  }
  return occ;
}

Cover loc_plain(std::span<const Sym> text, int q, std::uint64_t j) {
  if (q < 1) throw ArgError("loc_plain: q must be positive");
  const auto uq = static_cast<std::uint64_t>(q);
  if (j < 1 || j + uq - 1 > text.size()) throw ArgError("loc_plain: j out of range");

  auto pattern = text.subspan(j - 1, uq);
  auto occ = kmp_occurrences(text, pattern);
  // j is itself an occurrence of text[j:j+q-1].
  auto it = std::lower_bound(occ.begin(), occ.end(), j);
  std::size_t pos = static_cast<std::size_t>(it - occ.begin());
  std::size_t lo = pos, hi = pos;
  while (lo > 0 && occ[lo] - occ[lo - 1] <= uq - 1) --lo;
  while (hi + 1 < occ.size() && occ[hi + 1] - occ[hi] <= uq - 1) ++hi;
  return Cover{occ[lo], occ[hi] + uq - 1};
}

std::vector<std::uint64_t> lnocc_greedy(std::span<const Sym> text,
                                        std::span<const Sym> pattern) {
  if (pattern.empty()) throw ArgError("lnocc_greedy: empty pattern");
  auto occ = kmp_occurrences(text, pattern);
  std::vector<std::uint64_t> out;
  const std::uint64_t m = pattern.size();
  std::uint64_t next_free = 1;
  for (std::uint64_t p : occ) {
    if (p >= next_free) {
      out.push_back(p);
      next_free = p + m;
    }
  }
  return out;
}

std::vector<std::uint64_t> rnocc_greedy(std::span<const Sym> text,
                                        std::span<const Sym> pattern) {
  if (pattern.empty()) throw ArgError("rnocc_greedy: empty pattern");
  auto occ = kmp_occurrences(text, pattern);
  std::vector<std::uint64_t> out;
  const std::uint64_t m = pattern.size();
  // Scan the occurrence list from the right; an occurrence is kept when it
  // ends before the previously kept one starts.
  std::uint64_t last_start = kAbsent;
  for (auto it = occ.rbegin(); it != occ.rend(); ++it) {
    if (last_start == kAbsent || *it + m - 1 < last_start) {
      out.push_back(*it);
      last_start = *it;
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> suffix_array(std::span<const Sym> text) {
  if (text.empty()) throw ArgError("suffix_array: empty text");
  const std::size_t n = text.size();
  std::vector<std::int64_t> rank(n), tmp(n);
  std::vector<std::uint64_t> sa(n);
  std::iota(sa.begin(), sa.end(), 0);
  for (std::size_t i = 0; i < n; ++i) rank[i] = static_cast<std::int64_t>(text[i]);

  for (std::size_t k = 1;; k *= 2) {
    auto key = [&](std::uint64_t i) {
      std::int64_t second = (i + k < n) ? rank[i + k] : -1;
      return std::pair<std::int64_t, std::int64_t>(rank[i], second);
    };
    std::sort(sa.begin(), sa.end(),
              [&](std::uint64_t a, std::uint64_t b) { return key(a) < key(b); });
    tmp[sa[0]] = 0;
    for (std::size_t i = 1; i < n; ++i)
      tmp[sa[i]] = tmp[sa[i - 1]] + (key(sa[i - 1]) < key(sa[i]) ? 1 : 0);
    rank = tmp;
    if (rank[sa[n - 1]] == static_cast<std::int64_t>(n - 1)) break;
  }
  for (auto& v : sa) ++v;  // 1-based
  return sa;
}

std::vector<std::uint64_t> lcp_array(std::span<const Sym> text,
                                     std::span<const std::uint64_t> sa) {
  if (text.empty() || sa.size() != text.size())
    throw ArgError("lcp_array: suffix array does not match text");
  const std::size_t n = text.size();
  std::vector<std::size_t> inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[sa[i] - 1] = i;
  std::vector<std::uint64_t> lcp(n, 0);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (inv[i] == 0) {
      h = 0;
      continue;
    }
    std::size_t j = sa[inv[i] - 1] - 1;
    while (i + h < n && j + h < n && text[i + h] == text[j + h]) ++h;
    lcp[inv[i]] = h;
    if (h > 0) --h;
  }
  return lcp;
}

std::map<SymStr, std::uint64_t> weighted_qgram_freqs(std::span<const Sym> text, int q,
                                                     std::span<const std::uint64_t> w) {
  if (q < 1) throw ArgError("weighted_qgram_freqs: q must be positive");
  if (w.size() != text.size())
    throw ArgError("weighted_qgram_freqs: weight array length mismatch");
  std::map<SymStr, std::uint64_t> out;
  const std::uint64_t uq = static_cast<std::uint64_t>(q);
  if (text.size() < uq) return out;

  auto sa = suffix_array(text);
  auto lcp = lcp_array(text, sa);
  const std::uint64_t last_start = text.size() - uq + 1;

  // Runs of suffixes sharing a length-q prefix are consecutive in the
  // suffix array, delimited by LCP values below q.
  std::uint64_t sum = 0;
  std::uint64_t head = kAbsent;  // a valid gram start in the current run
  auto flush = [&]() {
    if (head != kAbsent) {
      SymStr gram(text.begin() + static_cast<std::ptrdiff_t>(head - 1),
                  text.begin() + static_cast<std::ptrdiff_t>(head - 1 + uq));
      out[std::move(gram)] += sum;
    }
    sum = 0;
    head = kAbsent;
  };
  for (std::size_t i = 0; i < sa.size(); ++i) {
    if (i > 0 && lcp[i] < uq) flush();
    if (sa[i] <= last_start) {
      if (head == kAbsent) head = sa[i];
      sum += w[sa[i] - 1];
    }
  }
  flush();
  return out;
}

}  // namespace slpgram

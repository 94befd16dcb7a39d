#include <doctest.h>

#include <algorithm>
#include <random>

#include "slpgram/oracle.hpp"
#include "slpgram/textalg.hpp"
#include "testutil.hpp"

using namespace slpgram;

namespace {

SymStr S(const char* s) { return to_symbols(s); }

std::vector<std::uint64_t> naive_occurrences(const SymStr& text, const SymStr& pat) {
  std::vector<std::uint64_t> occ;
  if (pat.empty() || pat.size() > text.size()) return occ;
  for (std::size_t i = 0; i + pat.size() <= text.size(); ++i)
    if (std::equal(pat.begin(), pat.end(), text.begin() + static_cast<std::ptrdiff_t>(i)))
      occ.push_back(i + 1);
  return occ;
}

// All strings over {a, b} of the given length, lexicographic.
void enumerate_ab(std::size_t length, const std::function<void(const SymStr&)>& fn) {
  SymStr s(length, 'a');
  while (true) {
    fn(s);
    std::size_t i = length;
    while (i > 0 && s[i - 1] == 'b') s[--i] = 'a';
    if (i == 0) break;
    s[i - 1] = 'b';
  }
}

}  // namespace

TEST_CASE("kmp_occurrences on known strings") {
  CHECK(kmp_occurrences(S("aababaababaab"), S("ab")) ==
        std::vector<std::uint64_t>{2, 4, 7, 9, 12});
  CHECK(kmp_occurrences(S("aaaa"), S("aa")) == std::vector<std::uint64_t>{1, 2, 3});
  CHECK(kmp_occurrences(S("abc"), S("zz")).empty());
  CHECK_THROWS_AS(kmp_occurrences(S("abc"), S("")), ArgError);
}

TEST_CASE("kmp_occurrences equals the naive scan, exhaustively and randomized") {
  std::vector<SymStr> patterns;
  for (std::size_t len = 1; len <= 4; ++len)
    enumerate_ab(len, [&](const SymStr& p) { patterns.push_back(p); });

  for (std::size_t len = 1; len <= 12; ++len) {
    enumerate_ab(len, [&](const SymStr& text) {
      for (const auto& p : patterns)
        REQUIRE(kmp_occurrences(text, p) == naive_occurrences(text, p));
    });
  }

  std::mt19937_64 rng(20240817);
  for (int it = 0; it < 500; ++it) {
    auto text = testutil::random_text(rng, 1 + rng() % 64, 3);
    auto pat = testutil::random_text(rng, 1 + rng() % 8, 3);
    REQUIRE(kmp_occurrences(text, pat) == naive_occurrences(text, pat));
  }
}

TEST_CASE("loc_plain matches hand-checked covers") {
  // Chain of "aabaa" occurrences at 2, 5, 9, 12; position 17 is detached.
  CHECK(loc_plain(S("aaabaabaaabaabaaaabaa"), 5, 9) == Cover{2, 16});
  CHECK(loc_plain(S("abcde"), 3, 2) == Cover{2, 4});
  CHECK(loc_plain(S("aaaa"), 2, 2) == Cover{1, 4});
  CHECK_THROWS_AS(loc_plain(S("abc"), 2, 3), ArgError);
}

TEST_CASE("loc_plain output satisfies the cover conditions") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 400; ++it) {
    auto text = testutil::random_text(rng, 4 + rng() % 40, 2);
    int q = 2 + static_cast<int>(rng() % 4);
    if (text.size() < static_cast<std::size_t>(q)) continue;
    std::uint64_t j = 1 + rng() % (text.size() - q + 1);
    auto [b, e] = loc_plain(text, q, j);
    SymStr pat(text.begin() + static_cast<std::ptrdiff_t>(j - 1),
               text.begin() + static_cast<std::ptrdiff_t>(j - 1 + q));
    auto occ = naive_occurrences(text, pat);
    auto is_occ = [&](std::uint64_t p) {
      return std::binary_search(occ.begin(), occ.end(), p);
    };
    REQUIRE(is_occ(b));
    REQUIRE(is_occ(e - q + 1));
    REQUIRE(b <= j);
    REQUIRE(j + q - 1 <= e);
    // Chain condition: every occurrence before the last has an overlapping
    // successor inside the cover.
    for (std::uint64_t k : occ) {
      if (k < b || k + q > e) continue;
      bool chained = false;
      for (std::uint64_t k2 : occ)
        if (k2 > k && k2 <= std::min(k + q - 1, e - q + 1)) chained = true;
      REQUIRE(chained);
    }
    // Maximality: adjacent occurrences outside the cover do not overlap it.
    for (std::uint64_t k : occ) {
      if (k < b) REQUIRE(b - k > static_cast<std::uint64_t>(q) - 1);
      if (k + q - 1 > e) REQUIRE(k - (e - q + 1) > static_cast<std::uint64_t>(q) - 1);
    }
  }
}

TEST_CASE("greedy non-overlapping sets on known strings") {
  CHECK(lnocc_greedy(S("aaaa"), S("aa")) == std::vector<std::uint64_t>{1, 3});
  CHECK(rnocc_greedy(S("aaaa"), S("aa")) == std::vector<std::uint64_t>{1, 3});
  CHECK(lnocc_greedy(S("aababaababaab"), S("aba")) == std::vector<std::uint64_t>{2, 7});
  CHECK(lnocc_greedy(S("abc"), S("d")).empty());
  CHECK(rnocc_greedy(S("abc"), S("d")).empty());
}

TEST_CASE("greedy counts are maximal and left/right sizes agree") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 600; ++it) {
    auto text = testutil::random_text(rng, 1 + rng() % 24, 2);
    auto pat = testutil::random_text(rng, 1 + rng() % 4, 2);
    auto l = lnocc_greedy(text, pat);
    auto r = rnocc_greedy(text, pat);
    REQUIRE(l.size() == r.size());
    if (kmp_occurrences(text, pat).size() <= 12)
      REQUIRE(l.size() == exhaustive_nocc(text, pat));
    // Pairwise non-overlap.
    for (std::size_t k = 1; k < l.size(); ++k)
      REQUIRE(l[k - 1] + pat.size() <= l[k]);
    for (std::size_t k = 1; k < r.size(); ++k)
      REQUIRE(r[k - 1] + pat.size() <= r[k]);
  }
}

TEST_CASE("three-part split of the greedy count holds around any pivot") {
  std::mt19937_64 rng(13);
  int exercised = 0;
  for (int it = 0; it < 800; ++it) {
    auto text = testutil::random_text(rng, 4 + rng() % 30, 2);
    auto pat = testutil::random_text(rng, 1 + rng() % 3, 2);
    std::uint64_t i = 1 + rng() % text.size();
    auto prefix = std::span<const Sym>(text).subspan(0, i - 1);
    auto suffix = std::span<const Sym>(text).subspan(i - 1);
    auto lset = lnocc_greedy(prefix, pat);
    auto rset = rnocc_greedy(suffix, pat);
    if (lset.empty() || rset.empty()) continue;
    ++exercised;
    std::uint64_t u1 = lset.back() + pat.size() - 1;
    std::uint64_t u2 = i - 1 + rset.front();
    std::uint64_t total = lnocc_greedy(text, pat).size();
    std::uint64_t left = lnocc_greedy(std::span<const Sym>(text).subspan(0, u1), pat).size();
    std::uint64_t middle =
        u1 + 1 <= u2 - 1
            ? lnocc_greedy(std::span<const Sym>(text).subspan(u1, u2 - 1 - u1), pat).size()
            : 0;
    std::uint64_t right =
        rnocc_greedy(std::span<const Sym>(text).subspan(u2 - 1), pat).size();
    REQUIRE(total == left + middle + right);
  }
  REQUIRE(exercised > 100);
}

TEST_CASE("suffix and lcp arrays on known strings") {
  CHECK(suffix_array(S("banana")) == std::vector<std::uint64_t>{6, 4, 2, 1, 5, 3});
  auto sa = suffix_array(S("banana"));
  CHECK(lcp_array(S("banana"), sa) == std::vector<std::uint64_t>{0, 1, 3, 0, 0, 2});
  CHECK(suffix_array(S("a")) == std::vector<std::uint64_t>{1});
  CHECK(lcp_array(S("a"), suffix_array(S("a"))) == std::vector<std::uint64_t>{0});
  CHECK_THROWS_AS(suffix_array(SymStr{}), ArgError);
}

TEST_CASE("suffix array equals brute-force suffix sorting") {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 300; ++it) {
    auto text = testutil::random_text(rng, 1 + rng() % 50, 3);
    std::vector<std::uint64_t> expect(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) expect[i] = i + 1;
    std::sort(expect.begin(), expect.end(), [&](std::uint64_t a, std::uint64_t b) {
      return std::lexicographical_compare(
          text.begin() + static_cast<std::ptrdiff_t>(a - 1), text.end(),
          text.begin() + static_cast<std::ptrdiff_t>(b - 1), text.end());
    });
    auto sa = suffix_array(text);
    REQUIRE(sa == expect);
    auto lcp = lcp_array(text, sa);
    for (std::size_t i = 1; i < sa.size(); ++i) {
      std::size_t a = sa[i - 1] - 1, b = sa[i] - 1, h = 0;
      while (a + h < text.size() && b + h < text.size() && text[a + h] == text[b + h]) ++h;
      REQUIRE(lcp[i] == h);
    }
  }
}

TEST_CASE("weighted_qgram_freqs on known strings") {
  {
    std::vector<std::uint64_t> w{5, 7, 1, 0};
    auto f = weighted_qgram_freqs(S("abab"), 2, w);
    REQUIRE(f.size() == 2);
    CHECK(f.at(S("ab")) == 6);
    CHECK(f.at(S("ba")) == 7);
  }
  {
    SymStr text = S("aababaababaab");
    std::vector<std::uint64_t> w(text.size(), 1);
    auto f = weighted_qgram_freqs(text, 2, w);
    REQUIRE(f.size() == 3);
    CHECK(f.at(S("aa")) == 3);
    CHECK(f.at(S("ab")) == 5);
    CHECK(f.at(S("ba")) == 4);
  }
  {
    SymStr text = S("abcab");
    std::vector<std::uint64_t> w(text.size(), 0);
    auto f = weighted_qgram_freqs(text, 2, w);
    REQUIRE(f.size() == 3);  // every occurring gram present, all zero
    for (const auto& [gram, sum] : f) CHECK(sum == 0);
  }
  CHECK_THROWS_AS(weighted_qgram_freqs(S("ab"), 0, std::vector<std::uint64_t>{1, 1}), ArgError);
  CHECK_THROWS_AS(weighted_qgram_freqs(S("ab"), 2, std::vector<std::uint64_t>{1}), ArgError);
}

TEST_CASE("weighted_qgram_freqs equals a direct position scan") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 200; ++it) {
    auto text = testutil::random_text(rng, 1 + rng() % 80, 3);
    int q = 1 + static_cast<int>(rng() % 6);
    std::vector<std::uint64_t> w(text.size());
    for (auto& x : w) x = rng() % 100;
    auto f = weighted_qgram_freqs(text, q, w);

    std::map<SymStr, std::uint64_t> direct;
    std::uint64_t valid_sum = 0;
    for (std::size_t p = 0; p + q <= text.size(); ++p) {
      SymStr gram(text.begin() + static_cast<std::ptrdiff_t>(p),
                  text.begin() + static_cast<std::ptrdiff_t>(p + q));
      direct[gram] += w[p];
      valid_sum += w[p];
    }
    REQUIRE(f == direct);
    std::uint64_t total = 0;
    for (const auto& [gram, sum] : f) total += sum;
    REQUIRE(total == valid_sum);
  }
}

#ifndef SLPGRAM_TESTUTIL_HPP
#define SLPGRAM_TESTUTIL_HPP

#include <random>
#include <string>

#include "slpgram/meta.hpp"
#include "slpgram/slp.hpp"
#include "slpgram/symbols.hpp"

namespace slpgram::testutil {

// Fig-style 7-rule grammar deriving "aababaababaab".
inline Slp example_grammar() {
  Slp slp;
  slp.rules = {Rule::terminal('a'), Rule::terminal('b'), Rule::pair(1, 2),
               Rule::pair(1, 3),    Rule::pair(3, 4),    Rule::pair(4, 5),
               Rule::pair(6, 5)};
  slp.root = 7;
  return slp;
}

// Unary power grammar: 2^k copies of `c` via repeated doubling.
inline Slp unary_pow2(int k, Sym c = 'a') {
  Slp slp;
  slp.rules.push_back(Rule::terminal(c));
  for (int t = 0; t < k; ++t)
    slp.rules.push_back(Rule::pair(slp.size(), slp.size()));
  slp.root = slp.size();
  return slp;
}

// Fibonacci-rule grammar with n rules; derives the Fibonacci word of
// length fib(n).
inline Slp fibonacci_slp(int n) {
  Slp slp;
  slp.rules.push_back(Rule::terminal('b'));
  if (n >= 2) slp.rules.push_back(Rule::terminal('a'));
  for (int i = 3; i <= n; ++i)
    slp.rules.push_back(Rule::pair(slp.size(), slp.size() - 1));
  slp.root = slp.size();
  return slp;
}

struct RandomSlpParams {
  std::uint32_t max_rules = 60;
  int alphabet = 4;
  std::uint64_t max_len = 10000;        // cap on the root's derived length
  std::uint64_t max_var_len = kAbsent;  // optional cap on every variable
};

// Random topologically ordered grammar; pair children biased towards recent
// variables so derived strings grow, duplicate-child rules included.
inline Slp random_slp(std::mt19937_64& rng, const RandomSlpParams& p = {}) {
  Slp slp;
  std::vector<std::uint64_t> len;
  len.push_back(0);  // index 0 unused
  int terminals = std::uniform_int_distribution<int>(1, p.alphabet)(rng);
  for (int t = 0; t < terminals; ++t) {
    slp.rules.push_back(Rule::terminal(static_cast<Sym>('a' + t)));
    len.push_back(1);
  }
  std::uint32_t rules = std::uniform_int_distribution<std::uint32_t>(
      std::max<std::uint32_t>(slp.size(), p.max_rules / 2), p.max_rules)(rng);
  std::uint64_t var_cap = std::min(p.max_var_len, p.max_len);
  while (slp.size() < rules) {
    std::uint32_t n = slp.size();
    auto pick = [&] {
      // Half the time take the newest rule so lengths keep growing, else a
      // recency-biased draw.
      if (rng() & 1) return n;
      std::uint32_t back = std::uniform_int_distribution<std::uint32_t>(0, n - 1)(rng);
      back = std::min(back, std::uniform_int_distribution<std::uint32_t>(0, n - 1)(rng));
      return n - back;
    };
    std::uint32_t l = pick(), r = pick();
    if (len[l] + len[r] > var_cap) {
      // Re-draw uniformly so mid-size variables keep appearing once the
      // cap starts binding; terminals as a last resort.
      bool placed = false;
      for (int tries = 0; tries < 16 && !placed; ++tries) {
        l = std::uniform_int_distribution<std::uint32_t>(1, n)(rng);
        r = std::uniform_int_distribution<std::uint32_t>(1, n)(rng);
        placed = len[l] + len[r] <= var_cap;
      }
      if (!placed) {
        l = std::uniform_int_distribution<std::uint32_t>(1, terminals)(rng);
        r = std::uniform_int_distribution<std::uint32_t>(1, terminals)(rng);
        if (len[l] + len[r] > var_cap) break;
      }
    }
    slp.rules.push_back(Rule::pair(l, r));
    len.push_back(len[l] + len[r]);
  }
  slp.root = 1;
  for (std::uint32_t i = 1; i <= slp.size(); ++i)
    if (len[i] >= len[slp.root]) slp.root = i;
  return slp;
}

inline SymStr random_text(std::mt19937_64& rng, std::size_t size, int alphabet) {
  SymStr s(size);
  std::uniform_int_distribution<int> d(0, alphabet - 1);
  for (auto& c : s) c = static_cast<Sym>('a' + d(rng));
  return s;
}

inline SymStr periodic_text(std::size_t size, std::size_t period, int alphabet = 3) {
  SymStr s(size);
  for (std::size_t i = 0; i < size; ++i)
    s[i] = static_cast<Sym>('a' + (i % period) % static_cast<std::size_t>(alphabet));
  return s;
}

inline SymStr fibonacci_word(std::size_t max_len) {
  SymStr a = {'a'}, b = {'b'};  // S_2, S_1
  while (true) {
    SymStr next = a;
    next.insert(next.end(), b.begin(), b.end());
    if (next.size() > max_len) return a;
    b = std::move(a);
    a = std::move(next);
  }
}

}  // namespace slpgram::testutil

#endif  // SLPGRAM_TESTUTIL_HPP

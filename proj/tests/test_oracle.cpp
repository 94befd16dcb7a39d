#include <doctest.h>

#include <random>

#include "slpgram/builders.hpp"
#include "slpgram/oracle.hpp"
#include "slpgram/textalg.hpp"
#include "testutil.hpp"

using namespace slpgram;

namespace {
SymStr S(const char* s) { return to_symbols(s); }
}

TEST_CASE("oracle_count on known grammars") {
  auto fig = testutil::example_grammar();
  auto f2 = oracle_count(fig, 2);
  REQUIRE(f2.size() == 3);
  CHECK(f2.at(S("aa")) == 3);
  CHECK(f2.at(S("ab")) == 5);
  CHECK(f2.at(S("ba")) == 4);

  // a^10 via an explicit chain.
  Slp unary;
  unary.rules.push_back(Rule::terminal('a'));
  for (int i = 0; i < 9; ++i) unary.rules.push_back(Rule::pair(unary.size(), 1));
  unary.root = unary.size();
  auto f3 = oracle_count(unary, 3);
  REQUIRE(f3.size() == 1);
  CHECK(f3.at(S("aaa")) == 3);

  CHECK(oracle_count(fig, 14).empty());
}

TEST_CASE("oracle_count refuses over-limit expansions") {
  auto big = testutil::unary_pow2(40);  // derives a^(2^40)
  CHECK_THROWS_AS(oracle_count(big, 2, 1000000), LimitError);
  try {
    oracle_count(big, 2, 1000000);
  } catch (const LimitError& e) {
    CHECK(e.actual == (std::uint64_t{1} << 40));
  }
}

TEST_CASE("exhaustive_nocc on known strings") {
  CHECK(exhaustive_nocc(S("aaaa"), S("aa")) == 2);
  CHECK(exhaustive_nocc(S("aaabaabaaabaabaaaabaa"), S("aabaa")) == 3);
  CHECK(exhaustive_nocc(S("abc"), S("zz")) == 0);
}

TEST_CASE("greedy agrees with the exhaustive verifier on all short binary inputs") {
  // Smaller sweep here; the acceptance suite runs the full length-12 sweep.
  for (std::size_t tl = 1; tl <= 9; ++tl) {
    SymStr text(tl, 'a');
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << tl); ++mask) {
      for (std::size_t i = 0; i < tl; ++i) text[i] = (mask >> i) & 1 ? 'b' : 'a';
      for (std::size_t pl = 1; pl <= 3; ++pl) {
        SymStr pat(pl, 'a');
        for (std::uint64_t pm = 0; pm < (std::uint64_t{1} << pl); ++pm) {
          for (std::size_t i = 0; i < pl; ++i) pat[i] = (pm >> i) & 1 ? 'b' : 'a';
          REQUIRE(lnocc_greedy(text, pat).size() == exhaustive_nocc(text, pat));
        }
      }
    }
  }
}

TEST_CASE("oracle_count is independent of grammar shape") {
  std::mt19937_64 rng(29);
  for (int it = 0; it < 20; ++it) {
    auto text = testutil::random_text(rng, 40 + rng() % 200, 3);
    std::string bytes = to_bytes(text);
    auto span = std::span<const unsigned char>(
        reinterpret_cast<const unsigned char*>(bytes.data()), bytes.size());
    auto balanced = build_balanced(span);
    auto pairs = build_pairs(span);
    for (int q : {2, 3, 5})
      REQUIRE(oracle_count(balanced, q) == oracle_count(pairs, q));
  }
}

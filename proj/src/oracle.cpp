#include "slpgram/oracle.hpp"

#include <algorithm>
#include <unordered_map>

#include "slpgram/textalg.hpp"

namespace slpgram {

namespace {

struct SymStrHash {
  std::size_t operator()(const SymStr& s) const {
    std::size_t h = 1469598103934665603ull;
    for (Sym c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

std::map<SymStr, std::uint64_t> oracle_count(const Slp& slp, int q, std::uint64_t limit) {
  if (q < 1) throw ArgError("oracle_count: q must be positive");
  SymStr text = expand(slp, limit);
  std::map<SymStr, std::uint64_t> out;
  const std::uint64_t uq = static_cast<std::uint64_t>(q);
  if (text.size() < uq) return out;

  // One pass implements the left-priority greedy for every gram at once:
  // an occurrence is kept iff it starts past the previously kept
  // occurrence of the same gram.
  struct State {
    std::uint64_t count = 0;
    std::uint64_t next_free = 1;
  };
  std::unordered_map<SymStr, State, SymStrHash> state;
  SymStr gram(uq);
  for (std::uint64_t p = 1; p + uq - 1 <= text.size(); ++p) {
    std::copy(text.begin() + static_cast<std::ptrdiff_t>(p - 1),
              text.begin() + static_cast<std::ptrdiff_t>(p - 1 + uq), gram.begin());
    State& st = state[gram];
    if (p >= st.next_free) {
      ++st.count;
      st.next_free = p + uq;
    }
  }
  for (auto& [g, st] : state) out.emplace(g, st.count);
  return out;
}

std::uint64_t exhaustive_nocc(std::span<const Sym> text, std::span<const Sym> pattern) {
  auto occ = kmp_occurrences(text, pattern);
  if (occ.size() > 20) throw ArgError("exhaustive_nocc: occurrence list too large");
  const std::uint64_t m = pattern.size();
  // best[k] = largest non-overlapping subset of occ[k..].
  std::vector<std::uint64_t> best(occ.size() + 1, 0);
  for (std::size_t k = occ.size(); k-- > 0;) {
    std::uint64_t skip = best[k + 1];
    auto next = std::lower_bound(occ.begin() + static_cast<std::ptrdiff_t>(k) + 1,
                                 occ.end(), occ[k] + m);
    std::uint64_t take = 1 + best[static_cast<std::size_t>(next - occ.begin())];
    best[k] = std::max(skip, take);
  }
  return best[0];
}

}  // namespace slpgram

#include "slpgram/builders.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

namespace slpgram {

namespace {

// Hash-consing rule factory over a growing rule list. Symbols are 1-based
// rule indices.
class RuleCons {
 public:
  std::uint32_t terminal(Sym s) {
    auto [it, fresh] = terminals_.try_emplace(s, 0);
    if (fresh) {
      rules_.push_back(Rule::terminal(s));
      it->second = static_cast<std::uint32_t>(rules_.size());
    }
    return it->second;
  }

  std::uint32_t pair(std::uint32_t l, std::uint32_t r) {
    auto [it, fresh] = pairs_.try_emplace((std::uint64_t(l) << 32) | r, 0);
    if (fresh) {
      rules_.push_back(Rule::pair(l, r));
      it->second = static_cast<std::uint32_t>(rules_.size());
    }
    return it->second;
  }

  // Balanced combination of a symbol sequence into one variable.
  std::uint32_t combine(std::span<const std::uint32_t> seq) {
    if (seq.size() == 1) return seq[0];
    std::size_t mid = seq.size() / 2;
    return pair(combine(seq.subspan(0, mid)), combine(seq.subspan(mid)));
  }

  Slp finish(std::uint32_t root) {
    Slp slp;
    slp.rules = std::move(rules_);
    slp.root = root;
    return slp;
  }

 private:
  std::vector<Rule> rules_;
  std::unordered_map<Sym, std::uint32_t> terminals_;
  std::unordered_map<std::uint64_t, std::uint32_t> pairs_;
};

}  // namespace

Slp build_balanced(std::span<const unsigned char> input) {
  if (input.empty()) throw ArgError("build_balanced: empty input");
  RuleCons cons;
  std::vector<std::uint32_t> seq;
  seq.reserve(input.size());
  for (unsigned char c : input) seq.push_back(cons.terminal(c));
  std::uint32_t root = cons.combine(seq);
  return cons.finish(root);
}

namespace {

// Doubly linked sequence with per-pair adjacency counts. An adjacency is a
// live position pair (p, next(p)); its count is maintained exactly, so the
// heap's stale entries can be skipped by comparing against the map.
struct PairSequence {
  std::vector<std::uint32_t> sym;
  std::vector<std::int64_t> prev, next;  // -1 at the ends / dead slots
  std::unordered_map<std::uint64_t, std::uint64_t> adj;
  std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> sites;

  static std::uint64_t key(std::uint32_t a, std::uint32_t b) {
    return (std::uint64_t(a) << 32) | b;
  }

  bool alive(std::uint64_t p) const { return sym[p] != 0; }

  void add_adj(std::uint64_t p) {
    if (next[p] < 0) return;
    std::uint64_t k = key(sym[p], sym[next[p]]);
    ++adj[k];
    sites[k].push_back(p);
  }

  void drop_adj(std::uint64_t p) {
    if (next[p] < 0) return;
    auto it = adj.find(key(sym[p], sym[next[p]]));
    if (it != adj.end() && it->second > 0) --it->second;
  }
};

}  // namespace

Slp build_pairs(std::span<const unsigned char> input) {
  if (input.empty()) throw ArgError("build_pairs: empty input");
  RuleCons cons;

  PairSequence s;
  s.sym.reserve(input.size());
  for (unsigned char c : input) s.sym.push_back(cons.terminal(c));
  const std::size_t n = s.sym.size();
  s.prev.resize(n);
  s.next.resize(n);
  for (std::size_t p = 0; p < n; ++p) {
    s.prev[p] = p == 0 ? -1 : static_cast<std::int64_t>(p - 1);
    s.next[p] = p + 1 == n ? -1 : static_cast<std::int64_t>(p + 1);
  }
  for (std::size_t p = 0; p + 1 < n; ++p) s.add_adj(p);

  // Max-heap on (count, smaller pair first); entries go stale when counts
  // move, so each pop is validated against the adjacency map.
  struct Entry {
    std::uint64_t count;
    std::uint64_t pair;
    bool operator<(const Entry& o) const {
      if (count != o.count) return count < o.count;
      return pair > o.pair;
    }
  };
  std::priority_queue<Entry> heap;
  for (const auto& [k, c] : s.adj)
    if (c >= 2) heap.push({c, k});

  while (!heap.empty()) {
    auto [count, pk] = heap.top();
    heap.pop();
    auto it = s.adj.find(pk);
    std::uint64_t current = it == s.adj.end() ? 0 : it->second;
    if (current != count) {
      if (current >= 2) heap.push({current, pk});
      continue;
    }
    if (count < 2) break;

    const auto left = static_cast<std::uint32_t>(pk >> 32);
    const auto right = static_cast<std::uint32_t>(pk & 0xffffffff);
    const std::uint32_t fresh = cons.pair(left, right);

    auto positions = std::move(s.sites[pk]);
    s.sites.erase(pk);
    std::sort(positions.begin(), positions.end());
    positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
    for (std::uint64_t p : positions) {
      if (!s.alive(p) || s.sym[p] != left || s.next[p] < 0) continue;
      std::uint64_t pnext = static_cast<std::uint64_t>(s.next[p]);
      if (s.sym[pnext] != right) continue;
      // Replace (p, pnext) by the fresh symbol at p.
      if (s.prev[p] >= 0) s.drop_adj(static_cast<std::uint64_t>(s.prev[p]));
      s.drop_adj(pnext);
      s.drop_adj(p);
      s.sym[p] = fresh;
      s.next[p] = s.next[pnext];
      if (s.next[pnext] >= 0) s.prev[static_cast<std::uint64_t>(s.next[pnext])] = static_cast<std::int64_t>(p);
      s.sym[pnext] = 0;  // dead
      s.next[pnext] = -1;
      s.prev[pnext] = -1;
      if (s.prev[p] >= 0) {
        s.add_adj(static_cast<std::uint64_t>(s.prev[p]));
        std::uint64_t k = PairSequence::key(s.sym[static_cast<std::uint64_t>(s.prev[p])], fresh);
        heap.push({s.adj[k], k});
      }
      if (s.next[p] >= 0) {
        s.add_adj(p);
        std::uint64_t k = PairSequence::key(fresh, s.sym[static_cast<std::uint64_t>(s.next[p])]);
        heap.push({s.adj[k], k});
      }
    }
    s.adj.erase(pk);
  }

  std::vector<std::uint32_t> residual;
  for (std::int64_t p = 0; p >= 0; p = s.next[static_cast<std::uint64_t>(p)])
    residual.push_back(s.sym[static_cast<std::uint64_t>(p)]);
  return cons.finish(cons.combine(residual));
}

}  // namespace slpgram

#include "slpgram/slp.hpp"

#include <charconv>
#include <utility>

namespace slpgram {

namespace {

// Strict field scanner: decimal integers separated by single spaces.
struct LineScanner {
  std::string_view line;
  std::size_t pos = 0;
  std::size_t line_no;

  LineScanner(std::string_view l, std::size_t no) : line(l), line_no(no) {}

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_no, msg); }

  void expect_space() {
    if (pos >= line.size() || line[pos] != ' ') fail("expected single space separator");
    ++pos;
  }

  std::uint64_t number(const char* what) {
    std::size_t start = pos;
    while (pos < line.size() && line[pos] >= '0' && line[pos] <= '9') ++pos;
    if (pos == start) fail(std::string("expected ") + what);
    if (line[start] == '0' && pos - start > 1) fail(std::string("leading zero in ") + what);
    std::uint64_t value = 0;
    auto res = std::from_chars(line.data() + start, line.data() + pos, value);
    if (res.ec != std::errc()) fail(std::string("invalid ") + what);
    return value;
  }

  char letter() {
    if (pos >= line.size()) fail("expected rule kind");
    return line[pos++];
  }

  void expect_end() {
    if (pos != line.size()) fail("trailing characters");
  }
};

void check_lengths(const Slp& slp) { (void)derived_lengths(slp); }

}  // namespace

Slp parse_slp(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t offset = 0;
  auto next_line = [&]() -> std::string_view {
    ++line_no;
    if (offset >= text.size()) throw ParseError(line_no, "unexpected end of file");
    auto nl = text.find('\n', offset);
    if (nl == std::string_view::npos)
      throw ParseError(line_no, "missing trailing newline");
    auto line = text.substr(offset, nl - offset);
    offset = nl + 1;
    return line;
  };

  auto header = next_line();
  if (header.substr(0, 4) != "SLP ") throw ParseError(1, "malformed header, expected 'SLP <n> <root>'");
  LineScanner hs(header, 1);
  hs.pos = 4;
  std::uint64_t n = hs.number("rule count");
  hs.expect_space();
  std::uint64_t root = hs.number("root index");
  hs.expect_end();
  if (n == 0) throw ParseError(1, "rule count must be positive");
  if (n > 0xffffffffull) throw ParseError(1, "rule count too large");
  if (root < 1 || root > n) throw ParseError(1, "root out of range");

  Slp slp;
  slp.rules.reserve(n);
  slp.root = static_cast<std::uint32_t>(root);
  for (std::uint64_t i = 1; i <= n; ++i) {
    auto line = next_line();
    LineScanner sc(line, line_no);
    std::uint64_t idx = sc.number("rule index");
    if (idx != i) sc.fail("rule index out of order");
    sc.expect_space();
    char kind = sc.letter();
    if (kind == 'T') {
      sc.expect_space();
      std::uint64_t byte = sc.number("byte value");
      if (byte > 255) sc.fail("byte value > 255");
      sc.expect_end();
      slp.rules.push_back(Rule::terminal(static_cast<Sym>(byte)));
    } else if (kind == 'P') {
      sc.expect_space();
      std::uint64_t l = sc.number("left index");
      sc.expect_space();
      std::uint64_t r = sc.number("right index");
      sc.expect_end();
      if (l >= i || r >= i) sc.fail("forward reference");
      if (l < 1 || r < 1) sc.fail("index out of range");
      slp.rules.push_back(Rule::pair(static_cast<std::uint32_t>(l),
                                     static_cast<std::uint32_t>(r)));
    } else {
      sc.fail("unknown rule kind (expected T or P)");
    }
  }
  if (offset != text.size()) throw ParseError(line_no + 1, "trailing data after last rule");
  check_lengths(slp);
  return slp;
}

std::string serialize_slp(const Slp& slp) {
  std::string out = "SLP " + std::to_string(slp.size()) + ' ' + std::to_string(slp.root) + '\n';
  for (std::uint32_t i = 1; i <= slp.size(); ++i) {
    const Rule& r = slp.rule(i);
    out += std::to_string(i);
    if (r.is_terminal()) {
      out += " T " + std::to_string(r.sym);
    } else {
      out += " P " + std::to_string(r.left) + ' ' + std::to_string(r.right);
    }
    out += '\n';
  }
  return out;
}

std::vector<std::string> validate_slp(const Slp& slp) {
  if (slp.rules.empty()) throw Error("empty grammar");
  if (slp.root < 1 || slp.root > slp.size()) throw Error("root out of range");
  for (std::uint32_t i = 1; i <= slp.size(); ++i) {
    const Rule& r = slp.rule(i);
    if (r.is_terminal()) {
      if (!is_valid_symbol(r.sym)) throw Error("invalid symbol code in rule " + std::to_string(i));
    } else if (r.left >= i || r.right >= i || r.left < 1 || r.right < 1) {
      throw Error("rule " + std::to_string(i) + " references an invalid variable");
    }
  }
  (void)derived_lengths(slp);

  std::vector<bool> reachable(slp.size() + 1, false);
  reachable[slp.root] = true;
  for (std::uint32_t i = slp.size(); i >= 1; --i) {
    if (!reachable[i] || slp.rule(i).is_terminal()) continue;
    reachable[slp.rule(i).left] = true;
    reachable[slp.rule(i).right] = true;
  }
  std::vector<std::string> warnings;
  for (std::uint32_t i = 1; i <= slp.size(); ++i)
    if (!reachable[i])
      warnings.push_back("variable " + std::to_string(i) + " is unreachable from the root");
  return warnings;
}

Slp reversed(const Slp& slp) {
  Slp rev = slp;
  for (Rule& r : rev.rules)
    if (!r.is_terminal()) std::swap(r.left, r.right);
  return rev;
}

std::vector<std::uint64_t> derived_lengths(const Slp& slp) {
  std::vector<std::uint64_t> len(slp.size() + 1, 0);
  for (std::uint32_t i = 1; i <= slp.size(); ++i) {
    const Rule& r = slp.rule(i);
    len[i] = r.is_terminal() ? 1 : len[r.left] + len[r.right];
    if (len[i] >= kMaxDerivedLength)
      throw Error("derived length of variable " + std::to_string(i) + " exceeds 2^62");
  }
  return len;
}

Slp augment_with_sentinels(const Slp& slp, int q) {
  if (q < 2) throw ArgError("augment_with_sentinels: q must be at least 2");
  for (const Rule& r : slp.rules)
    if (r.is_terminal() && is_sentinel(r.sym))
      throw ArgError("augment_with_sentinels: grammar already contains sentinels");

  Slp out = slp;
  // A chain of q-2 pairings on top of one terminal derives sym^(q-1).
  auto make_run = [&out](Sym sym, int count) -> std::uint32_t {
    out.rules.push_back(Rule::terminal(sym));
    std::uint32_t unit = out.size();
    std::uint32_t run = unit;
    for (int t = 1; t < count; ++t) {
      out.rules.push_back(Rule::pair(run, unit));
      run = out.size();
    }
    return run;
  };
  std::uint32_t begin_run = make_run(kSentinelBegin, q - 1);
  std::uint32_t end_run = make_run(kSentinelEnd, q - 1);
  out.rules.push_back(Rule::pair(begin_run, slp.root));
  std::uint32_t mid = out.size();
  out.rules.push_back(Rule::pair(mid, end_run));
  out.root = out.size();
  return out;
}

SymStr expand_variable(const Slp& slp, std::uint32_t var, std::uint64_t limit) {
  if (var < 1 || var > slp.size()) throw ArgError("expand_variable: variable out of range");
  auto len = derived_lengths(slp);
  if (len[var] > limit)
    throw LimitError(len[var], "derived length " + std::to_string(len[var]) +
                                   " exceeds limit " + std::to_string(limit));
  SymStr out;
  out.reserve(len[var]);
  std::vector<std::uint32_t> stack{var};
  while (!stack.empty()) {
    std::uint32_t i = stack.back();
    stack.pop_back();
    const Rule& r = slp.rule(i);
    if (r.is_terminal()) {
      out.push_back(r.sym);
    } else {
      stack.push_back(r.right);
      stack.push_back(r.left);
    }
  }
  return out;
}

}  // namespace slpgram

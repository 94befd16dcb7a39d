#include "slpgram/pipeline.hpp"

#include <algorithm>

#include "slpgram/textalg.hpp"

namespace slpgram {

WeightedCorpus assemble_corpus(std::span<const SegmentContribution> contributions, int q) {
  const std::uint64_t uq = static_cast<std::uint64_t>(q);
  WeightedCorpus corpus;
  for (const SegmentContribution& c : contributions) {
    WeightedCorpus::Segment seg{c.var, corpus.z.size(), c.window.size()};
    corpus.z.insert(corpus.z.end(), c.window.begin(), c.window.end());
    corpus.w.resize(corpus.z.size(), 0);
    for (auto [pos, weight] : c.weights) {
      if (pos < 1 || pos + uq - 1 > seg.length)
        throw Error("internal: weighted gram escapes its corpus segment");
      corpus.w[seg.offset + pos - 1] = weight;
    }
    corpus.segments.push_back(seg);
  }
  return corpus;
}

std::string render_gram(const SymStr& gram) {
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (Sym s : gram) {
    if (s > 0xff) throw Error("internal: sentinel symbol in rendered gram");
    if (s >= 0x21 && s <= 0x7e && s != '\\') {
      out.push_back(static_cast<char>(s));
    } else {
      out.push_back('\\');
      out.push_back('x');
      out.push_back(hex[s >> 4]);
      out.push_back(hex[s & 0xf]);
    }
  }
  return out;
}

std::string FreqReport::to_tsv() const {
  std::string out;
  for (const auto& [gram, count] : entries) {
    out += render_gram(gram);
    out += '\t';
    out += std::to_string(count);
    out += '\n';
  }
  return out;
}

namespace {

FreqReport count_unigrams(const Slp& slp, const Meta& meta) {
  FreqReport report;
  for (std::uint32_t i = 1; i <= slp.size(); ++i) {
    const Rule& r = slp.rule(i);
    if (r.is_terminal() && meta.vocc[i] > 0) report.entries[{r.sym}] += meta.vocc[i];
  }
  return report;
}

bool contains_sentinel(const SymStr& gram) {
  return std::any_of(gram.begin(), gram.end(), [](Sym s) { return is_sentinel(s); });
}

}  // namespace

FreqReport count_qgrams(const Slp& slp, int q, PipelineStats* stats) {
  if (q < 1) throw ArgError("count_qgrams: q must be positive");
  validate_slp(slp);
  if (q == 1) return count_unigrams(slp, compute_meta(slp, 1));

  {
    auto len = derived_lengths(slp);
    if (len[slp.root] < static_cast<std::uint64_t>(q)) return FreqReport{};
  }

  const std::uint64_t uq = static_cast<std::uint64_t>(q);
  const std::uint64_t w2 = 2 * (uq - 1);
  Slp aug = augment_with_sentinels(slp, q);
  Meta meta = compute_meta(aug, q);
  DpTables dp = build_dp_tables(aug, meta, q);

  std::vector<SegmentContribution> contributions;
  for (std::uint32_t i = 1; i <= aug.size(); ++i) {
    const Rule& rule = aug.rule(i);
    if (rule.is_terminal() || meta.len[i] < uq) continue;
    const std::uint64_t len = meta.len[i];
    const std::uint64_t len_l = meta.len[rule.left];

    SegmentContribution contrib;
    contrib.var = i;
    BoundaryWindow bw = boundary_window(aug, meta, i, w2);
    contrib.window = std::move(bw.window);

    const std::uint64_t j_lo = len_l + 1 > w2 ? len_l + 1 - w2 : 1;
    const std::uint64_t j_hi = std::min(len_l + uq - 1, len - uq + 1);
    auto gram_at = [&](std::uint64_t j) {
      std::uint64_t pos = j + bw.boundary_offset - len_l;
      return std::span<const Sym>(contrib.window).subspan(pos - 1, uq);
    };
    std::vector<std::pair<Cover, std::uint64_t>> seen;  // cover and a position
    for (std::uint64_t j = j_lo; j <= j_hi; ++j) {
      Cover c = crossing_cover(aug, meta, dp.covers, i, j);
      if (!(uq - 1 < c.b && c.e < len - uq + 2)) continue;  // not closed in X_i
      auto dup = std::find_if(seen.begin(), seen.end(),
                              [&](const auto& s) { return s.first == c; });
      if (dup != seen.end()) {
        // Equal covers must come from equal grams.
        auto a = gram_at(dup->second), b = gram_at(j);
        if (!std::equal(a.begin(), a.end(), b.begin(), b.end()))
          throw Error("internal: distinct grams share a closed cover");
        continue;
      }
      seen.emplace_back(c, j);
      std::uint64_t count = nocc_in_crossing_cover(aug, meta, dp, i, j);
      contrib.weights.emplace_back(j + bw.boundary_offset - len_l,
                                   meta.vocc[i] * count);
    }
    contributions.push_back(std::move(contrib));
  }

  WeightedCorpus corpus = assemble_corpus(contributions, q);
  auto freqs = weighted_qgram_freqs(corpus.z, q, corpus.w);

  FreqReport report;
  for (auto& [gram, count] : freqs) {
    if (count == 0 || contains_sentinel(gram)) continue;
    report.entries.emplace(gram, count);
  }

  if (stats) {
    stats->grammar_size = aug.size();
    stats->table_entries = dp.footprint_entries();
    stats->meta_entries = 2 * meta.footprint_entries();
    stats->corpus_entries = corpus.z.size() + corpus.w.size();
  }
  return report;
}

}  // namespace slpgram

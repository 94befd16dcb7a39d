#ifndef SLPGRAM_PIPELINE_HPP
#define SLPGRAM_PIPELINE_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "slpgram/occdp.hpp"

namespace slpgram {

// One Pair variable's boundary window t_i plus the weighted positions that
// survived the closed-cover and dedup checks.
struct SegmentContribution {
  std::uint32_t var = 0;
  SymStr window;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> weights;  // (window pos, weight)
};

// Concatenation of all boundary windows with the weight array for the
// weighted q-gram aggregation step.
struct WeightedCorpus {
  SymStr z;
  std::vector<std::uint64_t> w;
  struct Segment {
    std::uint32_t var = 0;
    std::uint64_t offset = 0;  // 0-based into z
    std::uint64_t length = 0;
  };
  std::vector<Segment> segments;
};

// Validates the containment invariant (every weighted gram lies inside its
// segment) while concatenating; a violation signals an internal bug.
WeightedCorpus assemble_corpus(std::span<const SegmentContribution> contributions, int q);

// Non-overlapping frequency of every q-gram of the derived text, keyed by
// symbol string in ascending code order.
struct FreqReport {
  std::map<SymStr, std::uint64_t> entries;

  std::string to_tsv() const;
  friend bool operator==(const FreqReport&, const FreqReport&) = default;
};

// Renders a gram byte-literally for printable ASCII (0x21-0x7e except
// backslash) and as \xHH otherwise.
std::string render_gram(const SymStr& gram);

struct PipelineStats {
  std::uint64_t grammar_size = 0;    // variables in the augmented grammar
  std::uint64_t table_entries = 0;   // persistent DP table cells
  std::uint64_t meta_entries = 0;    // lengths, vocc, pre/suf symbols (both directions)
  std::uint64_t corpus_entries = 0;  // |z| + |w|
  std::uint64_t total() const { return table_entries + meta_entries + corpus_entries; }
};

FreqReport count_qgrams(const Slp& slp, int q, PipelineStats* stats = nullptr);

}  // namespace slpgram

#endif  // SLPGRAM_PIPELINE_HPP

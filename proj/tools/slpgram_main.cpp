// slpgram: non-overlapping q-gram frequencies over grammar-compressed text.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "slpgram/builders.hpp"
#include "slpgram/oracle.hpp"
#include "slpgram/pipeline.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw slpgram::ArgError("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

void write_output(const std::string& path, const std::string& data) {
  if (path.empty()) {
    std::cout << data;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw slpgram::ArgError("cannot open output file '" + path + "'");
  out << data;
}

slpgram::Slp load_slp(const std::string& path) {
  try {
    return slpgram::parse_slp(read_file(path));
  } catch (const slpgram::ParseError& e) {
    throw slpgram::ArgError(path + ": " + e.what());
  }
}

std::string report_diff(const slpgram::FreqReport& expected,
                        const slpgram::FreqReport& actual, std::string* first_diff) {
  std::string out;
  auto ei = expected.entries.begin();
  auto ai = actual.entries.begin();
  auto note = [&](const std::string& gram) {
    if (first_diff->empty()) *first_diff = gram;
  };
  while (ei != expected.entries.end() || ai != actual.entries.end()) {
    bool take_expected =
        ai == actual.entries.end() ||
        (ei != expected.entries.end() && ei->first < ai->first);
    bool take_actual =
        ei == expected.entries.end() ||
        (ai != actual.entries.end() && ai->first < ei->first);
    if (take_expected) {
      out += "-" + slpgram::render_gram(ei->first) + "\t" + std::to_string(ei->second) + "\n";
      note(slpgram::render_gram(ei->first));
      ++ei;
    } else if (take_actual) {
      out += "+" + slpgram::render_gram(ai->first) + "\t" + std::to_string(ai->second) + "\n";
      note(slpgram::render_gram(ai->first));
      ++ai;
    } else {
      if (ei->second != ai->second) {
        out += "-" + slpgram::render_gram(ei->first) + "\t" + std::to_string(ei->second) + "\n";
        out += "+" + slpgram::render_gram(ai->first) + "\t" + std::to_string(ai->second) + "\n";
        note(slpgram::render_gram(ei->first));
      }
      ++ei;
      ++ai;
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"non-overlapping q-gram frequencies on SLP-compressed text"};
  app.require_subcommand(1);

  std::string input, output, method = "balanced";
  int q = 2;
  std::uint64_t limit = 1000000;
  bool inject_fault = false;

  auto* build = app.add_subcommand("build", "construct an SLP from a raw byte file");
  build->add_option("--input", input, "raw input file")->required();
  build->add_option("--method", method, "balanced|pairs")
      ->check(CLI::IsMember({"balanced", "pairs"}));
  build->add_option("--output", output, "output SLP file (default stdout)");

  auto* count = app.add_subcommand("count", "count q-gram non-overlapping frequencies");
  count->add_option("--input", input, "SLP file")->required();
  count->add_option("--q", q, "gram length")->required();
  count->add_option("--output", output, "output TSV file (default stdout)");

  auto* verify = app.add_subcommand("verify", "diff the pipeline against the oracle");
  verify->add_option("--input", input, "SLP file")->required();
  verify->add_option("--q", q, "gram length")->required();
  verify->add_option("--limit", limit, "expansion limit in symbols");
  verify->add_flag("--inject-fault", inject_fault)->group("");  // test hook

  auto* info = app.add_subcommand("info", "print grammar statistics");
  info->add_option("--input", input, "SLP file")->required();

  auto* decompress = app.add_subcommand("decompress", "expand an SLP to raw bytes");
  decompress->add_option("--input", input, "SLP file")->required();
  decompress->add_option("--limit", limit, "expansion limit in bytes");
  decompress->add_option("--output", output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (build->parsed()) {
      std::string data = read_file(input);
      if (data.empty()) throw slpgram::ArgError("input file is empty");
      auto bytes = std::span<const unsigned char>(
          reinterpret_cast<const unsigned char*>(data.data()), data.size());
      write_output(output, slpgram::serialize_slp(slpgram::build_slp(bytes, method)));
      return kExitOk;
    }
    if (count->parsed()) {
      if (q < 1) throw slpgram::ArgError("--q must be positive");
      auto slp = load_slp(input);
      for (const auto& warning : slpgram::validate_slp(slp))
        std::cerr << "warning: " << warning << "\n";
      write_output(output, slpgram::count_qgrams(slp, q).to_tsv());
      return kExitOk;
    }
    if (verify->parsed()) {
      if (q < 1) throw slpgram::ArgError("--q must be positive");
      auto slp = load_slp(input);
      slpgram::FreqReport oracle{slpgram::oracle_count(slp, q, limit)};
      auto pipeline = slpgram::count_qgrams(slp, q);
      if (inject_fault && !pipeline.entries.empty()) ++pipeline.entries.begin()->second;
      std::string first;
      std::string diff = report_diff(oracle, pipeline, &first);
      if (diff.empty()) {
        std::cout << "identical\n";
        return kExitOk;
      }
      std::cout << "--- oracle\n+++ pipeline\n" << diff;
      std::cout << "first differing gram: " << first << "\n";
      return 1;
    }
    if (info->parsed()) {
      auto slp = load_slp(input);
      for (const auto& warning : slpgram::validate_slp(slp))
        std::cerr << "warning: " << warning << "\n";
      auto meta = slpgram::compute_meta(slp, 1);
      std::uint64_t vocc_max = 0, terminals = 0;
      for (std::uint32_t i = 1; i <= slp.size(); ++i) {
        vocc_max = std::max(vocc_max, meta.vocc[i]);
        if (slp.rule(i).is_terminal()) ++terminals;
      }
      std::ostringstream out;
      out << "n=" << slp.size() << " root=" << slp.root
          << " length=" << meta.len[slp.root] << "\n";
      out << "terminals=" << terminals << " vocc_max=" << vocc_max << "\n";
      write_output("", out.str());
      return kExitOk;
    }
    if (decompress->parsed()) {
      auto slp = load_slp(input);
      write_output(output, slpgram::to_bytes(slpgram::expand(slp, limit)));
      return kExitOk;
    }
  } catch (const slpgram::LimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitLimit;
  } catch (const slpgram::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "slpgram/builders.hpp"
#include "slpgram/oracle.hpp"
#include "slpgram/pipeline.hpp"

namespace py = pybind11;

namespace {

slpgram::Slp parse(const std::string& slp_text) { return slpgram::parse_slp(slp_text); }

py::dict report_to_dict(const std::map<slpgram::SymStr, std::uint64_t>& entries) {
  py::dict out;
  for (const auto& [gram, count] : entries)
    out[py::bytes(slpgram::to_bytes(gram))] = count;
  return out;
}

}  // namespace

PYBIND11_MODULE(_slpgram, m) {
  m.doc() = "non-overlapping q-gram frequencies on SLP-compressed text";

  m.def(
      "count_qgrams",
      [](const std::string& slp_text, int q) {
        return report_to_dict(slpgram::count_qgrams(parse(slp_text), q).entries);
      },
      py::arg("slp_text"), py::arg("q"),
      "Count non-overlapping q-gram frequencies without decompressing.");

  m.def(
      "oracle_count",
      [](const std::string& slp_text, int q, std::uint64_t limit) {
        return report_to_dict(slpgram::oracle_count(parse(slp_text), q, limit));
      },
      py::arg("slp_text"), py::arg("q"), py::arg("limit") = 1000000,
      "Ground-truth counts by full decompression.");

  m.def(
      "verify",
      [](const std::string& slp_text, int q, std::uint64_t limit) {
        auto slp = parse(slp_text);
        return slpgram::count_qgrams(slp, q).entries == slpgram::oracle_count(slp, q, limit);
      },
      py::arg("slp_text"), py::arg("q"), py::arg("limit") = 1000000,
      "True when the compressed-domain pipeline matches the oracle.");

  m.def(
      "build",
      [](py::bytes data, const std::string& method) {
        std::string bytes = data;
        if (bytes.empty()) throw py::value_error("input is empty");
        auto span = std::span<const unsigned char>(
            reinterpret_cast<const unsigned char*>(bytes.data()), bytes.size());
        return slpgram::serialize_slp(slpgram::build_slp(span, method));
      },
      py::arg("data"), py::arg("method") = "balanced",
      "Construct an SLP (text format) from raw bytes.");

  m.def(
      "decompress",
      [](const std::string& slp_text, std::uint64_t limit) {
        return py::bytes(slpgram::to_bytes(slpgram::expand(parse(slp_text), limit)));
      },
      py::arg("slp_text"), py::arg("limit") = 1000000,
      "Expand an SLP back to raw bytes, refusing past the limit.");

  m.def(
      "info",
      [](const std::string& slp_text) {
        auto slp = parse(slp_text);
        auto meta = slpgram::compute_meta(slp, 1);
        py::dict out;
        out["n"] = slp.size();
        out["root"] = slp.root;
        out["length"] = meta.len[slp.root];
        return out;
      },
      py::arg("slp_text"), "Grammar size, root, and derived length.");

  py::register_exception<slpgram::LimitError>(m, "LimitExceeded", PyExc_ValueError);
  py::register_exception<slpgram::Error>(m, "SlpError", PyExc_ValueError);
}

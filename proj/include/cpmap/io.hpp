#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cpmap/analysis.hpp"
#include "cpmap/channel.hpp"
#include "cpmap/matrix.hpp"

namespace cpmap {

enum class ReprKind { kraus, choi, superop };

std::string repr_name(ReprKind repr);

// In-memory form of a channel spec file: {"dim": N, "repr": "kraus" |
// "choi" | "superop", "data": ...}. data holds one or more matrices for
// "kraus" and exactly one N^2 x N^2 matrix otherwise. Matrices are
// row-major nested arrays with complex entries encoded as [re, im].
struct ChannelSpec {
    std::size_t dim = 0;
    ReprKind repr = ReprKind::superop;
    std::vector<ComplexMatrix> data;
};

// Matrix <-> JSON. Parsing is strict: rows must be non-empty arrays of
// equal length, entries exactly two finite numbers. Violations throw
// SpecParseError.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json spec_to_json(const ChannelSpec& spec);
ChannelSpec spec_from_json(const nlohmann::json& j);

// Read and validate a spec (or bare matrix) file. Malformed JSON is
// reported with the line where parsing failed; schema violations name the
// offending field. Both throw SpecParseError.
ChannelSpec load_channel_spec(const std::string& path);
ComplexMatrix load_matrix(const std::string& path);

// Convert a parsed spec into the form an analysis needs.
SuperOperator superop_of(const ChannelSpec& spec);
ChoiMatrix choi_of(const ChannelSpec& spec);

ChannelSpec spec_from_kraus(const KrausSet& kraus);
ChannelSpec spec_from_superop(const SuperOperator& superop);

// Machine-readable report: tool_version, the tolerances used, the CpReport
// fields flattened, eigenvalues when the input was Hermitian, and
// optionally the extracted Kraus set.
nlohmann::json report_to_json(const CpReport& report, const Tolerances& t,
                              const std::vector<ComplexMatrix>* kraus = nullptr);

}  // namespace cpmap

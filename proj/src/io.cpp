#include "cpmap/io.hpp"

#include <fstream>
#include <sstream>

#include "cpmap/errors.hpp"
#include "cpmap/version.hpp"

namespace cpmap {

namespace {

using nlohmann::json;

ComplexMatrix parse_matrix(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) {
        throw SpecParseError(where + ": matrix must be a non-empty array of rows");
    }
    const std::size_t rows = j.size();
    if (!j[0].is_array() || j[0].empty()) {
        throw SpecParseError(where + ": rows must be non-empty arrays");
    }
    const std::size_t cols = j[0].size();
    ComplexMatrix out(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const json& row = j[r];
        if (!row.is_array() || row.size() != cols) {
            throw SpecParseError(where + ": row " + std::to_string(r) +
                                 " does not match the first row's length");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            const json& entry = row[c];
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
                !entry[1].is_number()) {
                throw SpecParseError(where + ": entry (" + std::to_string(r) + ", " +
                                     std::to_string(c) + ") must be a [re, im] number pair");
            }
            out(r, c) = Complex(entry[0].get<double>(), entry[1].get<double>());
        }
    }
    return out;
}

void require_shape(const ComplexMatrix& m, std::size_t rows, std::size_t cols,
                   const std::string& where) {
    if (m.rows() != rows || m.cols() != cols) {
        throw SpecParseError(where + ": expected a " + std::to_string(rows) + " x " +
                             std::to_string(cols) + " matrix, got " + std::to_string(m.rows()) +
                             " x " + std::to_string(m.cols()));
    }
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw SpecParseError(path + ": cannot open file");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return json::parse(buffer.str());
    } catch (const json::parse_error& e) {
        // e.what() carries "parse error at line L, column C: ...".
        throw SpecParseError(path + ": " + e.what());
    }
}

}  // namespace

std::string repr_name(ReprKind repr) {
    switch (repr) {
        case ReprKind::kraus:
            return "kraus";
        case ReprKind::choi:
            return "choi";
        case ReprKind::superop:
            return "superop";
    }
    throw SpecParseError("repr_name: invalid repr kind");
}

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
    return parse_matrix(j, "matrix");
}

nlohmann::json spec_to_json(const ChannelSpec& spec) {
    json out;
    out["dim"] = spec.dim;
    out["repr"] = repr_name(spec.repr);
    if (spec.repr == ReprKind::kraus) {
        json list = json::array();
        for (const ComplexMatrix& m : spec.data) {
            list.push_back(matrix_to_json(m));
        }
        out["data"] = std::move(list);
    } else {
        out["data"] = matrix_to_json(spec.data.front());
    }
    return out;
}

ChannelSpec spec_from_json(const nlohmann::json& j) {
    if (!j.is_object()) {
        throw SpecParseError("spec: top level must be a JSON object");
    }
    for (const auto& item : j.items()) {
        if (item.key() != "dim" && item.key() != "repr" && item.key() != "data") {
            throw SpecParseError("spec: unknown field '" + item.key() + "'");
        }
    }
    if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long long>() < 1) {
        throw SpecParseError("spec: 'dim' must be a positive integer");
    }
    const auto dim = j["dim"].get<std::size_t>();
    if (!j.contains("repr") || !j["repr"].is_string()) {
        throw SpecParseError("spec: 'repr' must be one of \"kraus\", \"choi\", \"superop\"");
    }
    const std::string repr = j["repr"].get<std::string>();
    if (!j.contains("data")) {
        throw SpecParseError("spec: missing 'data'");
    }

    ChannelSpec spec;
    spec.dim = dim;
    if (repr == "kraus") {
        spec.repr = ReprKind::kraus;
        const json& list = j["data"];
        if (!list.is_array() || list.empty()) {
            throw SpecParseError("spec: kraus 'data' must be a non-empty array of matrices");
        }
        for (std::size_t p = 0; p < list.size(); ++p) {
            ComplexMatrix m = parse_matrix(list[p], "data[" + std::to_string(p) + "]");
            require_shape(m, dim, dim, "data[" + std::to_string(p) + "]");
            spec.data.push_back(std::move(m));
        }
    } else if (repr == "choi" || repr == "superop") {
        spec.repr = repr == "choi" ? ReprKind::choi : ReprKind::superop;
        ComplexMatrix m = parse_matrix(j["data"], "data");
        require_shape(m, dim * dim, dim * dim, "data");
        spec.data.push_back(std::move(m));
    } else {
        throw SpecParseError("spec: unknown repr '" + repr + "'");
    }
    return spec;
}

ChannelSpec load_channel_spec(const std::string& path) {
    return spec_from_json(read_json_file(path));
}

ComplexMatrix load_matrix(const std::string& path) {
    return matrix_from_json(read_json_file(path));
}

SuperOperator superop_of(const ChannelSpec& spec) {
    switch (spec.repr) {
        case ReprKind::superop:
            return SuperOperator(spec.dim, spec.data.front());
        case ReprKind::choi:
            return superop_from_choi(ChoiMatrix(spec.dim, spec.data.front()));
        case ReprKind::kraus:
            return superop_from_choi(choi_from_kraus(KrausSet(spec.dim, spec.data)));
    }
    throw SpecParseError("superop_of: invalid repr kind");
}

ChoiMatrix choi_of(const ChannelSpec& spec) {
    switch (spec.repr) {
        case ReprKind::superop:
            return choi_from_superop(SuperOperator(spec.dim, spec.data.front()));
        case ReprKind::choi:
            return ChoiMatrix(spec.dim, spec.data.front());
        case ReprKind::kraus:
            return choi_from_kraus(KrausSet(spec.dim, spec.data));
    }
    throw SpecParseError("choi_of: invalid repr kind");
}

ChannelSpec spec_from_kraus(const KrausSet& kraus) {
    ChannelSpec spec;
    spec.dim = kraus.dim;
    spec.repr = ReprKind::kraus;
    spec.data = kraus.operators;
    return spec;
}

ChannelSpec spec_from_superop(const SuperOperator& superop) {
    ChannelSpec spec;
    spec.dim = superop.dim;
    spec.repr = ReprKind::superop;
    spec.data = {superop.action};
    return spec;
}

nlohmann::json report_to_json(const CpReport& report, const Tolerances& t,
                              const std::vector<ComplexMatrix>* kraus) {
    json out;
    out["tool_version"] = kToolVersion;
    out["tolerances"] = {{"herm_tol", t.herm_tol}, {"psd_tol", t.psd_tol}, {"rank_tol", t.rank_tol}};
    out["hermiticity_defect"] = report.hermiticity_defect;
    out["is_hermitian"] = report.is_hermitian;
    out["zero_diag_consistent"] = report.zero_diag_consistent;
    out["is_psd"] = report.is_psd;
    out["is_cp"] = report.is_cp;
    out["rank"] = report.rank;
    if (report.min_eigenvalue) {
        out["min_eigenvalue"] = *report.min_eigenvalue;
    }
    if (report.max_eigenvalue) {
        out["max_eigenvalue"] = *report.max_eigenvalue;
    }
    if (report.is_hermitian) {
        out["eigenvalues"] = report.eigenvalues;
    }
    if (report.trace_preserving) {
        out["trace_preserving"] = *report.trace_preserving;
    }
    if (kraus != nullptr) {
        json list = json::array();
        for (const ComplexMatrix& m : *kraus) {
            list.push_back(matrix_to_json(m));
        }
        out["kraus"] = std::move(list);
    }
    return out;
}

}  // namespace cpmap

#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cpmap/analysis.hpp"
#include "cpmap/channel.hpp"
#include "cpmap/errors.hpp"
#include "cpmap/io.hpp"
#include "cpmap/version.hpp"
#include "cpmap/zoo.hpp"

namespace {

using namespace cpmap;

void print_verdict(std::ostream& out, const CpReport& report, std::size_t dim) {
    out << std::setprecision(12);
    out << "dim: " << dim << "\n";
    out << "hermiticity defect: " << report.hermiticity_defect << "\n";
    out << "hermitian: " << (report.is_hermitian ? "yes" : "no") << "\n";
    out << "zero-diagonal consistent: " << (report.zero_diag_consistent ? "yes" : "no") << "\n";
    if (report.min_eigenvalue && report.max_eigenvalue) {
        out << "eigenvalue range: [" << *report.min_eigenvalue << ", " << *report.max_eigenvalue
            << "]\n";
        out << "eigenvalues:";
        for (double v : report.eigenvalues) {
            out << " " << v;
        }
        out << "\n";
    }
    out << "psd: " << (report.is_psd ? "yes" : "no") << "\n";
    out << "cp: " << (report.is_cp ? "yes" : "no") << "\n";
    out << "rank: " << report.rank << "\n";
    if (report.trace_preserving) {
        out << "trace preserving: " << (*report.trace_preserving ? "yes" : "no") << "\n";
    }
}

int run_check(const std::string& input, double tol, bool as_json) {
    const ChannelSpec spec = load_channel_spec(input);
    const Tolerances t{tol, tol, tol};
    const ChoiMatrix choi = choi_of(spec);
    std::optional<KrausSet> kraus;
    if (spec.repr == ReprKind::kraus) {
        kraus.emplace(spec.dim, spec.data);
    }
    const CpReport report = cp_verdict(choi, t, kraus ? &*kraus : nullptr);
    if (as_json) {
        std::cout << report_to_json(report, t).dump(2) << "\n";
    } else {
        print_verdict(std::cout, report, spec.dim);
    }
    return report.is_cp ? 0 : 1;
}

int run_kraus(const std::string& input, double tol) {
    const ChannelSpec spec = load_channel_spec(input);
    const Tolerances t{tol, tol, tol};
    const ChoiMatrix choi = choi_of(spec);
    const CpReport report = cp_verdict(choi, t);
    if (!report.is_cp) {
        std::cerr << "not completely positive; no Kraus representation exists\n";
        print_verdict(std::cerr, report, spec.dim);
        return 1;
    }
    const KrausSet kraus = kraus_from_choi(choi, t);
    std::cout << spec_to_json(spec_from_kraus(kraus)).dump(2) << "\n";
    return 0;
}

int run_remix(const std::string& input, const std::string& unitary_path) {
    const ChannelSpec spec = load_channel_spec(input);
    if (spec.repr != ReprKind::kraus) {
        throw SpecParseError(input + ": remix needs a spec with repr \"kraus\"");
    }
    const ComplexMatrix u = load_matrix(unitary_path);
    const KrausSet remixed = remix_kraus(KrausSet(spec.dim, spec.data), u);
    std::cout << spec_to_json(spec_from_kraus(remixed)).dump(2) << "\n";
    return 0;
}

int run_apply(const std::string& channel_path, const std::string& state_path) {
    const ChannelSpec spec = load_channel_spec(channel_path);
    const ComplexMatrix x = load_matrix(state_path);
    ComplexMatrix y;
    if (spec.repr == ReprKind::kraus) {
        y = apply_kraus(KrausSet(spec.dim, spec.data), x);
    } else {
        y = apply_superop(superop_of(spec), x);
    }
    std::cout << matrix_to_json(y).dump(2) << "\n";
    return 0;
}

int run_zoo(const std::string& name, const std::vector<std::string>& kv_args,
            const std::optional<std::uint64_t>& seed) {
    std::map<std::string, double> params;
    for (const std::string& kv : kv_args) {
        const std::size_t eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw ParameterOutOfRange("zoo: parameters must look like name=value, got '" + kv +
                                      "'");
        }
        const std::string key = kv.substr(0, eq);
        const std::string text = kv.substr(eq + 1);
        double value = 0.0;
        std::size_t used = 0;
        try {
            value = std::stod(text, &used);
        } catch (const std::exception&) {
            used = std::string::npos;
        }
        if (used != text.size() || text.empty()) {
            throw ParameterOutOfRange("zoo: parameter '" + key + "' has a non-numeric value '" +
                                      text + "'");
        }
        if (params.contains(key)) {
            throw ParameterOutOfRange("zoo: duplicate parameter '" + key + "'");
        }
        params[key] = value;
    }
    if (seed) {
        params["seed"] = static_cast<double>(*seed);
    }
    const ZooEntry entry = make_zoo_entry(name, params);
    std::cout << spec_to_json(spec_from_superop(entry.channel)).dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Complete-positivity analysis for linear maps on matrix algebras"};
    app.name("cpmap");
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    std::string check_input;
    double check_tol = 1e-9;
    bool check_json = false;
    CLI::App* check = app.add_subcommand("check", "Decide complete positivity of a channel");
    check->add_option("input", check_input, "channel spec file (JSON)")->required();
    check->add_option("--tol", check_tol, "relative tolerance (default 1e-9)");
    check->add_flag("--json", check_json, "emit the machine-readable report");

    std::string kraus_input;
    double kraus_tol = 1e-9;
    CLI::App* kraus = app.add_subcommand("kraus", "Extract a minimal Kraus representation");
    kraus->add_option("input", kraus_input, "channel spec file (JSON)")->required();
    kraus->add_option("--tol", kraus_tol, "relative tolerance (default 1e-9)");

    std::string remix_input;
    std::string remix_unitary;
    CLI::App* remix = app.add_subcommand("remix", "Remix a Kraus set by a unitary matrix");
    remix->add_option("input", remix_input, "kraus-repr channel spec file")->required();
    remix->add_option("--unitary", remix_unitary, "unitary matrix file (JSON)")->required();

    std::string apply_channel;
    std::string apply_state;
    CLI::App* apply = app.add_subcommand("apply", "Apply a channel to a matrix");
    apply->add_option("channel", apply_channel, "channel spec file (JSON)")->required();
    apply->add_option("--state", apply_state, "input matrix file (JSON)")->required();

    std::string zoo_name;
    std::vector<std::string> zoo_params;
    std::optional<std::uint64_t> zoo_seed;
    CLI::App* zoo = app.add_subcommand("zoo", "Emit a named channel as a spec file");
    zoo->add_option("name", zoo_name, "channel name")->required();
    zoo->add_option("params", zoo_params, "name=value parameters");
    zoo->add_option("--seed", zoo_seed, "seed for randomized channels");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // bad usage is an input error; help/version succeed
    }

    try {
        if (check->parsed()) {
            return run_check(check_input, check_tol, check_json);
        }
        if (kraus->parsed()) {
            return run_kraus(kraus_input, kraus_tol);
        }
        if (remix->parsed()) {
            return run_remix(remix_input, remix_unitary);
        }
        if (apply->parsed()) {
            return run_apply(apply_channel, apply_state);
        }
        if (zoo->parsed()) {
            try {
                return run_zoo(zoo_name, zoo_params, zoo_seed);
            } catch (const ParameterOutOfRange& e) {
                std::cerr << "error: " << e.what() << "\n" << zoo_usage();
                return 2;
            }
        }
        std::cerr << "error: no command given\n";
        return 2;
    } catch (const SpecParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParameterOutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotUnitary& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DimensionMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotCp& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
}

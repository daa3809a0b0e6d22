// tracehom: homology of partial trace monoid actions and CE nets.
//
// Exit codes: 0 success, 1 verify mismatch, 2 parse or usage error,
// 3 commutation violation, 4 size cap exceeded, 5 cyclic system (verify).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "tracehom/tracehom.hpp"

namespace {

namespace th = tracehom;

enum Exit : int {
    ok = 0,
    mismatch = 1,
    parse_error = 2,
    validation_failure = 3,
    cap_exceeded = 4,
    cyclic = 5,
};

struct CommonArgs {
    std::string input;
    std::string kind;
    std::optional<std::size_t> max_dim;
    bool all_states = false;
    bool json = false;
};

std::optional<th::InputKind> kind_of(const CommonArgs& a) {
    if (a.kind.empty())
        return std::nullopt;
    return th::input_kind_from_string(a.kind);
}

th::AnalysisOptions options_of(const CommonArgs& a) {
    th::AnalysisOptions o;
    o.max_dim = a.max_dim;
    o.all_states = a.all_states;
    return o;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw th::Error("cannot write " + path.string());
    out << text;
}

void dump_matrices(const th::PreparedSystem& p, const th::GradedComplex& c,
                   const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    for (std::size_t n = 1; n < c.differentials.size(); ++n) {
        const std::string stem = "d_" + std::to_string(n);
        write_file(dir / (stem + ".txt"), th::differential_to_text(p.system, c, n));
        write_file(dir / (stem + ".json"), th::differential_to_json(p.system, c, n).dump(2) + "\n");
    }
}

int run_analyze(const CommonArgs& a, const std::string& dump_dir) {
    const auto opts = options_of(a);
    const auto prepared = th::prepare_file(a.input, kind_of(a), opts);
    const auto result = th::analyze(prepared, opts);
    if (!dump_dir.empty())
        dump_matrices(prepared, result.complex, dump_dir);
    if (a.json)
        std::cout << th::to_json(result.report).dump(2) << "\n";
    else
        std::cout << th::render_text(result.report);
    return ok;
}

int run_verify(const CommonArgs& a) {
    const auto opts = options_of(a);
    const auto prepared = th::prepare_file(a.input, kind_of(a), opts);
    const auto v = th::verify(prepared, opts);
    if (a.json)
        std::cout << th::to_json(v).dump(2) << "\n";
    else
        std::cout << th::render_text(v);
    return v.match() ? ok : mismatch;
}

int run_reach(const CommonArgs& a, const std::string& from) {
    const auto doc = th::load_json_file(a.input);
    const auto kind = kind_of(a) ? *kind_of(a) : th::detect_kind(doc);
    th::PartialActionSystem sys;
    th::StateIndex start = 0;
    if (kind == th::InputKind::net) {
        if (!from.empty())
            throw th::ParseError("--from", "not supported for nets; the initial marking is used");
        sys = th::compile(th::parse_net(doc));
        start = *sys.initial();
    } else {
        sys = th::parse_action(doc);
        if (!from.empty()) {
            auto s = sys.state_index(from);
            if (!s)
                throw th::ParseError("--from", "unknown state '" + from + "'");
            start = *s;
        } else if (sys.initial()) {
            start = *sys.initial();
        } else {
            throw th::ParseError("", "no initial state in the file; pass --from STATE");
        }
    }
    const auto reach = th::reachable_states(sys, start);
    if (a.json) {
        th::json doc;
        doc["from"] = sys.state_name(start);
        doc["count"] = reach.size();
        doc["states"] = th::json::array();
        for (auto x : reach)
            doc["states"].push_back(sys.state_name(x));
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << reach.size() << " state(s) reachable from " << sys.state_name(start) << "\n";
        for (auto x : reach)
            std::cout << "  " << sys.state_name(x) << "\n";
    }
    return ok;
}

int run_snf(const std::string& path, bool as_json) {
    const auto m = th::parse_matrix(th::read_file(path));
    const auto snf = th::smith_normal_form(m);
    if (as_json) {
        th::json doc;
        doc["rows"] = m.rows();
        doc["cols"] = m.cols();
        doc["rank"] = snf.rank;
        doc["divisors"] = th::json::array();
        for (const auto& d : snf.divisors)
            doc["divisors"].push_back(th::integer_to_json(d));
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "rank: " << snf.rank << "\ndivisors:";
        for (const auto& d : snf.divisors)
            std::cout << ' ' << d;
        std::cout << "\n";
    }
    return ok;
}

void add_common(CLI::App* cmd, CommonArgs& a, bool with_analysis_flags) {
    cmd->add_option("input", a.input, "action or net file (JSON)")->required();
    cmd->add_option("--kind", a.kind, "input kind; inferred from the fields by default")
        ->check(CLI::IsMember({"net", "action"}));
    cmd->add_flag("--json", a.json, "machine-readable output");
    if (with_analysis_flags) {
        cmd->add_option("--max-dim", a.max_dim, "highest homology degree to report");
        cmd->add_flag("--all-states", a.all_states,
                      "analyse all states (all markings for nets) instead of the reachable ones");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Integral homology of partial trace monoid actions and CE nets"};
    app.require_subcommand(1);

    CommonArgs analyze_args, verify_args, reach_args;
    std::string dump_dir, from, snf_path;
    bool snf_json = false;

    auto* analyze = app.add_subcommand("analyze", "compute homology groups");
    add_common(analyze, analyze_args, true);
    analyze->add_option("--dump-matrices", dump_dir, "write d_n as text and JSON into DIR");

    auto* verify = app.add_subcommand("verify", "compare against the brute-force nerve homology");
    add_common(verify, verify_args, true);

    auto* reach = app.add_subcommand("reach", "list reachable states");
    add_common(reach, reach_args, false);
    reach->add_option("--from", from, "start state (action files)");

    auto* snf = app.add_subcommand("snf", "Smith normal form of a triplet matrix file");
    snf->add_option("input", snf_path, "matrix file (JSON triplets or 'r c v' text)")->required();
    snf->add_flag("--json", snf_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return parse_error;
    }

    try {
        if (*analyze)
            return run_analyze(analyze_args, dump_dir);
        if (*verify)
            return run_verify(verify_args);
        if (*reach)
            return run_reach(reach_args, from);
        return run_snf(snf_path, snf_json);
    } catch (const th::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return parse_error;
    } catch (const th::ValidationError& e) {
        std::cerr << "validation failed: " << e.what() << "\n";
        return validation_failure;
    } catch (const th::CapExceeded& e) {
        std::cerr << "limit exceeded: " << e.what() << "\n";
        return cap_exceeded;
    } catch (const th::CyclicSystem& e) {
        std::cerr << "cyclic system: " << e.what() << "\n";
        return cyclic;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return parse_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 70;
    }
}

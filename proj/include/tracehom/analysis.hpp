// End-to-end pipeline: input document -> sound partial action -> scope ->
// chain complex -> Smith forms -> homology, plus the machine-readable report.

#ifndef TRACEHOM_ANALYSIS_HPP
#define TRACEHOM_ANALYSIS_HPP

#include <chrono>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tracehom/action.hpp"
#include "tracehom/cenet.hpp"
#include "tracehom/complex.hpp"
#include "tracehom/io.hpp"
#include "tracehom/oracle.hpp"

namespace tracehom {

struct AnalysisOptions {
    std::optional<std::size_t> max_dim;
    // Analyse every state (every marking for nets) instead of the states
    // reachable from the initial one.
    bool all_states = false;
    CompileOptions compile;
};

/// A validated system together with the states the analysis runs over.
struct PreparedSystem {
    InputKind kind = InputKind::action;
    PartialActionSystem system;
    std::vector<StateIndex> scope;
};

/// Parses, compiles (nets) or validates (action files), and fixes the scope.
inline PreparedSystem prepare(const json& doc, std::optional<InputKind> kind,
                              const AnalysisOptions& opts = {}) {
    PreparedSystem out;
    out.kind = kind ? *kind : detect_kind(doc);
    if (out.kind == InputKind::net) {
        CompileOptions copts = opts.compile;
        copts.all_markings = opts.all_states;
        out.system = compile(parse_net(doc), copts);
        out.scope = all_states(out.system);
        return out;
    }
    out.system = parse_action(doc);
    require_valid(out.system);
    if (out.system.initial() && !opts.all_states)
        out.scope = reachable_states(out.system, *out.system.initial());
    else
        out.scope = all_states(out.system);
    return out;
}

inline PreparedSystem prepare_file(const std::string& path, std::optional<InputKind> kind,
                                   const AnalysisOptions& opts = {}) {
    return prepare(load_json_file(path), kind, opts);
}

/// Field list is frozen: kind, scope_size, basis_sizes, ranks, homology,
/// euler_characteristic, elapsed_ms.
///
/// basis_sizes[n] = |Q_n| and homology[n] = H_n for the reported degrees
/// n = 0..D; ranks[n] = rank d_n for n = 0..D+1, so that
/// free_rank(H_n) = basis_sizes[n] - ranks[n] - ranks[n+1].
struct AnalysisReport {
    InputKind kind = InputKind::action;
    std::size_t scope_size = 0;
    std::vector<std::size_t> basis_sizes;
    std::vector<std::size_t> ranks;
    std::vector<HomologyGroup> homology;
    long long euler_characteristic = 0;
    double elapsed_ms = 0.0;

    bool operator==(const AnalysisReport&) const = default;
};

struct Analysis {
    GradedComplex complex;
    AnalysisReport report;
};

inline Analysis analyze(const PreparedSystem& prepared, const AnalysisOptions& opts = {}) {
    const auto start = std::chrono::steady_clock::now();
    Analysis out;
    // One extra degree so that d_{N+1} is known for the last reported H_N.
    std::optional<std::size_t> build_to;
    if (opts.max_dim)
        build_to = *opts.max_dim + 1;
    out.complex = build_complex(prepared.system, prepared.scope, build_to);
    const ComplexInvariants inv = compute_invariants(out.complex);

    auto& r = out.report;
    r.kind = prepared.kind;
    r.scope_size = prepared.scope.size();
    r.homology = inv.homology;
    if (opts.max_dim)
        r.homology.resize(*opts.max_dim + 1);
    const std::size_t degrees = r.homology.size();
    for (std::size_t n = 0; n < degrees; ++n)
        r.basis_sizes.push_back(out.complex.size(n));
    for (std::size_t n = 0; n <= degrees; ++n)
        r.ranks.push_back(n < inv.smith.size() ? inv.smith[n].rank : 0);
    for (std::size_t n = 0; n < degrees; ++n) {
        const auto s = static_cast<long long>(r.basis_sizes[n]);
        r.euler_characteristic += (n % 2 == 0) ? s : -s;
    }
    r.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return out;
}

inline json to_json(const HomologyGroup& h, std::size_t degree) {
    json torsion = json::array();
    for (const auto& t : h.torsion)
        torsion.push_back(integer_to_json(t));
    return {{"degree", degree}, {"free_rank", h.free_rank}, {"torsion", torsion},
            {"group", to_string(h)}};
}

inline json to_json(const AnalysisReport& r) {
    json doc;
    doc["kind"] = to_string(r.kind);
    doc["scope_size"] = r.scope_size;
    doc["basis_sizes"] = r.basis_sizes;
    doc["ranks"] = r.ranks;
    doc["homology"] = json::array();
    for (std::size_t n = 0; n < r.homology.size(); ++n)
        doc["homology"].push_back(to_json(r.homology[n], n));
    doc["euler_characteristic"] = r.euler_characteristic;
    doc["elapsed_ms"] = r.elapsed_ms;
    return doc;
}

inline AnalysisReport report_from_json(const json& doc) {
    AnalysisReport r;
    try {
        r.kind = input_kind_from_string(doc.at("kind").get<std::string>());
        r.scope_size = doc.at("scope_size").get<std::size_t>();
        r.basis_sizes = doc.at("basis_sizes").get<std::vector<std::size_t>>();
        r.ranks = doc.at("ranks").get<std::vector<std::size_t>>();
        const auto& hs = doc.at("homology");
        for (std::size_t n = 0; n < hs.size(); ++n) {
            const std::string where = "/homology/" + std::to_string(n);
            if (hs[n].at("degree").get<std::size_t>() != n)
                throw ParseError(where, "degrees must be listed in order from 0");
            HomologyGroup h;
            h.free_rank = hs[n].at("free_rank").get<std::size_t>();
            const auto& tor = hs[n].at("torsion");
            for (std::size_t k = 0; k < tor.size(); ++k)
                h.torsion.push_back(integer_from_json(tor[k], where + "/torsion/" + std::to_string(k)));
            r.homology.push_back(std::move(h));
        }
        r.euler_characteristic = doc.at("euler_characteristic").get<long long>();
        r.elapsed_ms = doc.at("elapsed_ms").get<double>();
    } catch (const json::exception& e) {
        throw ParseError("", std::string("malformed report: ") + e.what());
    }
    return r;
}

inline std::string render_text(const AnalysisReport& r) {
    std::ostringstream out;
    out << "input: " << to_string(r.kind) << "\n";
    out << "scope: " << r.scope_size << " states\n";
    out << std::left << std::setw(8) << "degree" << std::setw(10) << "|Q_n|" << std::setw(11)
        << "rank d_n" << "H_n\n";
    for (std::size_t n = 0; n < r.homology.size(); ++n)
        out << std::left << std::setw(8) << n << std::setw(10) << r.basis_sizes[n]
            << std::setw(11) << r.ranks[n] << to_string(r.homology[n]) << "\n";
    out << "euler characteristic: " << r.euler_characteristic << "\n";
    out << "elapsed: " << std::fixed << std::setprecision(3) << r.elapsed_ms << " ms\n";
    return out.str();
}

struct VerifyReport {
    std::vector<HomologyGroup> pipeline;
    std::vector<HomologyGroup> oracle;

    bool match() const { return pipeline == oracle; }
};

/// Runs the Q_n pipeline and the nerve oracle over the same scope; both
/// sequences are padded with trivial groups to a common length.
inline VerifyReport verify(const PreparedSystem& prepared, const AnalysisOptions& opts = {},
                           const OracleLimits& limits = {}) {
    VerifyReport out;
    out.oracle = nerve_homology(prepared.system, prepared.scope, opts.max_dim, limits);
    out.pipeline = analyze(prepared, opts).report.homology;
    const std::size_t n = std::max(out.pipeline.size(), out.oracle.size());
    out.pipeline.resize(n);
    out.oracle.resize(n);
    return out;
}

inline json to_json(const VerifyReport& v) {
    json doc;
    doc["match"] = v.match();
    doc["degrees"] = json::array();
    for (std::size_t n = 0; n < v.pipeline.size(); ++n)
        doc["degrees"].push_back({{"degree", n},
                                  {"pipeline", to_string(v.pipeline[n])},
                                  {"oracle", to_string(v.oracle[n])},
                                  {"match", v.pipeline[n] == v.oracle[n]}});
    return doc;
}

inline std::string render_text(const VerifyReport& v) {
    std::ostringstream out;
    out << std::left << std::setw(8) << "degree" << std::setw(16) << "pipeline" << std::setw(16)
        << "nerve" << "\n";
    for (std::size_t n = 0; n < v.pipeline.size(); ++n) {
        const bool ok = v.pipeline[n] == v.oracle[n];
        out << std::left << std::setw(8) << n << std::setw(16) << to_string(v.pipeline[n])
            << std::setw(16) << to_string(v.oracle[n]) << (ok ? "MATCH" : "MISMATCH") << "\n";
    }
    out << (v.match() ? "MATCH" : "MISMATCH") << "\n";
    return out.str();
}

}  // namespace tracehom

#endif  // TRACEHOM_ANALYSIS_HPP

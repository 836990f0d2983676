#include "l2alex/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "json.hpp"

#include "l2alex/catalog.hpp"
#include "l2alex/detector.hpp"
#include "l2alex/errors.hpp"
#include "l2alex/fk_det.hpp"
#include "l2alex/invariant_expr.hpp"
#include "l2alex/knot_spec.hpp"

namespace l2alex {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string read_source(const std::string& src) {
    // Inline JSON object, otherwise a file path.
    if (!src.empty() && (src.front() == '{' || src.front() == '[')) return src;
    std::ifstream in(src);
    if (!in) throw parse_error("cannot open file '" + src + "'", 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<double> parse_double_list(const std::string& text, const char* what) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                      : comma - pos);
        if (!tok.empty()) {
            try {
                out.push_back(std::stod(tok));
            } catch (const std::exception&) {
                throw parse_error(std::string("bad ") + what + " value '" + tok + "'", pos);
            }
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw parse_error(std::string("empty ") + what + " list", 0);
    return out;
}

struct OutputTarget {
    std::ostream& fallback;
    std::ofstream file;
    explicit OutputTarget(std::ostream& os) : fallback(os) {}
    std::ostream& stream() { return file.is_open() ? file : fallback; }
    void open(const std::string& path) {
        file.open(path);
        if (!file) throw validation_error("cannot open output file '" + path + "'");
    }
};

struct ComputeRow {
    double t = 0.0;
    std::optional<double> estimate;
    std::optional<double> epsilon;  // nullopt marks the ladder extrapolation
    int terms = 0;
    double pruned_mass = 0.0;
    bool converged = false;
};

void write_compute_csv(std::ostream& os, const std::string& knot, const std::string& mode,
                       const std::vector<ComputeRow>& rows,
                       const std::optional<InvariantSummary>& summary) {
    os << "# schema: l2alex/1\n";
    os << "# command: compute\n";
    os << "# knot: " << knot << "\n";
    os << "# mode: " << mode << "\n";
    if (summary) os << "# summary: " << summary->to_json().dump() << "\n";
    os << "# empty epsilon marks the ladder extrapolation (numeric mode)\n";
    os << "t,estimate,epsilon,terms,pruned_mass_bound,converged\n";
    for (const auto& r : rows) {
        os << fmt(r.t) << ',' << (r.estimate ? fmt(*r.estimate) : "") << ','
           << (r.epsilon ? fmt(*r.epsilon) : "") << ',' << r.terms << ','
           << fmt(r.pruned_mass) << ',' << (r.converged ? "true" : "false") << '\n';
    }
}

void write_compute_json(std::ostream& os, const std::string& knot, const std::string& mode,
                        const std::vector<ComputeRow>& rows,
                        const std::optional<InvariantSummary>& summary) {
    nlohmann::json rowsJson = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json jr;
        jr["t"] = r.t;
        jr["estimate"] = r.estimate ? nlohmann::json(*r.estimate) : nlohmann::json(nullptr);
        jr["epsilon"] = r.epsilon ? nlohmann::json(*r.epsilon) : nlohmann::json(nullptr);
        jr["terms"] = r.terms;
        jr["pruned_mass_bound"] = r.pruned_mass;
        jr["converged"] = r.converged;
        rowsJson.push_back(std::move(jr));
    }
    nlohmann::json j{{"schema", "l2alex/1"},
                     {"command", "compute"},
                     {"knot", knot},
                     {"mode", mode},
                     {"rows", rowsJson}};
    if (summary) j["summary"] = summary->to_json();
    os << j.dump(2) << '\n';
}

// Resolves a knot spec to an oracle-backed presentation when one exists.
std::optional<GroupPresentation> oracle_presentation(const KnotSpec& spec) {
    switch (spec.kind()) {
        case KnotSpec::Kind::catalog: {
            const std::string& name = spec.name();
            if (name == "unknot") return unknot_presentation();
            if (name == "4_1") return catalog_presentation("4_1");
            return std::nullopt;
        }
        case KnotSpec::Kind::fibered:
            return fibered_presentation(spec.genus_hint(), spec.monodromy());
        default:
            return std::nullopt;
    }
}

int cmd_compute(const std::string& knotSrc, const std::string& tList,
                const std::string& epsList, int terms, double prune,
                const std::string& format, OutputTarget& target) {
    KnotSpec spec = KnotSpec::parse(knotSrc);

    if (spec.kind() == KnotSpec::Kind::braid)
        throw unsupported_oracle_error(
            "no word-problem oracle exists for a general braid closure; "
            "numeric evaluation supports the trivial knot, fibered presentations "
            "and composite trees over catalog leaves");

    DeltaParams params;
    params.eps_ladder = parse_double_list(epsList, "epsilon");
    for (double e : params.eps_ladder)
        if (e <= 0.0) throw numeric_error("epsilon must be positive");
    params.n_terms = terms;
    params.prune = prune;
    if (params.n_terms < 1) throw numeric_error("terms must be at least 1");
    if (params.prune < 0.0) throw numeric_error("prune must be nonnegative");

    std::vector<double> ts = parse_double_list(tList, "t");
    for (double t : ts)
        if (t <= 0.0) throw numeric_error("t samples must be positive");

    std::vector<ComputeRow> rows;
    std::optional<InvariantSummary> summary;
    std::string mode;

    if (auto pres = oracle_presentation(spec)) {
        mode = "numeric";
        std::vector<DeltaResult> results(ts.size());
        std::exception_ptr firstError;
        // Samples are independent; rows are emitted in input order below.
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (ts.size() > 1)
#endif
        for (int i = 0; i < static_cast<int>(ts.size()); ++i) {
            try {
                results[i] = delta_at(*pres, ts[i], params);
            } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
                if (!firstError) firstError = std::current_exception();
            }
        }
        if (firstError) std::rethrow_exception(firstError);
        for (std::size_t i = 0; i < ts.size(); ++i) {
            const DeltaResult& dr = results[i];
            const double norm = std::pow(std::max(1.0, dr.t),
                                         static_cast<double>(dr.norm_exponent));
            bool allConverged = true;
            for (const DetApproxResult& lad : dr.ladder) {
                rows.push_back({dr.t, lad.estimate / norm, lad.epsilon, lad.terms,
                                lad.pruned_mass_bound, lad.converged});
                allConverged = allConverged && lad.converged;
            }
            rows.push_back({dr.t, dr.value, std::nullopt, params.n_terms, 0.0, allConverged});
        }
    } else {
        mode = "symbolic";
        InvariantExpr expr = [&] {
            try {
                return expr_of(spec);
            } catch (const validation_error& e) {
                throw unsupported_oracle_error(e.what());
            }
        }();
        summary = summarize(expr);
        for (double t : ts) {
            auto v = eval_expr(expr, t);
            ComputeRow row;
            row.t = t;
            if (v) row.estimate = v->value;
            row.converged = v && v->exact;
            rows.push_back(row);
        }
    }

    if (format == "json")
        write_compute_json(target.stream(), spec.display(), mode, rows, summary);
    else
        write_compute_csv(target.stream(), spec.display(), mode, rows, summary);
    return 0;
}

int cmd_detect(const std::string& summarySrc, const std::string& format,
               OutputTarget& target) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_source(summarySrc));
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("summary is not valid JSON: ") + e.what(),
                          static_cast<std::size_t>(e.byte));
    }
    InvariantSummary s = InvariantSummary::from_json(j);
    DetectionResult res = detect(s);
    if (format == "json") {
        nlohmann::json out = res.to_json();
        out["schema"] = "l2alex/1";
        out["command"] = "detect";
        target.stream() << out.dump(2) << '\n';
    } else {
        target.stream() << res.display() << '\n';
    }
    return 0;
}

int cmd_audit(int nMax, const std::string& format, OutputTarget& target) {
    FamilyAuditReport report = family_audit(nMax);
    if (format == "json")
        target.stream() << report.to_json().dump(2) << '\n';
    else
        target.stream() << report.text_table();
    return 0;
}

int cmd_catalog(const std::string& name, const std::string& format, OutputTarget& target) {
    CatalogEntry e = catalog(name);
    if (format == "json") {
        nlohmann::json j{{"schema", "l2alex/1"},
                         {"command", "catalog"},
                         {"name", e.name},
                         {"genus", e.genus},
                         {"volume", e.volume},
                         {"fibered", e.fibered},
                         {"exp_vol_over_6pi", e.exp_vol_over_6pi},
                         {"notes", e.notes}};
        j["leading_C"] = e.leading_C ? nlohmann::json(*e.leading_C) : nlohmann::json(nullptr);
        j["dilatation"] =
            e.dilatation ? nlohmann::json(*e.dilatation) : nlohmann::json(nullptr);
        j["has_monodromy"] = e.monodromy.has_value();
        target.stream() << j.dump(2) << '\n';
    } else {
        auto& os = target.stream();
        os << "name:             " << e.name << '\n';
        os << "genus:            " << e.genus << '\n';
        os << "volume:           " << fmt(e.volume) << '\n';
        os << "fibered:          " << (e.fibered ? "yes" : "no") << '\n';
        os << "exp(vol/6pi):     " << fmt(e.exp_vol_over_6pi) << '\n';
        if (e.leading_C) os << "leading C:        " << fmt(*e.leading_C) << '\n';
        if (e.dilatation) os << "dilatation bound: " << fmt(*e.dilatation) << '\n';
        if (e.monodromy) os << "monodromy:        stored, validation gate passed\n";
        os << "notes:            " << e.notes << '\n';
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Desk-scale approximations and detection procedures for the "
                 "L2-Alexander invariant of knots"};
    app.require_subcommand(1);

    std::string knotSrc, summarySrc, tList = "1", epsList = "1e-1,1e-2,1e-3";
    std::string outPath, format = "csv", catalogName;
    int terms = 32, nMax = 10, threads = 0;
    double prune = 1e-12;

    auto* compute = app.add_subcommand("compute", "evaluate the invariant over t samples");
    compute->add_option("--knot", knotSrc,
                        "catalog:<name> | braid:<word> | inline JSON | file path")
        ->required();
    compute->add_option("--t", tList, "comma-separated t samples (default 1)");
    compute->add_option("--eps", epsList, "epsilon ladder (default 1e-1,1e-2,1e-3)");
    compute->add_option("--terms", terms, "series order (default 32)");
    compute->add_option("--prune", prune, "pruning threshold (default 1e-12)");

    auto* detectCmd = app.add_subcommand("detect", "run the detection ladder on a summary");
    detectCmd->add_option("--summary", summarySrc, "inline JSON or file path")->required();

    auto* audit = app.add_subcommand("audit", "audit the J_n / K_n families");
    audit->add_option("--n", nMax, "largest family index (default 10)");

    auto* catalogCmd = app.add_subcommand("catalog", "print a catalog entry");
    catalogCmd->add_option("--name", catalogName, "catalog entry name")->required();

    for (auto* sub : {compute, detectCmd, audit, catalogCmd}) {
        sub->add_option("--out", outPath, "output file (default stdout)");
        sub->add_option("--format", format, "csv | json (default csv)");
        sub->add_option("--threads", threads, "OpenMP thread count (or L2ALEX_THREADS)");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends.
            out << app.help() << std::flush;
            return 0;
        }
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (threads == 0) {
            if (const char* envThreads = std::getenv("L2ALEX_THREADS"))
                threads = std::atoi(envThreads);
        }
#ifdef _OPENMP
        if (threads > 0) omp_set_num_threads(threads);
#endif
        if (format != "csv" && format != "json")
            throw parse_error("format must be csv or json", 0);

        OutputTarget target(out);
        if (!outPath.empty()) target.open(outPath);

        if (compute->parsed())
            return cmd_compute(knotSrc, tList, epsList, terms, prune, format, target);
        if (detectCmd->parsed()) return cmd_detect(summarySrc, format, target);
        if (audit->parsed()) return cmd_audit(nMax, format, target);
        if (catalogCmd->parsed()) return cmd_catalog(catalogName, format, target);
        err << "error: no subcommand\n";
        return 2;
    } catch (const unsupported_oracle_error& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const numeric_error& e) {
        err << "error: " << e.what() << '\n';
        return 4;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace l2alex

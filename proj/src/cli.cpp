#include "casforest/cli.hpp"

#include <cstdio>
#include <fstream>
#include <memory>
#include <span>
#include <vector>

#include "CLI11.hpp"
#include "casforest/engine.hpp"
#include "casforest/error.hpp"
#include "casforest/fasta.hpp"
#include "casforest/forest.hpp"
#include "casforest/forest_io.hpp"
#include "casforest/neighborhood.hpp"
#include "casforest/oracle.hpp"
#include "casforest/perf.hpp"

namespace casforest::cli {

namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw CasError("cannot open \"" + path + "\" for reading");
    }
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw CasError("cannot open \"" + path + "\" for writing");
    }
    return out;
}

struct BuildArgs {
    std::string fasta;
    int m = 0;
    int d = 0;
    int n = 0;
    std::string orientation = "motif-reversed";
    std::string out_path;
};

void cmd_build(const BuildArgs& args, bool has_n, std::ostream& err) {
    std::ifstream in = open_input(args.fasta);
    std::vector<Sequence> records = parse_fasta(in);
    if (records.empty()) {
        throw CasError("FASTA file \"" + args.fasta + "\" has no records");
    }
    SearchConfig config{args.m, args.d, has_n ? args.n : static_cast<int>(records.size())};
    config.validate();
    Forest forest = build_forest(records[0], config, parse_orientation(args.orientation));
    save_forest_file(args.out_path, forest);
    NodeCounts counts = node_counts(forest);
    err << "forest: processing_nodes=" << counts.processing << " exit_nodes=" << counts.exits
        << " generator_leaf_bound="
        << ball_size(config.m, config.d, static_cast<int>(forest.alphabet.size())) << '\n';
}

struct RunArgs {
    std::string forest_path;
    std::string queries_path;
    std::string report_path;  // empty = stdout
    std::string trace_path;   // empty = no trace
};

void write_report(std::ostream& os, const CasReport& report) {
    os << "# motif\tstring_bits\tpotential_count\tverified\n";
    std::size_t verified = 0;
    for (const CasReportEntry& e : report.entries) {
        verified += e.verified ? 1 : 0;
        os << e.motif << '\t' << e.strings.to_hex() << '\t' << e.strings.count() << '\t'
           << (e.verified ? 1 : 0) << '\n';
    }
    os << "# verified " << verified << " of " << report.entries.size() << " exits\n";
}

void cmd_run(const RunArgs& args, std::ostream& out) {
    Forest forest = load_forest_file(args.forest_path);
    std::ifstream qin = open_input(args.queries_path);
    std::vector<Sequence> records = parse_fasta(qin, forest.alphabet);
    const std::size_t n = static_cast<std::size_t>(forest.config.n);
    std::span<const Sequence> queries(records);
    if (records.size() == n) {
        queries = queries.subspan(1);  // record 1 is the database string
    } else if (records.size() != n - 1) {
        throw CasError("query file has " + std::to_string(records.size()) +
                       " records; expected " + std::to_string(n) + " (database first) or " +
                       std::to_string(n - 1) + " (queries only) for n = " + std::to_string(n));
    }
    std::ofstream trace_file;
    std::ostream* trace_stream = nullptr;
    if (!args.trace_path.empty()) {
        trace_file = open_output(args.trace_path);
        trace_stream = &trace_file;
    }
    CasReport report = run_all(forest, queries, trace_stream);
    if (args.report_path.empty()) {
        write_report(out, report);
    } else {
        std::ofstream report_file = open_output(args.report_path);
        write_report(report_file, report);
    }
}

struct OracleArgs {
    std::string fasta;
    int m = 0;
    int d = 0;
};

void cmd_oracle(const OracleArgs& args, std::ostream& out) {
    std::ifstream in = open_input(args.fasta);
    CasInstance instance;
    instance.strings = parse_fasta(in);
    if (instance.strings.empty()) {
        throw CasError("FASTA file \"" + args.fasta + "\" has no records");
    }
    instance.config = SearchConfig{args.m, args.d, static_cast<int>(instance.strings.size())};
    for (const Motif& motif : oracle_cas(instance)) {
        out << motif << '\n';
    }
}

struct EstimateArgs {
    std::string forest_path;
    long long device_clbs = 0;
    long long l = 0;
};

std::string format_seconds(double s) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6e", s);
    return buf;
}

std::string format_utilization(const Feasibility& f) {
    char buf[64];
    if (f.feasible) {
        std::snprintf(buf, sizeof buf, "%.1f%%", f.utilization * 100.0);
    } else {
        std::snprintf(buf, sizeof buf, "%.2fx", f.utilization);
    }
    return buf;
}

void cmd_estimate(const EstimateArgs& args, bool has_device, bool has_l, std::ostream& out) {
    Forest forest = load_forest_file(args.forest_path);
    NodeCounts counts = node_counts(forest);
    ResourceProfile profile;
    ClbEstimate est = estimate_clbs(counts, profile);
    out << "clbs: processing=" << est.processing_clbs << " exit=" << est.exit_clbs
        << " total=" << est.total() << '\n';
    ClbEstimate reference = estimate_clbs(NodeCounts{21, 10}, profile);
    out << "# calibration: the linear model gives " << reference.total()
        << " CLBs for the reference build measured at " << kMeasuredReferenceForestClbs
        << " CLBs; synthesis shares logic the model does not see\n";
    if (has_device) {
        Feasibility f = feasibility(counts, args.device_clbs, profile);
        out << "feasibility: device_clbs=" << f.device_clbs
            << " feasible=" << (f.feasible ? "yes" : "no")
            << " utilization=" << format_utilization(f) << '\n';
    }
    if (has_l) {
        const int m = forest.config.m;
        out << "latency: l=" << args.l << " ticks=" << (2 * args.l + m) << " processing_clock="
            << format_seconds(estimate_latency(args.l, m, profile.clock_processing_hz))
            << "s exit_clock="
            << format_seconds(estimate_latency(args.l, m, profile.clock_exit_hz))
            << "s divided_clock="
            << format_seconds(estimate_latency(args.l, m, profile.clock_divided_hz)) << "s\n";
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"systolic-forest toolkit for common approximate substring search"};
    app.name("casforest");
    app.require_subcommand(1);

    auto build_args = std::make_shared<BuildArgs>();
    CLI::App* build = app.add_subcommand("build", "build a forest file from FASTA input");
    build->add_option("--fasta", build_args->fasta, "FASTA input; record 1 is the database string")
        ->required();
    build->add_option("--m", build_args->m, "motif length")->required();
    build->add_option("--d", build_args->d, "allowed substitutions")->required();
    CLI::Option* build_n = build->add_option(
        "--n", build_args->n, "string count; inferred from the record count when omitted");
    build
        ->add_option("--orientation", build_args->orientation,
                     "path orientation: motif-reversed or paper-literal")
        ->capture_default_str();
    build->add_option("--out", build_args->out_path, "forest file to write")->required();
    build->callback([build_args, build_n, &err] { cmd_build(*build_args, build_n->count() > 0, err); });

    auto run_args = std::make_shared<RunArgs>();
    CLI::App* runcmd = app.add_subcommand("run", "stream queries through a forest and report");
    runcmd->add_option("--forest", run_args->forest_path, "forest file from build")->required();
    runcmd
        ->add_option("--queries", run_args->queries_path,
                     "FASTA with n records (database first) or n - 1 queries")
        ->required();
    runcmd->add_option("--report", run_args->report_path,
                       "report file; standard output when omitted");
    runcmd->add_option("--trace", run_args->trace_path, "tick-by-tick trace file");
    runcmd->callback([run_args, &out] { cmd_run(*run_args, out); });

    auto oracle_args = std::make_shared<OracleArgs>();
    CLI::App* oracle = app.add_subcommand("oracle", "solve an instance by direct enumeration");
    oracle->add_option("--fasta", oracle_args->fasta, "FASTA with all n strings, database first")
        ->required();
    oracle->add_option("--m", oracle_args->m, "motif length")->required();
    oracle->add_option("--d", oracle_args->d, "allowed substitutions")->required();
    oracle->callback([oracle_args, &out] { cmd_oracle(*oracle_args, out); });

    auto est_args = std::make_shared<EstimateArgs>();
    CLI::App* estimate = app.add_subcommand("estimate", "area and latency model for a forest");
    estimate->add_option("--forest", est_args->forest_path, "forest file from build")->required();
    CLI::Option* est_device =
        estimate->add_option("--device-clbs", est_args->device_clbs, "device CLB capacity");
    CLI::Option* est_l =
        estimate->add_option("--l", est_args->l, "query length for the latency lines");
    estimate->callback([est_args, est_device, est_l, &out] {
        cmd_estimate(*est_args, est_device->count() > 0, est_l->count() > 0, out);
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const CasError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace casforest::cli

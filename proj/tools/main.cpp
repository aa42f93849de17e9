#include <algorithm>
#include <chrono>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>

#include "CLI11.hpp"

#include "fdscan/discovery.hpp"
#include "fdscan/oracle.hpp"
#include "fdscan/relation.hpp"
#include "fdscan/report.hpp"
#include "fdscan/verify.hpp"
#include "fdscan/version.hpp"

namespace {

constexpr int k_exit_ok = 0;
constexpr int k_exit_usage = 2;
constexpr int k_exit_verify = 3;

struct Options {
    std::string input;
    std::string expression;  // check only
    std::string delimiter = ",";
    bool no_header = false;
    bool trim = true;
    bool fold_case = false;
    std::string output = "text";
    std::size_t max_lhs = 3;  // 0 = unbounded
    bool verify = false;
    bool with_keys = false;  // discover only
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
};

char parse_delimiter(const std::string& text) {
    if (text == "\\t") return '\t';
    if (text.size() != 1)
        throw std::invalid_argument("delimiter must be a single character (or \\t)");
    return text.front();
}

fdscan::IngestOptions ingest_options(const Options& opt) {
    fdscan::IngestOptions ingest;
    ingest.delimiter = parse_delimiter(opt.delimiter);
    ingest.has_header = !opt.no_header;
    ingest.trim = opt.trim;
    ingest.fold_case = opt.fold_case;
    return ingest;
}

void add_common_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("input", opt.input, "delimited text file")->required();
    cmd->add_option("-d,--delimiter", opt.delimiter, "field delimiter (default ',', \\t for tab)");
    cmd->add_flag("--no-header", opt.no_header,
                  "first line is data; columns are named A1..An");
    cmd->add_flag("--trim,!--no-trim", opt.trim, "strip whitespace around fields (default on)");
    cmd->add_flag("--fold-case", opt.fold_case, "lowercase values before comparing");
    cmd->add_option("-o,--output", opt.output, "report format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("--verify", opt.verify, "cross-check results against the brute-force oracle");
    cmd->add_option("--threads", opt.threads, "worker threads (default: hardware parallelism)");
}

int run(const std::string& command, const Options& opt) {
    const auto started = std::chrono::steady_clock::now();
    const fdscan::Relation relation = fdscan::load_table(opt.input, ingest_options(opt));
    const std::size_t n = relation.column_count();

    const auto warn_key_completeness = [](bool complete) {
        if (!complete)
            std::cerr << "fdscan: key completeness not verified (table wider than "
                      << fdscan::oracle::k_max_columns << " columns)\n";
    };

    fdscan::RunReport report;
    if (command == "matrix") {
        const fdscan::DependencyMatrix matrix = fdscan::pairwise_matrix(relation, opt.threads);
        if (opt.verify) fdscan::verify::matrix(relation, matrix);
        report = fdscan::make_matrix_report(relation, opt.input, matrix);
    } else if (command == "discover") {
        const std::size_t max_lhs = opt.max_lhs == 0 ? (n > 1 ? n - 1 : 1) : opt.max_lhs;
        const auto fds = fdscan::minimal_fds(relation, max_lhs, opt.threads);
        std::optional<std::vector<fdscan::AttributeSet>> keys;
        if (opt.with_keys) keys = fdscan::candidate_keys(relation, max_lhs, opt.threads);
        if (opt.verify) {
            fdscan::verify::minimal_fds(relation, fds, max_lhs);
            if (keys) warn_key_completeness(fdscan::verify::candidate_keys(relation, *keys, max_lhs));
        }
        report = fdscan::make_discover_report(relation, opt.input, fds, keys, max_lhs);
    } else if (command == "keys") {
        const std::size_t max_size = opt.max_lhs == 0 ? n : opt.max_lhs;
        const auto keys = fdscan::candidate_keys(relation, max_size, opt.threads);
        if (opt.verify) warn_key_completeness(fdscan::verify::candidate_keys(relation, keys, max_size));
        report = fdscan::make_keys_report(relation, opt.input, keys, max_size);
    } else {  // check
        const fdscan::FdExpression parsed = fdscan::parse_fd_expression(opt.expression, relation);
        const fdscan::FunctionalDependency fd = fdscan::holds(relation, parsed.lhs, parsed.rhs);
        if (opt.verify) fdscan::verify::check(relation, fd);
        report = fdscan::make_check_report(relation, opt.input, fd);
    }

    report.delimiter = parse_delimiter(opt.delimiter);
    report.has_header = !opt.no_header;
    report.trim = opt.trim;
    report.fold_case = opt.fold_case;
    report.verify = opt.verify;
    const auto elapsed = std::chrono::steady_clock::now() - started;
    report.timing_ms =
        std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(elapsed).count();

    // Timing goes to stderr so stdout stays byte-identical across runs.
    std::cout << (opt.output == "json" ? fdscan::render_json(report)
                                       : fdscan::render_text(report));
    std::cerr << "fdscan " << command << ": completed in "
              << static_cast<long long>(report.timing_ms) << " ms\n";
    return k_exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discovers functional dependencies, attribute equivalences and candidate "
                 "keys in delimited tabular data via partition refinement"};
    app.set_version_flag("--version", fdscan::k_version);
    app.require_subcommand(1);

    Options opt;
    CLI::App* matrix = app.add_subcommand("matrix", "pairwise dependency matrix");
    add_common_flags(matrix, opt);

    CLI::App* discover = app.add_subcommand("discover", "minimal functional dependencies");
    add_common_flags(discover, opt);
    discover->add_option("--max-lhs", opt.max_lhs, "largest lhs size (0 = unbounded, default 3)");
    discover->add_flag("--keys", opt.with_keys, "also report candidate keys");

    CLI::App* keys = app.add_subcommand("keys", "candidate keys");
    add_common_flags(keys, opt);
    keys->add_option("--max-lhs", opt.max_lhs,
                     "largest key size considered (0 = unbounded, default 3)");

    CLI::App* check = app.add_subcommand("check", "test one dependency LHS1,LHS2,...->RHS");
    add_common_flags(check, opt);
    check->add_option("expression", opt.expression, "dependency expression, e.g. \"A,B->C\"")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return k_exit_usage;
    }

    try {
        return run(app.get_subcommands().front()->get_name(), opt);
    } catch (const fdscan::VerificationError& e) {
        std::cerr << "fdscan: verification failed: " << e.what() << '\n';
        return k_exit_verify;
    } catch (const std::exception& e) {
        std::cerr << "fdscan: " << e.what() << '\n';
        return k_exit_usage;
    }
}

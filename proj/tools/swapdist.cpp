#include <cstdint>
#include <exception>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "swapdist/dataset.hpp"
#include "swapdist/errors.hpp"
#include "swapdist/order.hpp"
#include "swapdist/report.hpp"

namespace {

struct Options {
    std::vector<std::string> data_paths;
    bool no_bundled = false;
    bool export_data = false;
    std::string canonical = "SOV";
    std::string head = "V";
    std::string format = "table";
    std::string ring_format = "dot";
    std::string holm = "pooled";
    std::uint64_t trials = 1000000;
    std::uint64_t seed = 1;
    unsigned workers = 1;
};

void add_measure_flags(CLI::App* cmd, Options& options) {
    cmd->add_option("--canonical", options.canonical, "Canonical order the measures anchor to")
        ->capture_default_str();
    cmd->add_option("--head", options.head, "Head constituent for the position measure")
        ->capture_default_str();
}

void add_data_flags(CLI::App* cmd, Options& options) {
    cmd->add_option("--data", options.data_paths,
                    "CSV of conditions; rows replace bundled conditions with the same "
                    "language/group/score/modality, otherwise they are appended")
        ->check(CLI::ExistingFile);
    cmd->add_flag("--no-bundled", options.no_bundled, "Start from an empty dataset");
    cmd->add_flag("--export-data", options.export_data,
                  "Print the assembled dataset as CSV and exit");
}

void add_format_flag(CLI::App* cmd, Options& options) {
    cmd->add_option("--format", options.format, "table, csv or json")->capture_default_str();
}

swapdist::Order parse_canonical(const std::string& text) {
    try {
        return swapdist::Order(text);
    } catch (const std::exception& e) {
        throw swapdist::UsageError(std::string("--canonical: ") + e.what());
    }
}

char parse_head(const std::string& text, const swapdist::Order& canonical) {
    if (text.size() != 1)
        throw swapdist::UsageError("--head must be a single constituent letter");
    if (canonical.position_of(text[0]) < 0)
        throw swapdist::UsageError("--head '" + text + "' does not occur in canonical order \"" +
                                   canonical.str() + "\"");
    return text[0];
}

std::vector<swapdist::Condition> assemble_conditions(const Options& options) {
    std::vector<swapdist::Condition> conditions;
    if (!options.no_bundled)
        conditions = swapdist::bundled_data().conditions;
    for (const std::string& path : options.data_paths) {
        for (swapdist::Condition& incoming : swapdist::load_csv(path)) {
            bool replaced = false;
            for (swapdist::Condition& existing : conditions) {
                if (existing.key() == incoming.key()) {
                    existing = incoming;
                    replaced = true;
                    break;
                }
            }
            if (!replaced)
                conditions.push_back(std::move(incoming));
        }
    }
    if (conditions.empty())
        throw swapdist::UsageError("no conditions: bundled data disabled and no --data rows");
    return conditions;
}

int run_analyze(const Options& options) {
    const std::vector<swapdist::Condition> conditions = assemble_conditions(options);
    if (options.export_data) {
        std::cout << swapdist::to_csv(conditions);
        return 0;
    }
    const swapdist::Order canonical = parse_canonical(options.canonical);
    const char head = parse_head(options.head, canonical);
    const swapdist::OutputFormat format = swapdist::parse_format(options.format);
    std::cout << swapdist::render_analyze(
        swapdist::analyze_report(conditions, canonical, head), canonical, head, format);
    return 0;
}

int run_diff(const Options& options) {
    const std::vector<swapdist::Condition> conditions = assemble_conditions(options);
    if (options.export_data) {
        std::cout << swapdist::to_csv(conditions);
        return 0;
    }
    const swapdist::Order canonical = parse_canonical(options.canonical);
    const char head = parse_head(options.head, canonical);
    const swapdist::OutputFormat format = swapdist::parse_format(options.format);
    std::cout << swapdist::render_diff(swapdist::diff_report(conditions, canonical, head),
                                       canonical, head, format);
    return 0;
}

int run_global(const Options& options) {
    const std::vector<swapdist::Condition> conditions = assemble_conditions(options);
    if (options.export_data) {
        std::cout << swapdist::to_csv(conditions);
        return 0;
    }
    const swapdist::Order canonical = parse_canonical(options.canonical);
    const char head = parse_head(options.head, canonical);
    const swapdist::OutputFormat format = swapdist::parse_format(options.format);
    if (options.trials == 0)
        throw swapdist::UsageError("--trials must be at least 1");

    std::set<std::string> languages;
    for (const swapdist::Condition& condition : conditions)
        languages.insert(condition.language);
    const swapdist::HolmGrouping grouping =
        swapdist::parse_holm_grouping(options.holm, languages.size());

    const swapdist::GlobalReport report = swapdist::global_report(
        conditions, canonical, head, options.trials, options.seed, options.workers, grouping,
        swapdist::bundled_data().external);
    std::cout << swapdist::render_global(report, format);
    if (format == swapdist::OutputFormat::csv)
        for (const std::string& note : report.notes)
            std::cerr << "note: " << note << '\n';
    return 0;
}

int run_ring(const Options& options) {
    const swapdist::Order canonical = parse_canonical(options.canonical);
    const char head = parse_head(options.head, canonical);
    if (options.ring_format == "dot")
        std::cout << swapdist::ring_dot(canonical, head);
    else if (options.ring_format == "json")
        std::cout << swapdist::ring_json(canonical, head);
    else
        throw swapdist::UsageError("unknown ring format \"" + options.ring_format +
                                   "\" (want dot or json)");
    return 0;
}

int run_predict(const Options& options) {
    const swapdist::Order canonical = parse_canonical(options.canonical);
    const swapdist::OutputFormat format = swapdist::parse_format(options.format);
    std::cout << swapdist::render_predict(canonical, format);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    Options options;
    CLI::App app{"Swap-distance analysis of word order preferences"};
    app.require_subcommand(1);

    CLI::App* analyze = app.add_subcommand(
        "analyze", "Per-condition correlations of each distance measure with the scores");
    add_data_flags(analyze, options);
    add_measure_flags(analyze, options);
    add_format_flag(analyze, options);

    CLI::App* diff = app.add_subcommand(
        "diff", "Per-condition tests of correlation differences between measures");
    add_data_flags(diff, options);
    add_measure_flags(diff, options);
    add_format_flag(diff, options);

    CLI::App* global = app.add_subcommand(
        "global", "Per-language Monte Carlo tests of summed correlations");
    add_data_flags(global, options);
    add_measure_flags(global, options);
    add_format_flag(global, options);
    global->add_option("--trials", options.trials, "Randomizations per test")
        ->capture_default_str();
    global->add_option("--seed", options.seed, "RNG seed")
        ->envname("SWAPDIST_SEED")
        ->capture_default_str();
    global->add_option("--workers", options.workers, "Worker threads (same output for any count)")
        ->capture_default_str();
    global->add_option("--holm", options.holm,
                       "Holm families: pooled, none, or explicit index groups like \"0,1,2;3,4\"")
        ->capture_default_str();

    CLI::App* ring = app.add_subcommand(
        "ring", "Export the permutation ring with per-vertex measure annotations");
    add_measure_flags(ring, options);
    ring->add_option("--format", options.ring_format, "dot or json")->capture_default_str();

    CLI::App* predict = app.add_subcommand(
        "predict", "Predicted cost levels of all orders for a canonical order");
    predict->add_option("--canonical", options.canonical, "Canonical order")
        ->capture_default_str();
    add_format_flag(predict, options);

    try {
        app.parse(argc, argv);
        if (app.got_subcommand(analyze))
            return run_analyze(options);
        if (app.got_subcommand(diff))
            return run_diff(options);
        if (app.got_subcommand(global))
            return run_global(options);
        if (app.got_subcommand(ring))
            return run_ring(options);
        return run_predict(options);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const swapdist::UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const swapdist::SizeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const swapdist::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const swapdist::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << '\n';
        return 1;
    }
}

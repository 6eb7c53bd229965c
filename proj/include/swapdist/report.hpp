#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dataset.hpp"
#include "errors.hpp"
#include "kendall.hpp"
#include "measures.hpp"
#include "monte_carlo.hpp"
#include "permutahedron.hpp"
#include "rational.hpp"
#include "significance.hpp"

namespace swapdist {

// ---------------------------------------------------------------------------
// Number rendering
// ---------------------------------------------------------------------------

/// Fixed-point rendering, exact half-away-from-zero rounding, trailing zeros
/// trimmed: 13/15 -> "0.867", 4/5 -> "0.8", 11/5 -> "2.2", 0 -> "0".
inline std::string format_number(const Rational& value, int decimals = 3) {
    std::int64_t scale = 1;
    for (int i = 0; i < decimals; ++i)
        scale *= 10;
    const bool negative = value.num() < 0;
    const std::int64_t abs_num = negative ? -value.num() : value.num();
    const std::int64_t scaled = abs_num * scale;
    std::int64_t units = scaled / value.den();
    if (2 * (scaled % value.den()) >= value.den())
        ++units;
    std::string frac = std::to_string(units % scale);
    frac.insert(0, static_cast<std::size_t>(decimals) - frac.size(), '0');
    while (!frac.empty() && frac.back() == '0')
        frac.pop_back();
    std::string out = std::to_string(units / scale);
    if (!frac.empty())
        out += '.' + frac;
    if (negative && units != 0)
        out.insert(0, 1, '-');
    return out;
}

inline std::string format_number(double value, int decimals = 3) {
    std::int64_t scale = 1;
    for (int i = 0; i < decimals; ++i)
        scale *= 10;
    return format_number(Rational(std::llround(value * static_cast<double>(scale)), scale),
                         decimals);
}

/// p-value rendering: three decimals at 0.001 and above, one-digit scientific
/// below ("1.8e-05"; a trailing ".0" mantissa is trimmed, "1e-06").
inline std::string format_p(const Rational& p) {
    if (p > Rational(0) && p < Rational(1, 1000)) {
        std::ostringstream out;
        out << std::scientific << std::setprecision(1) << p.value();
        std::string s = out.str();
        const std::size_t pos = s.find(".0e");
        if (pos != std::string::npos)
            s.erase(pos, 2);
        return s;
    }
    return format_number(p, 3);
}

/// Monte Carlo p rendering; a zero tail only bounds p from above, "< 1e-06".
inline std::string format_mc_p(std::uint64_t tail, std::uint64_t trials) {
    if (tail == 0)
        return "< " + format_p(Rational(1, static_cast<std::int64_t>(trials)));
    return format_p(
        Rational(static_cast<std::int64_t>(tail), static_cast<std::int64_t>(trials)));
}

// ---------------------------------------------------------------------------
// Per-condition correlation report
// ---------------------------------------------------------------------------

struct MeasureCell {
    char measure = 'd';
    Rational tau;
    Rational p; // exact right-sided
    std::int64_t m_at_stat = 0;
    bool max_given_measure = false; // tau attains the measure's tie ceiling
    bool max_given_sample = false;  // tau is the maximum over score reorderings
    bool min_p_given_measure = false;
};

struct AnalyzeRow {
    Condition condition;
    std::array<MeasureCell, 3> cells{}; // d, p, c
    Dominance dominance;
};

inline AnalyzeRow analyze_condition(const Condition& condition, const Order& canonical,
                                    char head) {
    const std::vector<Order> orders = all_orders(canonical.str());
    const std::vector<double> costs = cost_vector(condition, orders);
    AnalyzeRow row;
    row.condition = condition;
    const std::array<MeasureKind, 3> kinds = {MeasureKind::swap, MeasureKind::head_to_end,
                                              MeasureKind::canonical_flag};
    for (std::size_t i = 0; i < kinds.size(); ++i) {
        const DistanceMeasure measure{kinds[i], canonical, head};
        const std::vector<double> x = measure.values(orders);
        const TestResult test = exact_right_pvalue(x, costs);
        MeasureCell& cell = row.cells[i];
        cell.measure = measure.letter();
        cell.tau = test.statistic;
        cell.p = test.right_p;
        cell.m_at_stat = test.m_at_stat;
        cell.min_p_given_measure = test.is_min_p_given_measure;
        cell.max_given_measure = is_max_given_measure(tau_a(x, costs), measure);
        cell.max_given_sample = max_given_sample(x, costs).achieved;
    }
    row.dominance = dominance_check(row.cells[0].tau, row.cells[1].tau, row.cells[2].tau);
    return row;
}

inline std::vector<AnalyzeRow> analyze_report(const std::vector<Condition>& conditions,
                                              const Order& canonical, char head) {
    if (conditions.empty())
        throw UsageError("no conditions to analyze");
    std::vector<AnalyzeRow> rows;
    rows.reserve(conditions.size());
    for (const Condition& condition : conditions)
        rows.push_back(analyze_condition(condition, canonical, head));
    return rows;
}

// ---------------------------------------------------------------------------
// Per-condition measure-difference report
// ---------------------------------------------------------------------------

struct DiffCell {
    std::string pair; // "d-c" or "d-p"
    Rational statistic;
    Rational p;
    std::int64_t m_at_stat = 0;
    bool max_given_sample = false; // the statistic is the reordering maximum
};

struct DiffRow {
    Condition condition;
    std::array<DiffCell, 2> cells{}; // d-c, d-p
};

inline DiffRow diff_condition(const Condition& condition, const Order& canonical, char head) {
    const std::vector<Order> orders = all_orders(canonical.str());
    const std::vector<double> costs = cost_vector(condition, orders);
    const std::int64_t arrangements = detail::factorial(static_cast<int>(costs.size()));
    const auto make = [&](MeasureKind k1, MeasureKind k2) {
        const DistanceMeasure m1{k1, canonical, head};
        const DistanceMeasure m2{k2, canonical, head};
        const TestResult test =
            exact_diff_right_pvalue(m1.values(orders), m2.values(orders), costs);
        DiffCell cell;
        cell.pair = std::string(1, m1.letter()) + "-" + m2.letter();
        cell.statistic = test.statistic;
        cell.p = test.right_p;
        cell.m_at_stat = test.m_at_stat;
        // Nothing exceeds the observed value exactly when the whole tail sits
        // at the observed value.
        cell.max_given_sample = test.right_p == Rational(test.m_at_stat, arrangements);
        return cell;
    };
    DiffRow row;
    row.condition = condition;
    row.cells = {make(MeasureKind::swap, MeasureKind::canonical_flag),
                 make(MeasureKind::swap, MeasureKind::head_to_end)};
    return row;
}

inline std::vector<DiffRow> diff_report(const std::vector<Condition>& conditions,
                                        const Order& canonical, char head) {
    if (conditions.empty())
        throw UsageError("no conditions to analyze");
    std::vector<DiffRow> rows;
    rows.reserve(conditions.size());
    for (const Condition& condition : conditions)
        rows.push_back(diff_condition(condition, canonical, head));
    return rows;
}

// ---------------------------------------------------------------------------
// Global Monte Carlo report
// ---------------------------------------------------------------------------

struct GlobalEntry {
    std::string label; // "S(d)", ..., "S(d)-S(p)"
    Rational statistic;
    std::uint64_t tail = 0;
    std::uint64_t trials = 0;
    Rational holm_p; // adjusted from the floored raw p

    Rational raw_p() const {
        return {static_cast<std::int64_t>(tail), static_cast<std::int64_t>(trials)};
    }
    /// Raw p with zero tails lifted to the 1/T resolution, the value Holm sees.
    Rational floored_p() const {
        return {static_cast<std::int64_t>(tail == 0 ? 1 : tail),
                static_cast<std::int64_t>(trials)};
    }
    bool zero_tail() const { return tail == 0; }
};

struct GlobalLanguageReport {
    std::string language;
    std::size_t condition_count = 0;
    std::array<GlobalEntry, 5> entries{};
};

struct GlobalReport {
    std::vector<GlobalLanguageReport> languages;
    std::vector<std::string> notes;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

/// Families of flat test indices adjusted together. Layout: the measure tests
/// of every language first (language-major, d, p, c), then the difference
/// tests (language-major, d-c, d-p). Indices left out of every group keep
/// their raw p.
struct HolmGrouping {
    std::vector<std::vector<std::size_t>> groups;
};

/// The default preset: all measure tests in one family, all difference tests
/// in another.
inline HolmGrouping pooled_grouping(std::size_t language_count) {
    HolmGrouping grouping;
    std::vector<std::size_t> measures, diffs;
    for (std::size_t i = 0; i < 3 * language_count; ++i)
        measures.push_back(i);
    for (std::size_t i = 3 * language_count; i < 5 * language_count; ++i)
        diffs.push_back(i);
    grouping.groups = {std::move(measures), std::move(diffs)};
    return grouping;
}

/// "pooled", "none", or explicit flat index groups like "0,1,2;3,4".
inline HolmGrouping parse_holm_grouping(std::string_view spec, std::size_t language_count) {
    if (spec == "pooled")
        return pooled_grouping(language_count);
    if (spec == "none")
        return {};
    HolmGrouping grouping;
    const std::size_t total = 5 * language_count;
    std::set<std::size_t> seen;
    std::vector<std::size_t> group;
    std::string token;
    const auto flush_token = [&] {
        if (token.empty())
            throw UsageError("holm grouping \"" + std::string(spec) + "\": empty index");
        std::size_t parsed = 0;
        try {
            parsed = std::stoul(token);
        } catch (const std::exception&) {
            throw UsageError("holm grouping: \"" + token + "\" is not an index");
        }
        if (std::to_string(parsed) != token)
            throw UsageError("holm grouping: \"" + token + "\" is not an index");
        if (parsed >= total)
            throw UsageError("holm grouping: index " + token + " out of range (have " +
                             std::to_string(total) + " tests)");
        if (!seen.insert(parsed).second)
            throw UsageError("holm grouping: index " + token + " listed twice");
        group.push_back(parsed);
        token.clear();
    };
    for (const char ch : spec) {
        if (ch == ',') {
            flush_token();
        } else if (ch == ';') {
            flush_token();
            grouping.groups.push_back(std::move(group));
            group.clear();
        } else {
            token += ch;
        }
    }
    flush_token();
    grouping.groups.push_back(std::move(group));
    return grouping;
}

inline GlobalReport global_report(const std::vector<Condition>& conditions,
                                  const Order& canonical, char head, std::uint64_t trials,
                                  std::uint64_t seed, unsigned workers,
                                  const HolmGrouping& grouping,
                                  const std::vector<ExternalDataNeed>& external_needs) {
    if (conditions.empty())
        throw UsageError("no conditions to analyze");
    GlobalReport report;
    report.trials = trials;
    report.seed = seed;

    std::vector<std::string> language_order;
    std::set<std::string> supplied_keys;
    for (const Condition& condition : conditions) {
        bool known = false;
        for (const std::string& language : language_order)
            known = known || language == condition.language;
        if (!known)
            language_order.push_back(condition.language);
        supplied_keys.insert(condition.key());
    }

    for (const std::string& language : language_order) {
        ConditionSet set;
        set.canonical = canonical;
        set.head = head;
        for (const Condition& condition : conditions)
            if (condition.language == language)
                set.conditions.push_back(condition);

        const DistanceMeasure d = set.measure_for(MeasureKind::swap);
        const DistanceMeasure p = set.measure_for(MeasureKind::head_to_end);
        const DistanceMeasure c = set.measure_for(MeasureKind::canonical_flag);

        GlobalLanguageReport lang;
        lang.language = language;
        lang.condition_count = set.conditions.size();
        const auto fill = [&](std::size_t slot, std::string label, const GlobalResult& run) {
            lang.entries[slot].label = std::move(label);
            lang.entries[slot].statistic = run.statistic;
            lang.entries[slot].tail = run.tail;
            lang.entries[slot].trials = run.trials;
        };
        fill(0, "S(d)", monte_carlo_right_pvalue(set, d, trials, seed, workers));
        fill(1, "S(p)", monte_carlo_right_pvalue(set, p, trials, seed, workers));
        fill(2, "S(c)", monte_carlo_right_pvalue(set, c, trials, seed, workers));
        fill(3, "S(d)-S(c)", monte_carlo_diff_pvalue(set, d, c, trials, seed, workers));
        fill(4, "S(d)-S(p)", monte_carlo_diff_pvalue(set, d, p, trials, seed, workers));
        report.languages.push_back(std::move(lang));
    }

    // Holm adjustment over the flat layout; ungrouped tests keep their
    // (floored) raw p.
    const std::size_t language_count = report.languages.size();
    const auto entry_at = [&](std::size_t flat) -> GlobalEntry& {
        if (flat < 3 * language_count)
            return report.languages[flat / 3].entries[flat % 3];
        const std::size_t diff_flat = flat - 3 * language_count;
        return report.languages[diff_flat / 2].entries[3 + diff_flat % 2];
    };
    for (std::size_t flat = 0; flat < 5 * language_count; ++flat)
        entry_at(flat).holm_p = entry_at(flat).floored_p();
    for (const std::vector<std::size_t>& group : grouping.groups) {
        if (group.empty())
            continue;
        std::vector<Rational> raw;
        raw.reserve(group.size());
        for (const std::size_t flat : group) {
            if (flat >= 5 * language_count)
                throw UsageError("holm grouping: index " + std::to_string(flat) +
                                 " out of range (have " +
                                 std::to_string(5 * language_count) + " tests)");
            raw.push_back(entry_at(flat).floored_p());
        }
        const std::vector<Rational> adjusted = holm_adjust(raw);
        for (std::size_t i = 0; i < group.size(); ++i)
            entry_at(group[i]).holm_p = adjusted[i];
    }

    // Conditions whose raw score vectors are not bundled limit what the sums
    // can cover; say so rather than printing silently partial results.
    bool any_missing = false;
    for (const std::string& language : language_order) {
        std::vector<std::string> missing;
        for (const ExternalDataNeed& need : external_needs)
            if (need.language == language && !supplied_keys.contains(need.key()))
                missing.push_back(to_string(need.score_kind) + "/" + to_string(need.modality) +
                                  (need.group.empty() ? "" : " (" + need.group + ")"));
        if (missing.empty())
            continue;
        any_missing = true;
        std::string note = language + ": sums cover only the supplied conditions; " +
                           std::to_string(missing.size()) +
                           " further score vector(s) from the original studies are not "
                           "bundled and must be supplied via --data: ";
        for (std::size_t i = 0; i < missing.size(); ++i)
            note += (i ? ", " : "") + missing[i];
        report.notes.push_back(std::move(note));
    }
    if (any_missing)
        report.notes.push_back(
            "the full published global analysis is not reproducible from bundled data alone; "
            "fill data/external_template.csv from the original studies and pass it with --data");
    return report;
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

enum class OutputFormat { table, csv, json };

inline OutputFormat parse_format(std::string_view text) {
    if (text == "table")
        return OutputFormat::table;
    if (text == "csv")
        return OutputFormat::csv;
    if (text == "json")
        return OutputFormat::json;
    throw UsageError("unknown format \"" + std::string(text) + "\" (want table, csv or json)");
}

namespace detail {

/// Left-aligned fixed-width text table; column widths fit the widest cell.
class TableBuilder {
public:
    explicit TableBuilder(std::vector<std::string> header) { rows_.push_back(std::move(header)); }

    void add_row(std::vector<std::string> row) {
        row.resize(rows_.front().size());
        rows_.push_back(std::move(row));
    }

    std::string str() const {
        std::vector<std::size_t> widths(rows_.front().size(), 0);
        for (const std::vector<std::string>& row : rows_)
            for (std::size_t i = 0; i < row.size(); ++i)
                widths[i] = std::max(widths[i], row[i].size());
        std::string out;
        for (const std::vector<std::string>& row : rows_) {
            std::string line;
            for (std::size_t i = 0; i < row.size(); ++i) {
                line += row[i];
                if (i + 1 < row.size())
                    line += std::string(widths[i] - row[i].size() + 2, ' ');
            }
            while (!line.empty() && line.back() == ' ')
                line.pop_back();
            out += line + '\n';
        }
        return out;
    }

private:
    std::vector<std::vector<std::string>> rows_;
};

inline std::string yes_no(bool value) { return value ? "yes" : "no"; }
inline std::string true_false(bool value) { return value ? "true" : "false"; }

} // namespace detail

/// Compact verdict of dominance_check: which measures tau(d) provably beats
/// or trails on this condition.
inline std::string dominance_token(const Dominance& dominance) {
    if (dominance.beats_p)
        return "d>p,c";
    if (dominance.beats_c)
        return "d>c";
    if (dominance.trails_p)
        return "d<p,c";
    if (dominance.trails_c)
        return "d<c";
    return "";
}

inline nlohmann::ordered_json condition_identity_json(const Condition& condition) {
    nlohmann::ordered_json doc;
    doc["language"] = condition.language;
    doc["group"] = condition.group;
    doc["score_kind"] = to_string(condition.score_kind);
    doc["modality"] = to_string(condition.modality);
    doc["direction"] = to_string(condition.direction);
    return doc;
}

inline std::string render_analyze(const std::vector<AnalyzeRow>& rows, const Order& canonical,
                                  char head, OutputFormat format) {
    if (format == OutputFormat::json) {
        nlohmann::ordered_json doc;
        doc["canonical"] = canonical.str();
        doc["head"] = std::string(1, head);
        doc["conditions"] = nlohmann::ordered_json::array();
        for (const AnalyzeRow& row : rows) {
            nlohmann::ordered_json entry = condition_identity_json(row.condition);
            entry["measures"] = nlohmann::ordered_json::array();
            for (const MeasureCell& cell : row.cells) {
                nlohmann::ordered_json m;
                m["measure"] = std::string(1, cell.measure);
                m["tau"] = cell.tau.value();
                m["tau_exact"] = cell.tau.str();
                m["p"] = cell.p.value();
                m["p_exact"] = cell.p.str();
                m["max_given_measure"] = cell.max_given_measure;
                m["max_given_sample"] = cell.max_given_sample;
                m["min_p_given_measure"] = cell.min_p_given_measure;
                entry["measures"].push_back(std::move(m));
            }
            entry["dominance"] = {{"beats_p", row.dominance.beats_p},
                                  {"beats_c", row.dominance.beats_c},
                                  {"trails_p", row.dominance.trails_p},
                                  {"trails_c", row.dominance.trails_c}};
            doc["conditions"].push_back(std::move(entry));
        }
        return doc.dump(2) + "\n";
    }
    if (format == OutputFormat::csv) {
        std::string out = "language,group,score_kind,modality,measure,tau,tau_exact,p,p_exact,"
                          "max_given_measure,max_given_sample,dominance\n";
        for (const AnalyzeRow& row : rows) {
            for (const MeasureCell& cell : row.cells) {
                out += row.condition.language + ',' + row.condition.group + ',' +
                       to_string(row.condition.score_kind) + ',' +
                       to_string(row.condition.modality) + ',' + cell.measure + ',' +
                       format_number(cell.tau) + ',' + cell.tau.str() + ',' +
                       format_p(cell.p) + ',' + cell.p.str() + ',' +
                       detail::true_false(cell.max_given_measure) + ',' +
                       detail::true_false(cell.max_given_sample) + ',' +
                       (cell.measure == 'd' ? dominance_token(row.dominance) : "") + '\n';
            }
        }
        return out;
    }
    detail::TableBuilder table({"language", "group", "score", "modality", "measure", "tau", "p",
                                "max_given_measure", "max_given_sample", "dominance"});
    for (const AnalyzeRow& row : rows) {
        for (const MeasureCell& cell : row.cells) {
            table.add_row({row.condition.language, row.condition.group,
                           to_string(row.condition.score_kind),
                           to_string(row.condition.modality), std::string(1, cell.measure),
                           format_number(cell.tau), format_p(cell.p),
                           detail::yes_no(cell.max_given_measure),
                           detail::yes_no(cell.max_given_sample),
                           cell.measure == 'd' ? dominance_token(row.dominance) : ""});
        }
    }
    return table.str();
}

inline std::string render_diff(const std::vector<DiffRow>& rows, const Order& canonical,
                               char head, OutputFormat format) {
    if (format == OutputFormat::json) {
        nlohmann::ordered_json doc;
        doc["canonical"] = canonical.str();
        doc["head"] = std::string(1, head);
        doc["conditions"] = nlohmann::ordered_json::array();
        for (const DiffRow& row : rows) {
            nlohmann::ordered_json entry = condition_identity_json(row.condition);
            entry["pairs"] = nlohmann::ordered_json::array();
            for (const DiffCell& cell : row.cells) {
                nlohmann::ordered_json m;
                m["pair"] = cell.pair;
                m["statistic"] = cell.statistic.value();
                m["statistic_exact"] = cell.statistic.str();
                m["p"] = cell.p.value();
                m["p_exact"] = cell.p.str();
                m["max_given_sample"] = cell.max_given_sample;
                entry["pairs"].push_back(std::move(m));
            }
            doc["conditions"].push_back(std::move(entry));
        }
        return doc.dump(2) + "\n";
    }
    if (format == OutputFormat::csv) {
        std::string out = "language,group,score_kind,modality,pair,statistic,statistic_exact,p,"
                          "p_exact,max_given_sample\n";
        for (const DiffRow& row : rows) {
            for (const DiffCell& cell : row.cells) {
                out += row.condition.language + ',' + row.condition.group + ',' +
                       to_string(row.condition.score_kind) + ',' +
                       to_string(row.condition.modality) + ',' + cell.pair + ',' +
                       format_number(cell.statistic) + ',' + cell.statistic.str() + ',' +
                       format_p(cell.p) + ',' + cell.p.str() + ',' +
                       detail::true_false(cell.max_given_sample) + '\n';
            }
        }
        return out;
    }
    detail::TableBuilder table({"language", "group", "score", "modality", "pair", "statistic",
                                "p", "max_given_sample"});
    for (const DiffRow& row : rows) {
        for (const DiffCell& cell : row.cells) {
            table.add_row({row.condition.language, row.condition.group,
                           to_string(row.condition.score_kind),
                           to_string(row.condition.modality), cell.pair,
                           format_number(cell.statistic), format_p(cell.p),
                           detail::yes_no(cell.max_given_sample)});
        }
    }
    return table.str();
}

/// Raw Monte Carlo p display; zero tails print the "< 1/T" bound.
inline std::string global_raw_display(const GlobalEntry& entry) {
    return format_mc_p(entry.tail, entry.trials);
}

inline std::string global_holm_display(const GlobalEntry& entry) {
    return (entry.zero_tail() ? "< " : "") + format_p(entry.holm_p);
}

/// Notes are embedded for json, appended for table, and left to the caller
/// (standard error) for csv so the csv body stays machine-readable.
inline std::string render_global(const GlobalReport& report, OutputFormat format) {
    if (format == OutputFormat::json) {
        nlohmann::ordered_json doc;
        doc["trials"] = report.trials;
        doc["seed"] = report.seed;
        doc["languages"] = nlohmann::ordered_json::array();
        for (const GlobalLanguageReport& lang : report.languages) {
            nlohmann::ordered_json entry;
            entry["language"] = lang.language;
            entry["conditions"] = lang.condition_count;
            entry["tests"] = nlohmann::ordered_json::array();
            for (const GlobalEntry& test : lang.entries) {
                nlohmann::ordered_json t;
                t["test"] = test.label;
                t["statistic"] = test.statistic.value();
                t["statistic_exact"] = test.statistic.str();
                t["tail"] = test.tail;
                t["trials"] = test.trials;
                t["p_raw"] = test.raw_p().value();
                t["p_raw_display"] = global_raw_display(test);
                t["p_holm"] = test.holm_p.value();
                t["p_holm_display"] = global_holm_display(test);
                entry["tests"].push_back(std::move(t));
            }
            doc["languages"].push_back(std::move(entry));
        }
        doc["notes"] = report.notes;
        return doc.dump(2) + "\n";
    }
    if (format == OutputFormat::csv) {
        std::string out =
            "language,test,statistic,statistic_exact,tail,trials,p_raw,p_holm\n";
        for (const GlobalLanguageReport& lang : report.languages) {
            for (const GlobalEntry& test : lang.entries) {
                out += lang.language + ',' + test.label + ',' +
                       format_number(test.statistic) + ',' + test.statistic.str() + ',' +
                       std::to_string(test.tail) + ',' + std::to_string(test.trials) + ',' +
                       global_raw_display(test) + ',' + global_holm_display(test) + '\n';
            }
        }
        return out;
    }
    detail::TableBuilder table(
        {"language", "test", "statistic", "tail", "trials", "p_raw", "p_holm"});
    for (const GlobalLanguageReport& lang : report.languages) {
        for (const GlobalEntry& test : lang.entries) {
            table.add_row({lang.language, test.label, format_number(test.statistic),
                           std::to_string(test.tail), std::to_string(test.trials),
                           global_raw_display(test), global_holm_display(test)});
        }
    }
    std::string out = table.str();
    for (const std::string& note : report.notes)
        out += "note: " + note + '\n';
    return out;
}

// ---------------------------------------------------------------------------
// Ring and prediction exports
// ---------------------------------------------------------------------------

/// DOT ring with per-vertex measure annotations; rotation angles exist only
/// for three constituents.
inline std::string ring_dot(const Order& canonical, char head) {
    const Permutahedron ring = build_permutahedron(canonical.str());
    const DistanceMeasure d{MeasureKind::swap, canonical, head};
    const DistanceMeasure p{MeasureKind::head_to_end, canonical, head};
    const DistanceMeasure c{MeasureKind::canonical_flag, canonical, head};
    std::string out = "graph permutahedron {\n";
    for (const Order& vertex : ring.vertices()) {
        out += "  " + vertex.str() + " [label=\"" + vertex.str() +
               " d=" + std::to_string(d.value(vertex)) + " p=" + std::to_string(p.value(vertex)) +
               " c=" + std::to_string(c.value(vertex));
        if (canonical.size() == 3)
            out += " angle=" + std::to_string(rotation_angle(vertex, canonical));
        out += "\"];\n";
    }
    for (const auto& [a, b] : ring.edges()) {
        out += "  " + ring.vertices()[static_cast<std::size_t>(a)].str() + " -- " +
               ring.vertices()[static_cast<std::size_t>(b)].str() + ";\n";
    }
    out += "}\n";
    return out;
}

inline std::string ring_json(const Order& canonical, char head) {
    const Permutahedron ring = build_permutahedron(canonical.str());
    const DistanceMeasure d{MeasureKind::swap, canonical, head};
    const DistanceMeasure p{MeasureKind::head_to_end, canonical, head};
    const DistanceMeasure c{MeasureKind::canonical_flag, canonical, head};
    nlohmann::ordered_json doc;
    doc["canonical"] = canonical.str();
    doc["head"] = std::string(1, head);
    doc["vertices"] = nlohmann::ordered_json::array();
    for (const Order& vertex : ring.vertices()) {
        nlohmann::ordered_json v;
        v["name"] = vertex.str();
        v["d"] = d.value(vertex);
        v["p"] = p.value(vertex);
        v["c"] = c.value(vertex);
        if (canonical.size() == 3)
            v["angle"] = rotation_angle(vertex, canonical);
        doc["vertices"].push_back(std::move(v));
    }
    doc["edges"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : ring.edges())
        doc["edges"].push_back({ring.vertices()[static_cast<std::size_t>(a)].str(),
                                ring.vertices()[static_cast<std::size_t>(b)].str()});
    return doc.dump(2) + "\n";
}

inline std::string render_predict(const Order& canonical, OutputFormat format) {
    const std::vector<std::vector<Order>> levels = predicted_cost_levels(canonical);
    if (format == OutputFormat::json) {
        nlohmann::ordered_json doc;
        doc["canonical"] = canonical.str();
        doc["levels"] = nlohmann::ordered_json::array();
        for (const std::vector<Order>& level : levels) {
            nlohmann::ordered_json names = nlohmann::ordered_json::array();
            for (const Order& o : level)
                names.push_back(o.str());
            doc["levels"].push_back(std::move(names));
        }
        return doc.dump(2) + "\n";
    }
    if (format == OutputFormat::csv) {
        std::string out = "level,order\n";
        for (std::size_t k = 0; k < levels.size(); ++k)
            for (const Order& o : levels[k])
                out += std::to_string(k) + ',' + o.str() + '\n';
        return out;
    }
    detail::TableBuilder table({"level", "orders"});
    for (std::size_t k = 0; k < levels.size(); ++k) {
        std::string names;
        for (const Order& o : levels[k])
            names += (names.empty() ? "" : " ") + o.str();
        table.add_row({std::to_string(k), names});
    }
    return table.str();
}

} // namespace swapdist

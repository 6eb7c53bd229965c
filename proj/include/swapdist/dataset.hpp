#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "errors.hpp"
#include "order.hpp"

namespace swapdist {

enum class ScoreKind {
    acceptability,
    acceptability_rank,
    frequency,
    reaction_time,
    reaction_time_rank,
    error,
    error_rank,
};

enum class Modality { spoken, written, none };

/// Whether larger scores mean easier (ease) or harder (cost) processing.
enum class Direction { ease, cost };

inline std::string to_string(ScoreKind kind) {
    switch (kind) {
    case ScoreKind::acceptability: return "acceptability";
    case ScoreKind::acceptability_rank: return "acceptability_rank";
    case ScoreKind::frequency: return "frequency";
    case ScoreKind::reaction_time: return "reaction_time";
    case ScoreKind::reaction_time_rank: return "reaction_time_rank";
    case ScoreKind::error: return "error";
    case ScoreKind::error_rank: return "error_rank";
    }
    return "?";
}

inline std::string to_string(Modality modality) {
    switch (modality) {
    case Modality::spoken: return "spoken";
    case Modality::written: return "written";
    case Modality::none: return "none";
    }
    return "?";
}

inline std::string to_string(Direction direction) {
    return direction == Direction::ease ? "ease" : "cost";
}

inline ScoreKind parse_score_kind(std::string_view text) {
    for (const ScoreKind kind :
         {ScoreKind::acceptability, ScoreKind::acceptability_rank, ScoreKind::frequency,
          ScoreKind::reaction_time, ScoreKind::reaction_time_rank, ScoreKind::error,
          ScoreKind::error_rank})
        if (text == to_string(kind))
            return kind;
    throw InputError("unknown score kind \"" + std::string(text) + "\"");
}

inline Modality parse_modality(std::string_view text) {
    for (const Modality modality : {Modality::spoken, Modality::written, Modality::none})
        if (text == to_string(modality))
            return modality;
    throw InputError("unknown modality \"" + std::string(text) + "\"");
}

inline Direction parse_direction(std::string_view text) {
    if (text == "ease")
        return Direction::ease;
    if (text == "cost")
        return Direction::cost;
    throw InputError("unknown direction \"" + std::string(text) + "\" (want ease or cost)");
}

inline bool is_rank_kind(ScoreKind kind) {
    return kind == ScoreKind::acceptability_rank || kind == ScoreKind::reaction_time_rank ||
           kind == ScoreKind::error_rank;
}

/// File column convention for the six score fields.
inline constexpr std::array<std::string_view, 6> kCsvOrderColumns = {
    "SOV", "SVO", "OSV", "OVS", "VSO", "VOS"};

inline constexpr std::string_view kCsvHeader =
    "language,group,score_kind,modality,direction,SOV,SVO,OSV,OVS,VSO,VOS";

/// One measured condition: a six-order score vector plus its identity
/// (language, optional group, what was measured, and in which modality).
struct Condition {
    std::string language;
    std::string group; // empty when the study had no grouping
    ScoreKind score_kind = ScoreKind::acceptability;
    Modality modality = Modality::spoken;
    Direction direction = Direction::cost;
    std::map<std::string, double> scores; // order name -> value, all six orders

    /// Identity used when user-supplied rows replace bundled ones.
    std::string key() const {
        return language + "|" + group + "|" + to_string(score_kind) + "|" + to_string(modality);
    }

    friend bool operator==(const Condition&, const Condition&) = default;
};

/// Checks the six-order completeness and the rank conventions (integral
/// ranks, smallest rank 1). Throws InputError describing the defect.
inline void validate_condition(const Condition& condition) {
    std::set<std::string> expected;
    for (const std::string_view name : kCsvOrderColumns)
        expected.emplace(name);
    std::set<std::string> actual;
    for (const auto& [name, value] : condition.scores)
        actual.insert(name);
    if (actual != expected) {
        throw InputError("condition " + condition.key() +
                         " must score exactly the six orders SOV,SVO,OSV,OVS,VSO,VOS");
    }
    if (is_rank_kind(condition.score_kind)) {
        double min_rank = std::numeric_limits<double>::infinity();
        for (const auto& [name, value] : condition.scores) {
            if (value < 1 || value != std::floor(value))
                throw InputError("condition " + condition.key() + ": rank for " + name +
                                 " must be a positive integer");
            min_rank = std::min(min_rank, value);
        }
        if (min_rank != 1)
            throw InputError("condition " + condition.key() + ": rank 1 must be present");
    }
}

/// Ease-direction scores are negated into costs; cost-direction conditions
/// pass through, so the function is idempotent.
inline Condition to_cost(Condition condition) {
    if (condition.direction == Direction::ease) {
        for (auto& [name, value] : condition.scores)
            value = -value;
        condition.direction = Direction::cost;
    }
    return condition;
}

/// Cost-direction scores aligned with the given order list.
inline std::vector<double> cost_vector(const Condition& condition,
                                       const std::vector<Order>& orders) {
    const Condition cost = to_cost(condition);
    std::vector<double> out;
    out.reserve(orders.size());
    for (const Order& o : orders) {
        const auto it = cost.scores.find(o.str());
        if (it == cost.scores.end())
            throw InputError("condition " + condition.key() + " has no score for order " +
                             o.str());
        out.push_back(it->second);
    }
    return out;
}

/// An ordered chain of pairwise-contrast levels, least costly first. The
/// levels must partition the six orders.
struct ContrastChain {
    std::vector<std::vector<Order>> levels;
};

/// Rank vector from a contrast chain: every order in level i gets rank i+1.
inline std::map<std::string, double> ranks_from_contrasts(const ContrastChain& chain) {
    if (chain.levels.empty())
        throw InputError("contrast chain has no levels");
    std::map<std::string, double> ranks;
    for (std::size_t level = 0; level < chain.levels.size(); ++level) {
        if (chain.levels[level].empty())
            throw InputError("contrast chain has an empty level");
        for (const Order& o : chain.levels[level]) {
            if (!ranks.emplace(o.str(), static_cast<double>(level + 1)).second)
                throw InputError("order " + o.str() + " appears in two contrast levels");
        }
    }
    std::set<std::string> expected;
    for (const std::string_view name : kCsvOrderColumns)
        expected.emplace(name);
    std::set<std::string> actual;
    for (const auto& [name, rank] : ranks)
        actual.insert(name);
    if (actual != expected)
        throw InputError("contrast chain must partition the six orders");
    return ranks;
}

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    for (const char ch : line) {
        if (ch == ',') {
            fields.push_back(field);
            field.clear();
        } else {
            field += ch;
        }
    }
    fields.push_back(field);
    return fields;
}

inline double parse_number_field(const std::string& field, int line_number,
                                 std::string_view column) {
    double value = 0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw ParseError("line " + std::to_string(line_number) + ": column " +
                         std::string(column) + " is not a number: \"" + field + "\"");
    return value;
}

} // namespace detail

/// Loads the wide per-condition schema (see kCsvHeader). Lines that are empty
/// or start with '#' are skipped. Fields are comma-separated with no quoting.
inline std::vector<Condition> load_csv_stream(std::istream& in) {
    std::string line;
    int line_number = 0;
    bool header_seen = false;
    std::vector<Condition> out;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line.front() == '#')
            continue;
        if (!header_seen) {
            if (line != kCsvHeader)
                throw ParseError("line " + std::to_string(line_number) +
                                 ": header must be exactly \"" + std::string(kCsvHeader) + "\"");
            header_seen = true;
            continue;
        }
        const std::vector<std::string> fields = detail::split_csv_line(line);
        if (fields.size() != 11)
            throw ParseError("line " + std::to_string(line_number) + ": expected 11 fields, got " +
                             std::to_string(fields.size()));
        Condition condition;
        condition.language = fields[0];
        condition.group = fields[1];
        try {
            condition.score_kind = parse_score_kind(fields[2]);
            condition.modality = parse_modality(fields[3]);
            condition.direction = parse_direction(fields[4]);
        } catch (const InputError& e) {
            throw ParseError("line " + std::to_string(line_number) + ": " + e.what());
        }
        if (condition.language.empty())
            throw ParseError("line " + std::to_string(line_number) + ": language is empty");
        for (std::size_t i = 0; i < kCsvOrderColumns.size(); ++i)
            condition.scores[std::string(kCsvOrderColumns[i])] =
                detail::parse_number_field(fields[5 + i], line_number, kCsvOrderColumns[i]);
        try {
            validate_condition(condition);
        } catch (const InputError& e) {
            throw ParseError("line " + std::to_string(line_number) + ": " + e.what());
        }
        out.push_back(std::move(condition));
    }
    if (!header_seen)
        throw ParseError("no header line found");
    return out;
}

inline std::vector<Condition> load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open data file \"" + path + "\"");
    return load_csv_stream(in);
}

namespace detail {

inline std::string format_csv_number(double value) {
    std::array<char, 64> buffer{};
    const auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    return {buffer.data(), ptr};
}

} // namespace detail

/// Serializes conditions back into the load_csv schema (shortest
/// round-tripping number form, so load(to_csv(x)) == x).
inline std::string to_csv(const std::vector<Condition>& conditions) {
    std::string out{kCsvHeader};
    out += '\n';
    for (const Condition& c : conditions) {
        out += c.language + ',' + c.group + ',' + to_string(c.score_kind) + ',' +
               to_string(c.modality) + ',' + to_string(c.direction);
        for (const std::string_view name : kCsvOrderColumns) {
            out += ',';
            out += detail::format_csv_number(c.scores.at(std::string(name)));
        }
        out += '\n';
    }
    return out;
}

/// A condition whose six raw values are not bundled: they must be supplied in
/// a user CSV before results covering it can be produced.
struct ExternalDataNeed {
    std::string language;
    std::string group;
    ScoreKind score_kind = ScoreKind::acceptability;
    Modality modality = Modality::spoken;
    Direction direction = Direction::cost;
    std::string note;

    std::string key() const {
        return language + "|" + group + "|" + to_string(score_kind) + "|" + to_string(modality);
    }
};

struct BundledData {
    std::vector<Condition> conditions;
    std::vector<ExternalDataNeed> external;
};

namespace detail {

inline Condition make_condition(std::string language, std::string group, ScoreKind kind,
                                Modality modality, Direction direction,
                                std::map<std::string, double> scores) {
    Condition c;
    c.language = std::move(language);
    c.group = std::move(group);
    c.score_kind = kind;
    c.modality = modality;
    c.direction = direction;
    c.scores = std::move(scores);
    validate_condition(c);
    return c;
}

inline std::vector<Order> orders_of(std::initializer_list<const char*> names) {
    std::vector<Order> out;
    for (const char* name : names)
        out.emplace_back(name);
    return out;
}

inline BundledData make_bundled_data() {
    BundledData data;

    // Mean acceptability z-scores per order (ease direction).
    data.conditions.push_back(make_condition(
        "Malayalam", "", ScoreKind::acceptability, Modality::spoken, Direction::ease,
        {{"SOV", 1.05}, {"OSV", 0.80}, {"SVO", 0.36}, {"OVS", 0.30}, {"VSO", -0.14}, {"VOS", -0.36}}));

    // Rank conditions derived from published pairwise contrasts, least costly
    // level first.
    const ContrastChain korean{{orders_of({"SOV"}), orders_of({"OSV"}),
                                orders_of({"SVO", "OVS"}), orders_of({"VSO", "VOS"})}};
    for (const char* group :
         {"Korean-dominant", "English-dominant-active", "English-dominant-passive"})
        data.conditions.push_back(make_condition("Korean", group, ScoreKind::acceptability_rank,
                                                 Modality::spoken, Direction::cost,
                                                 ranks_from_contrasts(korean)));

    const ContrastChain malayalam{
        {orders_of({"SOV", "OSV"}), orders_of({"SVO", "OVS"}), orders_of({"VSO", "VOS"})}};
    data.conditions.push_back(make_condition("Malayalam", "", ScoreKind::acceptability_rank,
                                             Modality::spoken, Direction::cost,
                                             ranks_from_contrasts(malayalam)));

    const ContrastChain sinhala_rt_spoken{
        {orders_of({"SOV"}), orders_of({"SVO", "OVS"}), orders_of({"OSV", "VSO", "VOS"})}};
    data.conditions.push_back(make_condition("Sinhalese", "", ScoreKind::reaction_time_rank,
                                             Modality::spoken, Direction::cost,
                                             ranks_from_contrasts(sinhala_rt_spoken)));

    const ContrastChain sinhala_rt_written{
        {orders_of({"SOV"}), orders_of({"SVO", "OSV", "OVS", "VSO", "VOS"})}};
    data.conditions.push_back(make_condition("Sinhalese", "", ScoreKind::reaction_time_rank,
                                             Modality::written, Direction::cost,
                                             ranks_from_contrasts(sinhala_rt_written)));

    const ContrastChain sinhala_error_spoken{
        {orders_of({"SOV"}), orders_of({"SVO", "OVS", "VSO"}), orders_of({"OSV", "VOS"})}};
    data.conditions.push_back(make_condition("Sinhalese", "", ScoreKind::error_rank,
                                             Modality::spoken, Direction::cost,
                                             ranks_from_contrasts(sinhala_error_spoken)));

    const ContrastChain sinhala_error_written{
        {orders_of({"SOV", "SVO", "OSV", "OVS", "VSO", "VOS"})}};
    data.conditions.push_back(make_condition("Sinhalese", "", ScoreKind::error_rank,
                                             Modality::written, Direction::cost,
                                             ranks_from_contrasts(sinhala_error_written)));

    // Raw vectors published elsewhere; not fabricated here.
    const auto need = [&](std::string language, std::string group, ScoreKind kind,
                          Modality modality, Direction direction, std::string note) {
        data.external.push_back(ExternalDataNeed{std::move(language), std::move(group), kind,
                                                 modality, direction, std::move(note)});
    };
    for (const char* group :
         {"Korean-dominant", "English-dominant-active", "English-dominant-passive"})
        need("Korean", group, ScoreKind::acceptability, Modality::spoken, Direction::ease,
             "six mean acceptability z-scores per order");
    need("Malayalam", "", ScoreKind::frequency, Modality::none, Direction::ease,
         "six corpus frequencies per order");
    need("Sinhalese", "", ScoreKind::reaction_time, Modality::spoken, Direction::cost,
         "six mean reaction times per order");
    need("Sinhalese", "", ScoreKind::reaction_time, Modality::written, Direction::cost,
         "six mean reaction times per order");
    need("Sinhalese", "", ScoreKind::error, Modality::spoken, Direction::cost,
         "six mean error rates per order");
    need("Sinhalese", "", ScoreKind::error, Modality::written, Direction::cost,
         "six mean error rates per order");
    return data;
}

} // namespace detail

/// The data bundled with the tool: one acceptability condition and eight
/// rank conditions, plus placeholders naming the externally published raw
/// vectors that full cross-language results additionally require.
inline const BundledData& bundled_data() {
    static const BundledData data = detail::make_bundled_data();
    return data;
}

} // namespace swapdist

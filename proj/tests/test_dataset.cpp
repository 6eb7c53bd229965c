#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "swapdist/dataset.hpp"

using namespace swapdist;
using Catch::Matchers::ContainsSubstring;

namespace {

Condition sample_condition() {
    Condition c;
    c.language = "Testish";
    c.group = "g1";
    c.score_kind = ScoreKind::reaction_time;
    c.modality = Modality::written;
    c.direction = Direction::cost;
    c.scores = {{"SOV", 1.0}, {"SVO", 2.0}, {"OSV", 3.0},
                {"OVS", 4.0}, {"VSO", 5.0}, {"VOS", 6.0}};
    return c;
}

} // namespace

TEST_CASE("enum names round-trip") {
    for (const ScoreKind kind :
         {ScoreKind::acceptability, ScoreKind::acceptability_rank, ScoreKind::frequency,
          ScoreKind::reaction_time, ScoreKind::reaction_time_rank, ScoreKind::error,
          ScoreKind::error_rank})
        CHECK(parse_score_kind(to_string(kind)) == kind);
    for (const Modality modality : {Modality::spoken, Modality::written, Modality::none})
        CHECK(parse_modality(to_string(modality)) == modality);
    for (const Direction direction : {Direction::ease, Direction::cost})
        CHECK(parse_direction(to_string(direction)) == direction);

    CHECK_THROWS_AS(parse_score_kind("vibes"), InputError);
    CHECK_THROWS_AS(parse_modality("signed"), InputError);
    CHECK_THROWS_AS(parse_direction("up"), InputError);

    CHECK(is_rank_kind(ScoreKind::acceptability_rank));
    CHECK(is_rank_kind(ScoreKind::reaction_time_rank));
    CHECK(is_rank_kind(ScoreKind::error_rank));
    CHECK_FALSE(is_rank_kind(ScoreKind::acceptability));
    CHECK_FALSE(is_rank_kind(ScoreKind::frequency));
}

TEST_CASE("condition validation") {
    Condition good = sample_condition();
    CHECK_NOTHROW(validate_condition(good));

    Condition missing = good;
    missing.scores.erase("VOS");
    CHECK_THROWS_AS(validate_condition(missing), InputError);

    Condition extra = good;
    extra.scores["SVV"] = 7.0;
    CHECK_THROWS_AS(validate_condition(extra), InputError);

    Condition rank = good;
    rank.score_kind = ScoreKind::reaction_time_rank;
    rank.scores = {{"SOV", 1}, {"SVO", 2}, {"OSV", 2}, {"OVS", 2}, {"VSO", 3}, {"VOS", 3}};
    CHECK_NOTHROW(validate_condition(rank));

    Condition fractional = rank;
    fractional.scores["SVO"] = 1.5;
    CHECK_THROWS_AS(validate_condition(fractional), InputError);

    Condition zero_rank = rank;
    zero_rank.scores["SOV"] = 0;
    CHECK_THROWS_AS(validate_condition(zero_rank), InputError);

    Condition no_first = rank;
    for (auto& [name, value] : no_first.scores)
        value += 1; // smallest rank becomes 2
    CHECK_THROWS_AS(validate_condition(no_first), InputError);
}

TEST_CASE("ease scores negate into costs exactly once") {
    Condition ease = sample_condition();
    ease.direction = Direction::ease;
    const Condition cost = to_cost(ease);
    CHECK(cost.direction == Direction::cost);
    CHECK(cost.scores.at("SOV") == -1.0);
    CHECK(cost.scores.at("VOS") == -6.0);
    CHECK(to_cost(cost) == cost); // idempotent

    const Condition already = sample_condition();
    CHECK(to_cost(already) == already);
}

TEST_CASE("cost vectors align with an order list") {
    const std::vector<Order> orders = all_orders("SOV"); // OSV OVS SOV SVO VOS VSO
    Condition ease = sample_condition();
    ease.direction = Direction::ease;
    ease.scores = {{"SOV", 1.05}, {"OSV", 0.80}, {"SVO", 0.36},
                   {"OVS", 0.30}, {"VSO", -0.14}, {"VOS", -0.36}};
    const std::vector<double> costs = cost_vector(ease, orders);
    CHECK(costs == std::vector<double>{-0.80, -0.30, -1.05, -0.36, 0.36, 0.14});

    const std::vector<Order> strangers = all_orders("ABC");
    CHECK_THROWS_AS(cost_vector(ease, strangers), InputError);
}

TEST_CASE("contrast chains expand to rank vectors") {
    const auto orders_of = [](std::initializer_list<const char*> names) {
        std::vector<Order> out;
        for (const char* name : names)
            out.emplace_back(name);
        return out;
    };

    const ContrastChain malayalam{
        {orders_of({"SOV", "OSV"}), orders_of({"SVO", "OVS"}), orders_of({"VSO", "VOS"})}};
    const std::map<std::string, double> mal = ranks_from_contrasts(malayalam);
    CHECK(mal.at("SOV") == 1);
    CHECK(mal.at("OSV") == 1);
    CHECK(mal.at("SVO") == 2);
    CHECK(mal.at("OVS") == 2);
    CHECK(mal.at("VSO") == 3);
    CHECK(mal.at("VOS") == 3);

    const ContrastChain korean{{orders_of({"SOV"}), orders_of({"OSV"}),
                                orders_of({"SVO", "OVS"}), orders_of({"VSO", "VOS"})}};
    const std::map<std::string, double> kor = ranks_from_contrasts(korean);
    CHECK(kor.at("SOV") == 1);
    CHECK(kor.at("OSV") == 2);
    CHECK(kor.at("SVO") == 3);
    CHECK(kor.at("VOS") == 4);

    const ContrastChain flat{
        {orders_of({"SOV", "SVO", "OSV", "OVS", "VSO", "VOS"})}};
    for (const auto& [name, rank] : ranks_from_contrasts(flat))
        CHECK(rank == 1);

    CHECK_THROWS_AS(ranks_from_contrasts(ContrastChain{}), InputError);
    CHECK_THROWS_AS(ranks_from_contrasts(ContrastChain{{orders_of({})}}), InputError);
    CHECK_THROWS_AS(
        ranks_from_contrasts(ContrastChain{{orders_of({"SOV"}), orders_of({"SOV"})}}),
        InputError); // duplicate order
    CHECK_THROWS_AS(ranks_from_contrasts(ContrastChain{{orders_of({"SOV", "SVO"})}}),
                    InputError); // not a partition
}

TEST_CASE("csv loading enforces the schema") {
    const std::string header(kCsvHeader);

    SECTION("well-formed input with comments, blanks, and CRLF") {
        std::istringstream in("# comment\r\n\r\n" + header + "\r\n" +
                              "Testish,g1,reaction_time,written,cost,1,2,3,4,5,6\r\n");
        const std::vector<Condition> conditions = load_csv_stream(in);
        REQUIRE(conditions.size() == 1);
        CHECK(conditions[0] == sample_condition());
    }
    SECTION("header is mandatory and exact") {
        std::istringstream wrong("language,group\nX,,acceptability,spoken,ease,1,2,3,4,5,6\n");
        CHECK_THROWS_WITH(load_csv_stream(wrong), ContainsSubstring("header"));
        std::istringstream empty("# only a comment\n");
        CHECK_THROWS_WITH(load_csv_stream(empty), ContainsSubstring("no header line"));
    }
    SECTION("field-count errors carry the line number") {
        std::istringstream in(header + "\nX,,acceptability,spoken,ease,1,2,3\n");
        CHECK_THROWS_WITH(load_csv_stream(in), ContainsSubstring("line 2"));
    }
    SECTION("numeric errors carry line and column") {
        std::istringstream in("# note\n" + header +
                              "\nX,,acceptability,spoken,ease,1,2,oops,4,5,6\n");
        CHECK_THROWS_WITH(load_csv_stream(in),
                          ContainsSubstring("line 3") && ContainsSubstring("OSV"));
    }
    SECTION("enum and identity errors become parse errors") {
        std::istringstream bad_kind(header + "\nX,,vibes,spoken,ease,1,2,3,4,5,6\n");
        CHECK_THROWS_AS(load_csv_stream(bad_kind), ParseError);
        std::istringstream bad_direction(header + "\nX,,acceptability,spoken,up,1,2,3,4,5,6\n");
        CHECK_THROWS_AS(load_csv_stream(bad_direction), ParseError);
        std::istringstream no_language(header + "\n,,acceptability,spoken,ease,1,2,3,4,5,6\n");
        CHECK_THROWS_AS(load_csv_stream(no_language), ParseError);
        std::istringstream bad_rank(header +
                                    "\nX,,error_rank,spoken,cost,1,2,3,4,5,6.5\n");
        CHECK_THROWS_AS(load_csv_stream(bad_rank), ParseError);
    }
    SECTION("missing files are reported") {
        CHECK_THROWS_AS(load_csv("/nonexistent/file.csv"), InputError);
    }
}

TEST_CASE("serialization round-trips") {
    const std::vector<Condition>& conditions = bundled_data().conditions;
    const std::string csv = to_csv(conditions);
    CHECK(csv.rfind(std::string(kCsvHeader) + "\n", 0) == 0);
    std::istringstream in(csv);
    CHECK(load_csv_stream(in) == conditions);
}

TEST_CASE("bundled data inventory") {
    const BundledData& data = bundled_data();
    REQUIRE(data.conditions.size() == 9);
    REQUIRE(data.external.size() == 8);

    std::set<std::string> keys;
    for (const Condition& c : data.conditions) {
        CHECK_NOTHROW(validate_condition(c));
        CHECK(keys.insert(c.key()).second); // keys are unique
    }
    for (const ExternalDataNeed& need : data.external)
        CHECK_FALSE(keys.count(need.key())); // needs name data we do not have

    const Condition& acceptability = data.conditions[0];
    CHECK(acceptability.language == "Malayalam");
    CHECK(acceptability.direction == Direction::ease);
    CHECK(acceptability.scores.at("SOV") == 1.05);
    CHECK(acceptability.scores.at("VOS") == -0.36);

    int korean = 0;
    for (const Condition& c : data.conditions)
        if (c.language == "Korean") {
            ++korean;
            CHECK(c.scores == std::map<std::string, double>{{"SOV", 1},
                                                            {"OSV", 2},
                                                            {"SVO", 3},
                                                            {"OVS", 3},
                                                            {"VSO", 4},
                                                            {"VOS", 4}});
        }
    CHECK(korean == 3);
}

TEST_CASE("shipped data files match the built-in data") {
    const std::string dir(SWAPDIST_DATA_DIR);
    CHECK(load_csv(dir + "/bundled.csv") == bundled_data().conditions);
    CHECK(load_csv(dir + "/external_template.csv").empty());
}

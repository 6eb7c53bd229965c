#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "swapdist/dataset.hpp"
#include "swapdist/monte_carlo.hpp"
#include "swapdist/significance.hpp"

using namespace swapdist;

namespace {

const std::vector<double> kD = {0, 1, 1, 2, 2, 3};
const std::vector<double> kP = {0, 0, 1, 1, 2, 2};
const std::vector<double> kC = {0, 1, 1, 1, 1, 1};

ConditionSet bundled_language(const std::string& language) {
    ConditionSet set;
    for (const Condition& condition : bundled_data().conditions)
        if (condition.language == language)
            set.conditions.push_back(condition);
    return set;
}

} // namespace

TEST_CASE("splitmix streams are deterministic and decorrelated") {
    SplitMix64 a(42), b(42), c(43);
    std::vector<std::uint64_t> from_a, from_b;
    bool any_difference = false;
    for (int i = 0; i < 100; ++i) {
        const std::uint64_t va = a.next();
        CHECK(va == b.next());
        any_difference = any_difference || va != c.next();
    }
    CHECK(any_difference);

    SplitMix64 s0 = randomization_stream(1, 0);
    SplitMix64 s1 = randomization_stream(1, 1);
    SplitMix64 t0 = randomization_stream(2, 0);
    const std::uint64_t v0 = s0.next();
    CHECK(v0 != s1.next());
    CHECK(v0 != t0.next());
    CHECK(randomization_stream(1, 0).next() == v0);
}

TEST_CASE("bounded draws cover the range") {
    SplitMix64 rng(7);
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 600; ++i) {
        const std::uint64_t draw = rng.below(6);
        CHECK(draw < 6);
        seen.insert(draw);
    }
    CHECK(seen.size() == 6);
}

TEST_CASE("global statistic sums per-condition correlations") {
    const std::vector<std::vector<double>> korean = {
        {1, 2, 3, 3, 4, 4}, {1, 2, 3, 3, 4, 4}, {1, 2, 3, 3, 4, 4}};
    CHECK(global_S(kD, korean) == Rational(11, 5));
    CHECK(global_S(kD, {korean[0]}) == tau_a(kD, korean[0]).tau);
    CHECK_THROWS_AS(global_S(kD, {}), InputError);
    CHECK_THROWS_AS(global_S(kD, {{1, 2, 3}}), InputError);

    // Additivity over concatenation.
    const std::vector<std::vector<double>> more = {{1, 1, 2, 2, 3, 3}, {1, 3, 2, 2, 3, 3}};
    std::vector<std::vector<double>> both = korean;
    both.insert(both.end(), more.begin(), more.end());
    CHECK(global_S(kD, both) == global_S(kD, korean) + global_S(kD, more));
}

TEST_CASE("bundled condition sets reproduce the partial sums") {
    const ConditionSet korean = bundled_language("Korean");
    CHECK(korean.conditions.size() == 3);
    CHECK(global_S(korean, korean.measure_for(MeasureKind::swap)) == Rational(11, 5));
    CHECK(global_S(korean, korean.measure_for(MeasureKind::head_to_end)) == Rational(12, 5));
    CHECK(global_S(korean, korean.measure_for(MeasureKind::canonical_flag)) == Rational(1));

    const ConditionSet malayalam = bundled_language("Malayalam");
    CHECK(malayalam.conditions.size() == 2);
    CHECK(global_S(malayalam, malayalam.measure_for(MeasureKind::swap)) == Rational(23, 15));
    CHECK(global_S(malayalam, malayalam.measure_for(MeasureKind::head_to_end)) ==
          Rational(8, 5));
    CHECK(global_S(malayalam, malayalam.measure_for(MeasureKind::canonical_flag)) ==
          Rational(3, 5));

    const ConditionSet sinhalese = bundled_language("Sinhalese");
    CHECK(sinhalese.conditions.size() == 4);
    CHECK(global_S(sinhalese, sinhalese.measure_for(MeasureKind::swap)) == Rational(6, 5));
}

TEST_CASE("randomization test determinism and schedule independence") {
    const std::vector<std::vector<double>> ys = {{1, 2, 3, 3, 4, 4}, {1, 3, 2, 2, 3, 3}};
    const GlobalResult base = monte_carlo_right_pvalue(kD, ys, 10007, 5, 1);
    CHECK(base.trials == 10007);
    CHECK(base.seed == 5);
    CHECK(base.statistic == Rational(11, 15) + Rational(7, 15));
    for (const unsigned workers : {2u, 3u, 5u}) {
        const GlobalResult other = monte_carlo_right_pvalue(kD, ys, 10007, 5, workers);
        CHECK(other.tail == base.tail);
    }
    const GlobalResult reseeded = monte_carlo_right_pvalue(kD, ys, 10007, 6, 1);
    CHECK(reseeded.tail != base.tail); // different randomizations, almost surely

    CHECK_THROWS_AS(monte_carlo_right_pvalue(kD, ys, 0, 1, 1), InputError);
}

TEST_CASE("all-tied scores make every randomization hit the tail") {
    const std::vector<std::vector<double>> flat = {{1, 1, 1, 1, 1, 1}};
    const GlobalResult result = monte_carlo_right_pvalue(kD, flat, 1, 123, 1);
    CHECK(result.statistic == Rational(0));
    CHECK(result.tail == 1);
    CHECK(result.p_estimate() == 1.0);
    CHECK(result.min_nonzero_p() == Rational(1));

    const GlobalResult more = monte_carlo_right_pvalue(kD, flat, 500, 123, 1);
    CHECK(more.tail == 500);
}

TEST_CASE("monte carlo approximates the exact single-condition test") {
    const std::uint64_t trials = 50000;
    const std::vector<std::vector<double>> cases = {
        {1, 2, 3, 3, 4, 4}, {1, 3, 2, 2, 3, 3}, {-1.05, -0.80, -0.36, -0.30, 0.14, 0.36}};
    for (const std::vector<double>& costs : cases) {
        const double exact = exact_right_pvalue(kD, costs).right_p.value();
        const GlobalResult mc = monte_carlo_right_pvalue(kD, {costs}, trials, 3, 1);
        const double se = std::sqrt(exact * (1 - exact) / static_cast<double>(trials));
        CHECK(std::abs(mc.p_estimate() - exact) <= 4 * se);
    }
}

TEST_CASE("difference test reuses one shuffle per condition") {
    const std::vector<std::vector<double>> ys = {{1, 2, 3, 3, 4, 4}};
    const GlobalResult same = monte_carlo_diff_pvalue(kD, kD, ys, 100, 9, 1);
    CHECK(same.statistic == Rational(0));
    CHECK(same.tail == 100); // d - d is identically zero under any shuffle

    const double exact = exact_diff_right_pvalue(kD, kC, ys[0]).right_p.value();
    const GlobalResult mc = monte_carlo_diff_pvalue(kD, kC, ys, 50000, 3, 1);
    const double se = std::sqrt(exact * (1 - exact) / 50000.0);
    CHECK(std::abs(mc.p_estimate() - exact) <= 4 * se);

    for (const unsigned workers : {2u, 4u}) {
        const GlobalResult other = monte_carlo_diff_pvalue(kD, kC, ys, 10007, 5, workers);
        const GlobalResult base = monte_carlo_diff_pvalue(kD, kC, ys, 10007, 5, 1);
        CHECK(other.tail == base.tail);
    }
    CHECK_THROWS_AS(monte_carlo_diff_pvalue(kD, kP, ys, 0, 1, 1), InputError);
    CHECK_THROWS_AS(monte_carlo_diff_pvalue(kD, std::vector<double>{1, 2}, ys, 10, 1, 1),
                    InputError);
}

TEST_CASE("condition-set wrappers match the vector interface") {
    const ConditionSet korean = bundled_language("Korean");
    const std::vector<Order> orders = all_orders("SOV");
    std::vector<std::vector<double>> ys;
    for (const Condition& c : korean.conditions)
        ys.push_back(cost_vector(c, orders));
    const DistanceMeasure d = korean.measure_for(MeasureKind::swap);

    const GlobalResult via_set = monte_carlo_right_pvalue(korean, d, 2000, 21, 1);
    const GlobalResult via_vectors = monte_carlo_right_pvalue(d.values(orders), ys, 2000, 21, 1);
    CHECK(via_set.tail == via_vectors.tail);
    CHECK(via_set.statistic == via_vectors.statistic);

    const GlobalResult diff_set =
        monte_carlo_diff_pvalue(korean, d, korean.measure_for(MeasureKind::canonical_flag),
                                2000, 21, 1);
    const GlobalResult diff_vectors = monte_carlo_diff_pvalue(
        d.values(orders), korean.measure_for(MeasureKind::canonical_flag).values(orders), ys,
        2000, 21, 1);
    CHECK(diff_set.tail == diff_vectors.tail);
}

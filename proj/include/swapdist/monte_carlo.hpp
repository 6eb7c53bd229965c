#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "dataset.hpp"
#include "errors.hpp"
#include "kendall.hpp"
#include "measures.hpp"
#include "rational.hpp"

namespace swapdist {

/// SplitMix64 finalizer: a bijective 64-bit mix.
inline constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// SplitMix64 stream. Cheap to seed, so every randomization trial gets its
/// own stream and results do not depend on how trials are scheduled.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t state) : state_(state) {}

    constexpr std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix64(state_);
    }

    /// Uniform draw from [0, bound) by rejection, so small bounds stay exact.
    constexpr std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
        std::uint64_t draw = next();
        while (draw >= limit)
            draw = next();
        return draw % bound;
    }

private:
    std::uint64_t state_;
};

/// Decorrelated per-trial stream for a (seed, trial index) pair.
inline constexpr SplitMix64 randomization_stream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(mix64(seed + 0x9E3779B97F4A7C15ull) ^
                      mix64(index * 0xBF58476D1CE4E5B9ull + 0x94D049BB133111EBull));
}

namespace detail {

inline void shuffle_in_place(std::vector<double>& values, SplitMix64& rng) {
    for (std::size_t k = values.size() - 1; k > 0; --k) {
        const std::size_t j = static_cast<std::size_t>(rng.below(k + 1));
        std::swap(values[k], values[j]);
    }
}

inline void require_global_inputs(std::size_t x_size,
                                  const std::vector<std::vector<double>>& ys) {
    if (ys.empty())
        throw InputError("global statistic needs at least one condition");
    for (const std::vector<double>& y : ys)
        if (y.size() != x_size)
            throw InputError("every condition must score the same items as the measure vector");
}

} // namespace detail

/// Sum of tau_a over conditions, exact.
inline Rational global_S(std::span<const double> x, const std::vector<std::vector<double>>& ys) {
    detail::require_global_inputs(x.size(), ys);
    Rational sum(0);
    for (const std::vector<double>& y : ys)
        sum = sum + tau_a(x, y).tau;
    return sum;
}

/// Result of a Monte Carlo randomization test on a sum-of-tau statistic.
struct GlobalResult {
    Rational statistic{0};   // observed S
    std::uint64_t tail = 0;  // randomizations with S' >= S
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;

    double p_estimate() const { return static_cast<double>(tail) / static_cast<double>(trials); }

    /// Resolution of the estimate; a zero tail is reported as "< 1/trials".
    Rational min_nonzero_p() const { return Rational(1, static_cast<std::int64_t>(trials)); }
};

namespace detail {

/// Shared Monte Carlo driver. excess_of(y) must return the integer tau
/// numerator contribution of one condition; summed over conditions it orders
/// S values exactly because every condition shares the pair-count
/// denominator.
template <typename ExcessFn>
inline GlobalResult monte_carlo_tail(const std::vector<std::vector<double>>& ys,
                                     std::int64_t observed_excess, std::uint64_t trials,
                                     std::uint64_t seed, unsigned workers, ExcessFn excess_of) {
    if (trials == 0)
        throw InputError("trial count must be positive");
    if (workers == 0)
        workers = 1;

    const auto run_chunk = [&](std::uint64_t begin, std::uint64_t end) {
        std::uint64_t tail = 0;
        std::vector<std::vector<double>> shuffled = ys;
        for (std::uint64_t t = begin; t < end; ++t) {
            SplitMix64 rng = randomization_stream(seed, t);
            std::int64_t excess = 0;
            for (std::size_t c = 0; c < ys.size(); ++c) {
                shuffled[c] = ys[c];
                shuffle_in_place(shuffled[c], rng);
                excess += excess_of(shuffled[c]);
            }
            if (excess >= observed_excess)
                ++tail;
        }
        return tail;
    };

    std::uint64_t tail = 0;
    if (workers == 1 || trials < workers) {
        tail = run_chunk(0, trials);
    } else {
        std::vector<std::uint64_t> tails(workers, 0);
        std::vector<std::thread> threads;
        const std::uint64_t chunk = trials / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t begin = w * chunk;
            const std::uint64_t end = (w + 1 == workers) ? trials : begin + chunk;
            threads.emplace_back([&, w, begin, end] { tails[w] = run_chunk(begin, end); });
        }
        for (std::thread& thread : threads)
            thread.join();
        for (const std::uint64_t part : tails)
            tail += part;
    }

    GlobalResult result;
    result.tail = tail;
    result.trials = trials;
    result.seed = seed;
    return result;
}

} // namespace detail

/// Right-sided Monte Carlo test of S = sum of tau_a(x, y_c). Every trial
/// reshuffles each condition's scores independently; the tail counts trials
/// with S' >= S. Identical results for any worker count.
inline GlobalResult monte_carlo_right_pvalue(std::span<const double> x,
                                             const std::vector<std::vector<double>>& ys,
                                             std::uint64_t trials, std::uint64_t seed,
                                             unsigned workers = 1) {
    detail::require_global_inputs(x.size(), ys);
    std::int64_t observed = 0;
    for (const std::vector<double>& y : ys)
        observed += detail::concordance_excess(x, y);
    GlobalResult result = detail::monte_carlo_tail(
        ys, observed, trials, seed, workers,
        [&](const std::vector<double>& y) { return detail::concordance_excess(x, y); });
    result.statistic = global_S(x, ys);
    return result;
}

/// Right-sided Monte Carlo test of S = sum over conditions of
/// tau_a(x1, y_c) - tau_a(x2, y_c). Each trial shuffles a condition's scores
/// once and reuses the shuffle for both measures, preserving their coupling.
inline GlobalResult monte_carlo_diff_pvalue(std::span<const double> x1,
                                            std::span<const double> x2,
                                            const std::vector<std::vector<double>>& ys,
                                            std::uint64_t trials, std::uint64_t seed,
                                            unsigned workers = 1) {
    detail::require_global_inputs(x1.size(), ys);
    if (x1.size() != x2.size())
        throw InputError("measure vectors must have equal length");
    std::int64_t observed = 0;
    for (const std::vector<double>& y : ys)
        observed += detail::concordance_excess(x1, y) - detail::concordance_excess(x2, y);
    GlobalResult result =
        detail::monte_carlo_tail(ys, observed, trials, seed, workers,
                                 [&](const std::vector<double>& y) {
                                     return detail::concordance_excess(x1, y) -
                                            detail::concordance_excess(x2, y);
                                 });
    result.statistic = global_S(x1, ys) - global_S(x2, ys);
    return result;
}

/// Conditions pooled into one global statistic, plus the measure bindings
/// every per-condition correlation uses.
struct ConditionSet {
    std::vector<Condition> conditions;
    Order canonical{"SOV"};
    char head = 'V';

    DistanceMeasure measure_for(MeasureKind kind) const {
        return DistanceMeasure{kind, canonical, head};
    }
};

namespace detail {

inline std::vector<std::vector<double>> cost_vectors(const ConditionSet& set,
                                                     const std::vector<Order>& orders) {
    if (set.conditions.empty())
        throw InputError("global statistic needs at least one condition");
    std::vector<std::vector<double>> ys;
    ys.reserve(set.conditions.size());
    for (const Condition& condition : set.conditions)
        ys.push_back(cost_vector(condition, orders));
    return ys;
}

} // namespace detail

inline Rational global_S(const ConditionSet& set, const DistanceMeasure& measure) {
    const std::vector<Order> orders = all_orders(set.canonical.str());
    return global_S(measure.values(orders), detail::cost_vectors(set, orders));
}

inline GlobalResult monte_carlo_right_pvalue(const ConditionSet& set,
                                             const DistanceMeasure& measure,
                                             std::uint64_t trials, std::uint64_t seed,
                                             unsigned workers = 1) {
    const std::vector<Order> orders = all_orders(set.canonical.str());
    return monte_carlo_right_pvalue(measure.values(orders), detail::cost_vectors(set, orders),
                                    trials, seed, workers);
}

inline GlobalResult monte_carlo_diff_pvalue(const ConditionSet& set, const DistanceMeasure& m1,
                                            const DistanceMeasure& m2, std::uint64_t trials,
                                            std::uint64_t seed, unsigned workers = 1) {
    const std::vector<Order> orders = all_orders(set.canonical.str());
    return monte_carlo_diff_pvalue(m1.values(orders), m2.values(orders),
                                   detail::cost_vectors(set, orders), trials, seed, workers);
}

} // namespace swapdist

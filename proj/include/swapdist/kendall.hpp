#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "measures.hpp"
#include "order.hpp"
#include "rational.hpp"

namespace swapdist {

/// Exhaustive permutation scans run up to n! = 40320.
inline constexpr int kMaxExhaustiveSize = 8;

struct PairCounts {
    std::int64_t concordant = 0;
    std::int64_t discordant = 0;
    std::int64_t neither = 0; // tied in at least one coordinate
    int n = 0;

    std::int64_t total_pairs() const {
        return static_cast<std::int64_t>(n) * (n - 1) / 2;
    }
};

/// Sizes of the groups of equal values within one variable, descending.
struct TieStructure {
    std::vector<int> group_sizes;

    int n() const { return std::accumulate(group_sizes.begin(), group_sizes.end(), 0); }
    int distinct_values() const { return static_cast<int>(group_sizes.size()); }

    /// Within-group pair count: sum of C(size, 2).
    std::int64_t tied_pairs() const {
        std::int64_t total = 0;
        for (const int t : group_sizes)
            total += static_cast<std::int64_t>(t) * (t - 1) / 2;
        return total;
    }

    /// Product of size! over groups: the permutations mapping each group onto
    /// itself, i.e. those that leave the value sequence unchanged.
    std::int64_t group_permutations() const {
        std::int64_t product = 1;
        for (const int t : group_sizes)
            for (int k = 2; k <= t; ++k)
                product *= k;
        return product;
    }

    friend bool operator==(const TieStructure&, const TieStructure&) = default;
};

inline TieStructure tie_structure(std::span<const double> values) {
    std::map<double, int> counts;
    for (const double v : values)
        ++counts[v];
    TieStructure out;
    out.group_sizes.reserve(counts.size());
    for (const auto& [value, count] : counts)
        out.group_sizes.push_back(count);
    std::sort(out.group_sizes.begin(), out.group_sizes.end(), std::greater<>());
    return out;
}

struct TauResult {
    Rational tau; // (concordant - discordant) / C(n, 2)
    PairCounts counts;
    TieStructure tie_x, tie_y;
};

namespace detail {

/// Concordant-minus-discordant pair count; pairs tied in either coordinate
/// contribute nothing.
inline std::int64_t concordance_excess(std::span<const double> x, std::span<const double> y) {
    const int n = static_cast<int>(x.size());
    std::int64_t excess = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const int dx = (x[i] < x[j]) ? 1 : (x[i] > x[j]) ? -1 : 0;
            const int dy = (y[i] < y[j]) ? 1 : (y[i] > y[j]) ? -1 : 0;
            if (dx != 0 && dy != 0)
                excess += (dx == dy) ? 1 : -1;
        }
    return excess;
}

} // namespace detail

/// Tie-aware Kendall correlation with the full-pair denominator C(n, 2):
/// (concordant - discordant) / C(n, 2). No tie adjustment, so heavy ties
/// shrink the attainable magnitude but never make the value undefined.
inline TauResult tau_a(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw InputError("correlation inputs differ in length");
    const int n = static_cast<int>(x.size());
    if (n < 2)
        throw InputError("correlation needs at least two observations");
    TauResult result;
    result.counts.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const int dx = (x[i] < x[j]) ? 1 : (x[i] > x[j]) ? -1 : 0;
            const int dy = (y[i] < y[j]) ? 1 : (y[i] > y[j]) ? -1 : 0;
            if (dx == 0 || dy == 0)
                ++result.counts.neither;
            else if (dx == dy)
                ++result.counts.concordant;
            else
                ++result.counts.discordant;
        }
    result.tau = Rational(result.counts.concordant - result.counts.discordant,
                          result.counts.total_pairs());
    result.tie_x = tie_structure(x);
    result.tie_y = tie_structure(y);
    return result;
}

/// Attainable tau interval for the given tie patterns: ties alone force at
/// least max(sum C(t,2), sum C(u,2)) neutral pairs out of C(n,2), capping
/// |tau| symmetrically below 1.
inline std::pair<Rational, Rational> tau_range_given_ties(const TieStructure& tie_x,
                                                          const TieStructure& tie_y, int n) {
    if (n < 2)
        throw InputError("tie bound needs at least two observations");
    if (tie_x.n() != n || tie_y.n() != n)
        throw InputError("tie group sizes do not sum to the sample size");
    const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
    const std::int64_t forced = std::max(tie_x.tied_pairs(), tie_y.tied_pairs());
    const Rational hi(pairs - forced, pairs);
    return {-hi, hi};
}

/// Tie pattern of a measure's column over all orders of its alphabet.
inline TieStructure measure_tie_structure(const DistanceMeasure& measure) {
    const std::vector<Order> orders = all_orders(measure.canonical.str());
    return tie_structure(measure.values(orders));
}

/// Largest tau the measure's own ties permit, assuming untied scores.
inline Rational max_tau_given_measure(const DistanceMeasure& measure) {
    const TieStructure ties = measure_tie_structure(measure);
    const int n = ties.n();
    TieStructure distinct;
    distinct.group_sizes.assign(static_cast<std::size_t>(n), 1);
    return tau_range_given_ties(ties, distinct, n).second;
}

/// True when the correlation already sits at the ceiling its measure's tie
/// pattern imposes: no replacement of the scores could push it higher.
inline bool is_max_given_measure(const TauResult& result, const DistanceMeasure& measure) {
    return result.tau == max_tau_given_measure(measure);
}

struct MaxGivenSample {
    Rational max_tau;
    bool achieved = false; // the observed pairing attains the maximum
};

/// Maximum tau over all reorderings of the observed y values: the ceiling
/// imposed by this very sample rather than by the measure's ties alone.
inline MaxGivenSample max_given_sample(std::span<const double> x, std::span<const double> y) {
    const TauResult observed = tau_a(x, y);
    const int n = static_cast<int>(x.size());
    if (n > kMaxExhaustiveSize)
        throw SizeError("exhaustive permutation scan supports up to " +
                        std::to_string(kMaxExhaustiveSize) + " observations");
    std::vector<double> arranged(y.begin(), y.end());
    std::sort(arranged.begin(), arranged.end());
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    do {
        best = std::max(best, detail::concordance_excess(x, arranged));
    } while (std::next_permutation(arranged.begin(), arranged.end()));
    MaxGivenSample out;
    out.max_tau = Rational(best, observed.counts.total_pairs());
    out.achieved = observed.tau == out.max_tau;
    return out;
}

/// Strict orderings among the three per-measure correlations that follow from
/// threshold positions alone: the canonical-flag correlation can never leave
/// [-1/3, 1/3] and the head-position correlation never leaves [-4/5, 4/5], so
/// a swap-distance correlation beyond those rails must beat (or trail) them.
struct Dominance {
    bool beats_p = false;
    bool beats_c = false;
    bool trails_p = false;
    bool trails_c = false;
};

inline Dominance dominance_check(const Rational& tau_d,
                                 [[maybe_unused]] const Rational& tau_p,
                                 [[maybe_unused]] const Rational& tau_c) {
    Dominance out;
    out.beats_c = tau_d > Rational(1, 3);
    out.beats_p = tau_d > Rational(4, 5);
    out.trails_c = tau_d < Rational(-1, 3);
    out.trails_p = tau_d < Rational(-4, 5);
    return out;
}

} // namespace swapdist

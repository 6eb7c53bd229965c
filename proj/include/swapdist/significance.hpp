#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "kendall.hpp"

namespace swapdist {

/// Outcome of an exact right-sided permutation test. The p-value is the
/// fraction of all n! reorderings of the scores whose statistic meets or
/// exceeds the observed one, so ties at the observed value count into the
/// tail and 1/n! <= right_p <= 1 always holds.
struct TestResult {
    Rational statistic;
    Rational right_p;           // tail count / n!
    std::int64_t m_at_stat = 0; // reorderings attaining the observed statistic exactly
    bool is_min_p_given_measure = false;
};

namespace detail {

inline std::int64_t factorial(int n) {
    std::int64_t f = 1;
    for (int k = 2; k <= n; ++k)
        f *= k;
    return f;
}

/// Runs body over every arrangement of `values` in lexicographic order
/// (n! iterations including duplicates, so tail counts stay out of n!).
template <typename Body>
void for_each_arrangement(std::span<const double> values, Body&& body) {
    const int n = static_cast<int>(values.size());
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<double> arranged(static_cast<std::size_t>(n));
    do {
        for (int i = 0; i < n; ++i)
            arranged[static_cast<std::size_t>(i)] = values[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        body(std::span<const double>(arranged));
    } while (std::next_permutation(idx.begin(), idx.end()));
}

inline void require_exact_test_size(std::size_t n) {
    if (n > kMaxExhaustiveSize)
        throw SizeError("exact test enumerates n! reorderings; supported up to n = " +
                        std::to_string(kMaxExhaustiveSize));
}

} // namespace detail

/// Exact right-sided test of tau(x, y) against reorderings of y. The test is
/// minimal (is_min_p_given_measure) when only the reorderings that leave the
/// value sequence unchanged reach the tail, i.e. the tail count equals the
/// product of the x tie-group factorials.
inline TestResult exact_right_pvalue(std::span<const double> x, std::span<const double> y) {
    const TauResult observed = tau_a(x, y); // validates lengths
    detail::require_exact_test_size(x.size());
    const std::int64_t observed_excess =
        observed.counts.concordant - observed.counts.discordant;
    std::int64_t tail = 0, at_stat = 0;
    detail::for_each_arrangement(y, [&](std::span<const double> arranged) {
        const std::int64_t excess = detail::concordance_excess(x, arranged);
        if (excess >= observed_excess)
            ++tail;
        if (excess == observed_excess)
            ++at_stat;
    });
    TestResult result;
    result.statistic = observed.tau;
    result.right_p = Rational(tail, detail::factorial(static_cast<int>(x.size())));
    result.m_at_stat = at_stat;
    result.is_min_p_given_measure = tail == observed.tie_x.group_permutations();
    return result;
}

/// Exact right-sided test of tau(x1, y) - tau(x2, y); each reordering of y is
/// applied to both correlations at once. No analytic floor exists for the
/// difference statistic, so is_min_p_given_measure stays false.
inline TestResult exact_diff_right_pvalue(std::span<const double> x1,
                                          std::span<const double> x2,
                                          std::span<const double> y) {
    const TauResult first = tau_a(x1, y);
    const TauResult second = tau_a(x2, y); // validates x2 length against y
    detail::require_exact_test_size(y.size());
    const std::int64_t observed_excess =
        (first.counts.concordant - first.counts.discordant) -
        (second.counts.concordant - second.counts.discordant);
    std::int64_t tail = 0, at_stat = 0;
    detail::for_each_arrangement(y, [&](std::span<const double> arranged) {
        const std::int64_t excess = detail::concordance_excess(x1, arranged) -
                                    detail::concordance_excess(x2, arranged);
        if (excess >= observed_excess)
            ++tail;
        if (excess == observed_excess)
            ++at_stat;
    });
    TestResult result;
    result.statistic = first.tau - second.tau;
    result.right_p = Rational(tail, detail::factorial(static_cast<int>(y.size())));
    result.m_at_stat = at_stat;
    return result;
}

/// Smallest right-sided p-value the measure's tie pattern allows with untied
/// scores: the reorderings fixing the measure's value sequence always land in
/// the tail, so p >= (product of tie-group factorials) / n!.
inline Rational pvalue_lower_bound(const DistanceMeasure& measure) {
    const TieStructure ties = measure_tie_structure(measure);
    return {ties.group_permutations(), detail::factorial(ties.n())};
}

/// Holm step-down adjustment, returned in the input order: ascending by raw
/// p, each entry becomes max(previous adjusted, min(1, (k - i) * p)).
template <typename P>
std::vector<P> holm_adjust(const std::vector<P>& pvalues) {
    if (pvalues.empty())
        throw InputError("no p-values to adjust");
    for (const P& p : pvalues)
        if (p < P(0) || p > P(1))
            throw InputError("p-value outside [0, 1]");
    const std::size_t k = pvalues.size();
    std::vector<std::size_t> by_p(k);
    std::iota(by_p.begin(), by_p.end(), std::size_t{0});
    std::stable_sort(by_p.begin(), by_p.end(),
                     [&](std::size_t a, std::size_t b) { return pvalues[a] < pvalues[b]; });
    std::vector<P> adjusted(k);
    P running = P(0);
    for (std::size_t i = 0; i < k; ++i) {
        const P scaled = P(static_cast<std::int64_t>(k - i)) * pvalues[by_p[i]];
        running = std::max(running, std::min(P(1), scaled));
        adjusted[by_p[i]] = running;
    }
    return adjusted;
}

} // namespace swapdist

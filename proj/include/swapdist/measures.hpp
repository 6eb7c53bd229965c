#pragma once

#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "order.hpp"

namespace swapdist {

/// Signed rotation, in degrees, placing `order` onto `canonical` when the six
/// three-constituent orders are laid out on a circle; one adjacent swap is 60
/// degrees, so |angle| / 60 == swap_distance. The +60 neighbor of the
/// canonical order swaps its last two constituents, the -60 neighbor swaps its
/// first two; the antipode reports +180. Three constituents only.
inline int rotation_angle(const Order& order, const Order& canonical) {
    require_same_alphabet(order, canonical);
    if (order.size() != 3)
        throw SizeError("rotation angle is defined for three constituents only");
    static constexpr int kAngles[6] = {0, 60, 120, 180, -120, -60};
    Order v = canonical;
    for (int step = 0; step < 6; ++step) {
        if (v == order)
            return kAngles[step];
        v = v.with_adjacent_swap(step % 2 == 0 ? 1 : 0); // walk the six-cycle
    }
    throw InputError("order \"" + order.str() + "\" not found on the ring");
}

/// Distance of the head constituent from the final position: 0 when last.
inline int head_distance_to_end(const Order& order, char head) {
    const int pos = order.position_of(head);
    if (pos < 0)
        throw InputError(std::string("head '") + head + "' does not occur in order \"" +
                         order.str() + "\"");
    return order.size() - 1 - pos;
}

/// 0 for the canonical order itself, 1 for every other order.
inline int canonical_indicator(const Order& order, const Order& canonical) {
    require_same_alphabet(order, canonical);
    return order == canonical ? 0 : 1;
}

enum class MeasureKind {
    swap,           // adjacent-swap distance to the canonical order (d)
    head_to_end,    // head distance to the final position (p)
    canonical_flag, // non-canonical indicator (c)
};

/// One of the three per-order distance measures, bound to a canonical order
/// (and, for head_to_end, a head constituent from the same alphabet).
struct DistanceMeasure {
    MeasureKind kind = MeasureKind::swap;
    Order canonical;
    char head = 'V';

    int value(const Order& order) const {
        switch (kind) {
        case MeasureKind::swap:
            return swap_distance(order, canonical);
        case MeasureKind::head_to_end:
            return head_distance_to_end(order, head);
        case MeasureKind::canonical_flag:
            return canonical_indicator(order, canonical);
        }
        throw InputError("unknown measure kind");
    }

    /// Measure column aligned with the given order list.
    std::vector<double> values(const std::vector<Order>& orders) const {
        std::vector<double> out;
        out.reserve(orders.size());
        for (const Order& o : orders)
            out.push_back(static_cast<double>(value(o)));
        return out;
    }

    /// Conventional single-letter label: d (swap), p (head position), c (flag).
    char letter() const {
        switch (kind) {
        case MeasureKind::swap: return 'd';
        case MeasureKind::head_to_end: return 'p';
        case MeasureKind::canonical_flag: return 'c';
        }
        return '?';
    }
};

/// All orders of the canonical order's alphabet grouped by swap distance,
/// nearest first; lexicographic within a level. Level k holds the orders at
/// distance k, and the predicted cost ordering is level 0 < level 1 < ...
inline std::vector<std::vector<Order>> predicted_cost_levels(const Order& canonical) {
    const int max_d = canonical.size() * (canonical.size() - 1) / 2;
    std::vector<std::vector<Order>> levels(static_cast<std::size_t>(max_d) + 1);
    for (const Order& o : all_orders(canonical.str()))
        levels[static_cast<std::size_t>(swap_distance(o, canonical))].push_back(o);
    return levels;
}

/// A rank labeling maps each order to a rank 1..6.
using RankLabeling = std::map<std::string, int>;

/// True when the labeling is a bijection onto 1..n! that never ranks an order
/// ahead of one strictly closer to the canonical order; equivalently, ranks
/// are assigned along some traversal visiting swap-distance layers in order.
inline bool is_bfs_labeling(const RankLabeling& labeling, const Order& canonical) {
    const std::vector<Order> orders = all_orders(canonical.str());
    if (labeling.size() != orders.size())
        return false;
    std::vector<bool> seen(orders.size() + 1, false);
    for (const Order& o : orders) {
        const auto it = labeling.find(o.str());
        if (it == labeling.end())
            return false;
        const int rank = it->second;
        if (rank < 1 || rank > static_cast<int>(orders.size()) ||
            seen[static_cast<std::size_t>(rank)])
            return false;
        seen[static_cast<std::size_t>(rank)] = true;
    }
    for (const Order& a : orders)
        for (const Order& b : orders)
            if (swap_distance(a, canonical) < swap_distance(b, canonical) &&
                labeling.at(a.str()) > labeling.at(b.str()))
                return false;
    return true;
}

/// Every rank labeling that a layer-ordered traversal of the six-cycle from
/// the canonical order can produce: each layer's vertices take consecutive
/// ranks, in any within-layer order. Layer sizes 1,2,2,1 give 4 labelings.
inline std::vector<RankLabeling> bfs_rank_labelings(const Order& canonical) {
    if (canonical.size() != 3)
        throw SizeError("rank labelings are enumerated for three constituents only");
    std::vector<std::vector<Order>> layers = predicted_cost_levels(canonical);
    std::vector<RankLabeling> out;
    RankLabeling current;
    const auto walk = [&](const auto& self, std::size_t layer, int next_rank) -> void {
        if (layer == layers.size()) {
            out.push_back(current);
            return;
        }
        std::vector<Order>& members = layers[layer]; // lexicographic; permuted in place
        do {
            int rank = next_rank;
            for (const Order& o : members)
                current[o.str()] = rank++;
            self(self, layer + 1, rank);
        } while (std::next_permutation(members.begin(), members.end()));
    };
    walk(walk, 0, 1);
    return out;
}

} // namespace swapdist

#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace swapdist {

/// Guards on the constituent count: n! enumerations (vertex sets, exhaustive
/// scans) stay tractable up to 7! = 5040.
inline constexpr int kMinConstituents = 2;
inline constexpr int kMaxConstituents = 7;

/// An arrangement of distinct single-character constituent labels, e.g. "SOV".
/// Immutable value type; two orders are comparable only when they arrange the
/// same label set.
class Order {
public:
    explicit Order(std::string_view labels) : labels_(labels) {
        const int n = size();
        if (n < kMinConstituents || n > kMaxConstituents)
            throw SizeError("order \"" + labels_ + "\" has " + std::to_string(n) +
                            " constituents, supported range is " +
                            std::to_string(kMinConstituents) + ".." +
                            std::to_string(kMaxConstituents));
        std::string sorted = labels_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InputError("duplicate constituent label in order \"" + labels_ + "\"");
    }

    const std::string& str() const { return labels_; }
    int size() const { return static_cast<int>(labels_.size()); }
    char at(int i) const { return labels_[static_cast<std::size_t>(i)]; }

    /// Position of the label, or -1 when absent.
    int position_of(char label) const {
        const auto pos = labels_.find(label);
        return pos == std::string::npos ? -1 : static_cast<int>(pos);
    }

    /// The label set, sorted ascending.
    std::string alphabet() const {
        std::string a = labels_;
        std::sort(a.begin(), a.end());
        return a;
    }

    bool same_alphabet(const Order& other) const { return alphabet() == other.alphabet(); }

    /// Copy with positions i and i+1 exchanged.
    Order with_adjacent_swap(int i) const {
        if (i < 0 || i + 1 >= size())
            throw InputError("adjacent swap position out of range");
        std::string s = labels_;
        std::swap(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(i) + 1]);
        return Order(s);
    }

    friend bool operator==(const Order&, const Order&) = default;
    friend std::strong_ordering operator<=>(const Order&, const Order&) = default;

private:
    std::string labels_;
};

inline void require_same_alphabet(const Order& a, const Order& b) {
    if (!a.same_alphabet(b))
        throw InputError("orders arrange different constituents: \"" + a.str() +
                         "\" vs \"" + b.str() + "\"");
}

/// Every order over the given label set, lexicographically sorted.
inline std::vector<Order> all_orders(std::string_view labels) {
    std::string current = Order(labels).alphabet(); // validates count and distinctness
    std::vector<Order> out;
    do {
        out.emplace_back(current);
    } while (std::next_permutation(current.begin(), current.end()));
    return out;
}

/// Minimum number of adjacent transpositions turning a into b. Equals the
/// number of label pairs whose relative ordering differs between the two.
inline int swap_distance(const Order& a, const Order& b) {
    require_same_alphabet(a, b);
    const int n = a.size();
    std::array<int, kMaxConstituents> pos{};
    for (int i = 0; i < n; ++i)
        pos[static_cast<std::size_t>(i)] = b.position_of(a.at(i));
    int inversions = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (pos[static_cast<std::size_t>(i)] > pos[static_cast<std::size_t>(j)])
                ++inversions;
    return inversions;
}

} // namespace swapdist

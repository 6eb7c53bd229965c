#pragma once

#include <cstddef>
#include <map>
#include <queue>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "order.hpp"

namespace swapdist {

/// Graph over all orders of one alphabet. Vertices are the n! orders, edges
/// connect orders one adjacent swap apart; every vertex has degree n-1, and
/// for n = 3 the graph is a single hexagonal cycle.
class Permutahedron {
public:
    explicit Permutahedron(std::string_view labels) : vertices_(all_orders(labels)) {
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            index_.emplace(vertices_[i].str(), static_cast<int>(i));
        const int n = vertices_.front().size();
        adjacency_.resize(vertices_.size());
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            for (int k = 0; k + 1 < n; ++k) {
                const int j = index_.at(vertices_[i].with_adjacent_swap(k).str());
                adjacency_[i].push_back(j);
                if (static_cast<int>(i) < j)
                    edges_.emplace_back(static_cast<int>(i), j);
            }
            std::sort(adjacency_[i].begin(), adjacency_[i].end());
        }
        std::sort(edges_.begin(), edges_.end());
    }

    const std::vector<Order>& vertices() const { return vertices_; }

    /// Vertex-index pairs (a < b), sorted; names via vertices()[a].
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    int degree(int vertex) const {
        return static_cast<int>(adjacency_[static_cast<std::size_t>(vertex)].size());
    }

    int index_of(const Order& v) const {
        const auto it = index_.find(v.str());
        if (it == index_.end())
            throw InputError("order \"" + v.str() + "\" is not a vertex of this graph");
        return it->second;
    }

    /// Shortest-path length between two orders, by breadth-first search.
    int bfs_distance(const Order& a, const Order& b) const {
        const int start = index_of(a);
        const int goal = index_of(b);
        std::vector<int> dist(vertices_.size(), -1);
        std::queue<int> frontier;
        dist[static_cast<std::size_t>(start)] = 0;
        frontier.push(start);
        while (!frontier.empty()) {
            const int v = frontier.front();
            frontier.pop();
            if (v == goal)
                return dist[static_cast<std::size_t>(v)];
            for (const int w : adjacency_[static_cast<std::size_t>(v)])
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                    frontier.push(w);
                }
        }
        throw InputError("vertices are disconnected"); // unreachable: the graph is connected
    }

    /// DOT graph, one undirected edge per line: "  SOV -- SVO;".
    std::string to_dot() const {
        std::string out = "graph permutahedron {\n";
        for (const auto& [a, b] : edges_) {
            out += "  " + vertices_[static_cast<std::size_t>(a)].str() + " -- " +
                   vertices_[static_cast<std::size_t>(b)].str() + ";\n";
        }
        out += "}\n";
        return out;
    }

    /// {"vertices": [names...], "edges": [[a, b], ...]} with vertex names.
    std::string to_json() const {
        nlohmann::ordered_json doc;
        doc["vertices"] = nlohmann::ordered_json::array();
        for (const Order& v : vertices_)
            doc["vertices"].push_back(v.str());
        doc["edges"] = nlohmann::ordered_json::array();
        for (const auto& [a, b] : edges_)
            doc["edges"].push_back({vertices_[static_cast<std::size_t>(a)].str(),
                                    vertices_[static_cast<std::size_t>(b)].str()});
        return doc.dump(2) + "\n";
    }

private:
    std::vector<Order> vertices_;
    std::map<std::string, int> index_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<std::pair<int, int>> edges_;
};

inline Permutahedron build_permutahedron(std::string_view labels) {
    return Permutahedron(labels);
}

} // namespace swapdist

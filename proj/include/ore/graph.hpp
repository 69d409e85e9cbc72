#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace ore {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Shortest-path length between two vertices, or unreachable.
class Distance {
public:
    constexpr Distance() = default;
    constexpr explicit Distance(int value) : value_(value) {}

    static constexpr Distance unreachable() { return Distance{}; }

    constexpr bool reachable() const noexcept { return value_ >= 0; }
    /// Only meaningful when reachable().
    constexpr int value() const noexcept { return value_; }

    constexpr bool operator==(const Distance&) const = default;
    constexpr bool operator==(int v) const noexcept { return reachable() && value_ == v; }

private:
    int value_ = -1;
};

/// Simple undirected graph on vertices 0..n-1, n <= 64. Immutable once built;
/// use GraphBuilder to assemble one.
class Graph {
public:
    static constexpr int kMaxOrder = 64;

    Graph() = default;
    /// Edgeless graph of order n.
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges);

    static Graph complete(int n);
    static Graph path(int n);
    static Graph cycle(int n);

    int order() const noexcept { return static_cast<int>(rows_.size()); }
    int size() const noexcept { return size_; }

    bool has_edge(Vertex u, Vertex v) const;
    int degree(Vertex v) const;
    /// Neighbour set of v as a bitmask.
    std::uint64_t neighbours(Vertex v) const { return rows_.at(v); }
    std::span<const std::uint64_t> rows() const noexcept { return rows_; }

    /// Edges as pairs (u, v), u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    /// Relabelled copy: vertex v of this graph becomes perm[v].
    Graph relabelled(std::span<const Vertex> perm) const;

    bool operator==(const Graph&) const = default;

private:
    friend class GraphBuilder;
    std::vector<std::uint64_t> rows_;
    int size_ = 0;
};

class GraphBuilder {
public:
    explicit GraphBuilder(int n);
    explicit GraphBuilder(const Graph& g);

    GraphBuilder& add_edge(Vertex u, Vertex v);
    GraphBuilder& remove_edge(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const;
    int order() const noexcept { return static_cast<int>(rows_.size()); }

    Graph build() const;

private:
    void check(Vertex u, Vertex v) const;
    std::vector<std::uint64_t> rows_;
};

std::vector<Distance> bfs_distances(const Graph& g, Vertex source);

/// Largest distance over all vertex pairs; unreachable when g is disconnected.
Distance diameter(const Graph& g);

/// diameter(g) == d without computing the full diameter: stops as soon as
/// some eccentricity exceeds d or a vertex is unreachable.
bool has_diameter(std::span<const std::uint64_t> rows, int d);

Distance distance(const Graph& g, Vertex u, Vertex v);

bool is_clique(const Graph& g, std::span<const Vertex> vs);

/// Consecutive vertices adjacent and the endpoints at distance path.size()-1.
bool is_geodesic(const Graph& g, std::span<const Vertex> path);

/// Calls visit for every shortest path from u to v, in lexicographic vertex
/// order, until visit returns false. Returns the number of paths visited.
std::size_t for_each_geodesic(const Graph& g, Vertex u, Vertex v,
                              const std::function<bool(std::span<const Vertex>)>& visit);

} // namespace ore

#include "ore/graph.hpp"

#include "ore/errors.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace ore {

namespace {

std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

void check_order(int n)
{
    if (n < 0 || n > Graph::kMaxOrder)
        throw CapacityError("graph order " + std::to_string(n) + " outside 0.." +
                            std::to_string(Graph::kMaxOrder));
}

void check_vertex(const Graph& g, Vertex v)
{
    if (v < 0 || v >= g.order())
        throw InputError("vertex " + std::to_string(v) + " out of range for order " +
                         std::to_string(g.order()));
}

// BFS over bitset rows; dist must have rows.size() entries.
void bfs_into(std::span<const std::uint64_t> rows, Vertex source, std::vector<int>& dist)
{
    std::fill(dist.begin(), dist.end(), -1);
    std::uint64_t seen = bit(source);
    std::uint64_t frontier = seen;
    int layer = 0;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f; f &= f - 1) {
            int v = std::countr_zero(f);
            dist[v] = layer;
            next |= rows[v];
        }
        next &= ~seen;
        seen |= next;
        frontier = next;
        ++layer;
    }
}

} // namespace

Graph::Graph(int n)
{
    check_order(n);
    rows_.assign(n, 0);
}

Graph::Graph(int n, std::span<const Edge> edges)
{
    GraphBuilder b(n);
    for (auto [u, v] : edges)
        b.add_edge(u, v);
    *this = b.build();
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size()))
{
}

Graph Graph::complete(int n)
{
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            b.add_edge(u, v);
    return b.build();
}

Graph Graph::path(int n)
{
    GraphBuilder b(n);
    for (Vertex v = 0; v + 1 < n; ++v)
        b.add_edge(v, v + 1);
    return b.build();
}

Graph Graph::cycle(int n)
{
    if (n < 3)
        throw InputError("cycle needs at least 3 vertices");
    GraphBuilder b(n);
    for (Vertex v = 0; v < n; ++v)
        b.add_edge(v, (v + 1) % n);
    return b.build();
}

bool Graph::has_edge(Vertex u, Vertex v) const
{
    check_vertex(*this, u);
    check_vertex(*this, v);
    return (rows_[u] >> v) & 1;
}

int Graph::degree(Vertex v) const
{
    check_vertex(*this, v);
    return std::popcount(rows_[v]);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(size_);
    for (Vertex u = 0; u < order(); ++u)
        for (std::uint64_t r = rows_[u] & ~((bit(u) << 1) - 1); r; r &= r - 1)
            out.emplace_back(u, std::countr_zero(r));
    return out;
}

Graph Graph::relabelled(std::span<const Vertex> perm) const
{
    if (static_cast<int>(perm.size()) != order())
        throw InputError("permutation length does not match graph order");
    std::uint64_t seen = 0;
    for (Vertex p : perm) {
        if (p < 0 || p >= order() || (seen & bit(p)))
            throw InputError("not a permutation of the vertex set");
        seen |= bit(p);
    }
    GraphBuilder b(order());
    for (auto [u, v] : edges())
        b.add_edge(perm[u], perm[v]);
    return b.build();
}

GraphBuilder::GraphBuilder(int n)
{
    check_order(n);
    rows_.assign(n, 0);
}

GraphBuilder::GraphBuilder(const Graph& g) : rows_(g.rows_) {}

void GraphBuilder::check(Vertex u, Vertex v) const
{
    if (u < 0 || v < 0 || u >= order() || v >= order())
        throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                         "} out of range for order " + std::to_string(order()));
    if (u == v)
        throw InputError("self-loop at vertex " + std::to_string(u));
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v)
{
    check(u, v);
    rows_[u] |= bit(v);
    rows_[v] |= bit(u);
    return *this;
}

GraphBuilder& GraphBuilder::remove_edge(Vertex u, Vertex v)
{
    check(u, v);
    rows_[u] &= ~bit(v);
    rows_[v] &= ~bit(u);
    return *this;
}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const
{
    check(u, v);
    return (rows_[u] >> v) & 1;
}

Graph GraphBuilder::build() const
{
    Graph g;
    g.rows_ = rows_;
    int degree_sum = 0;
    for (auto r : rows_)
        degree_sum += std::popcount(r);
    g.size_ = degree_sum / 2;
    return g;
}

std::vector<Distance> bfs_distances(const Graph& g, Vertex source)
{
    check_vertex(g, source);
    std::vector<int> raw(g.order());
    bfs_into(g.rows(), source, raw);
    std::vector<Distance> out;
    out.reserve(raw.size());
    for (int r : raw)
        out.push_back(r < 0 ? Distance::unreachable() : Distance(r));
    return out;
}

Distance diameter(const Graph& g)
{
    if (g.order() == 0)
        throw InputError("diameter of the empty graph is undefined");
    std::vector<int> dist(g.order());
    int best = 0;
    for (Vertex s = 0; s < g.order(); ++s) {
        bfs_into(g.rows(), s, dist);
        for (int x : dist) {
            if (x < 0)
                return Distance::unreachable();
            best = std::max(best, x);
        }
    }
    return Distance(best);
}

bool has_diameter(std::span<const std::uint64_t> rows, int d)
{
    const int n = static_cast<int>(rows.size());
    if (n == 0)
        return false;
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (bit(n) - 1);
    bool reached = false;
    for (Vertex s = 0; s < n; ++s) {
        std::uint64_t seen = bit(s);
        std::uint64_t frontier = seen;
        int ecc = 0;
        while (true) {
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f; f &= f - 1)
                next |= rows[std::countr_zero(f)];
            next &= ~seen;
            if (!next)
                break;
            seen |= next;
            frontier = next;
            if (++ecc > d)
                return false;
        }
        if (seen != all)
            return false;
        // eccentricity of any vertex is at least half the diameter
        if (s == 0 && 2 * ecc < d)
            return false;
        reached = reached || ecc == d;
    }
    return reached;
}

Distance distance(const Graph& g, Vertex u, Vertex v)
{
    check_vertex(g, v);
    return bfs_distances(g, u)[v];
}

bool is_clique(const Graph& g, std::span<const Vertex> vs)
{
    std::uint64_t set = 0;
    for (Vertex v : vs) {
        check_vertex(g, v);
        set |= bit(v);
    }
    for (Vertex v : vs)
        if (((g.neighbours(v) | bit(v)) & set) != set)
            return false;
    return true;
}

bool is_geodesic(const Graph& g, std::span<const Vertex> path)
{
    if (path.empty())
        throw InputError("geodesic check needs a nonempty vertex sequence");
    std::uint64_t seen = 0;
    for (Vertex v : path) {
        check_vertex(g, v);
        if (seen & bit(v))
            throw InputError("vertex " + std::to_string(v) + " repeated in path");
        seen |= bit(v);
    }
    for (std::size_t k = 0; k + 1 < path.size(); ++k)
        if (!g.has_edge(path[k], path[k + 1]))
            return false;
    return distance(g, path.front(), path.back()) == static_cast<int>(path.size()) - 1;
}

std::size_t for_each_geodesic(const Graph& g, Vertex u, Vertex v,
                              const std::function<bool(std::span<const Vertex>)>& visit)
{
    check_vertex(g, u);
    check_vertex(g, v);
    std::vector<int> from_u(g.order()), to_v(g.order());
    bfs_into(g.rows(), u, from_u);
    bfs_into(g.rows(), v, to_v);
    const int len = from_u[v];
    if (len < 0)
        return 0;

    // Vertices on some u-v geodesic, bucketed by their layer from u.
    std::vector<std::uint64_t> layer(len + 1, 0);
    for (Vertex x = 0; x < g.order(); ++x)
        if (from_u[x] >= 0 && to_v[x] >= 0 && from_u[x] + to_v[x] == len)
            layer[from_u[x]] |= bit(x);

    std::vector<Vertex> path(len + 1);
    path[0] = u;
    std::size_t count = 0;
    bool stop = false;
    std::function<void(int)> extend = [&](int k) {
        if (k == len) {
            ++count;
            stop = !visit(path);
            return;
        }
        for (std::uint64_t c = g.neighbours(path[k]) & layer[k + 1]; c && !stop; c &= c - 1) {
            path[k + 1] = std::countr_zero(c);
            extend(k + 1);
        }
    };
    extend(0);
    return count;
}

} // namespace ore

#include "ore/recognize.hpp"

#include "ore/bound.hpp"
#include "ore/errors.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace ore {

namespace {

void require_diameter_domain(int d)
{
    if (d < 2)
        throw DomainError("d must be >= 2 (got d=" + std::to_string(d) + ")");
}

// Bitmask of path positions adjacent to w.
std::uint64_t path_positions(const Graph& g, std::span<const Vertex> path, Vertex w)
{
    std::uint64_t mask = 0;
    for (std::size_t k = 0; k < path.size(); ++k)
        if ((g.neighbours(w) >> path[k]) & 1)
            mask |= std::uint64_t{1} << k;
    return mask;
}

std::uint64_t triple_at(int start) { return std::uint64_t{7} << start; }

// Checks ranges (InputError) and that path and s_vertices partition V(g).
bool partitions(const Graph& g, const Certificate& c)
{
    std::uint64_t seen = 0;
    bool disjoint = true;
    auto take = [&](Vertex v) {
        if (v < 0 || v >= g.order())
            throw InputError("certificate vertex " + std::to_string(v) +
                             " out of range for order " + std::to_string(g.order()));
        if ((seen >> v) & 1)
            disjoint = false;
        seen |= std::uint64_t{1} << v;
    };
    for (Vertex v : c.path)
        take(v);
    for (Vertex v : c.s_vertices)
        take(v);
    return disjoint && c.path.size() + c.s_vertices.size() == static_cast<std::size_t>(g.order());
}

// Tries to read a certificate off one geodesic.
std::optional<Certificate> decompose(const Graph& g, std::span<const Vertex> path)
{
    Certificate c;
    c.path.assign(path.begin(), path.end());
    std::uint64_t on_path = 0;
    for (Vertex v : path)
        on_path |= std::uint64_t{1} << v;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!((on_path >> v) & 1))
            c.s_vertices.push_back(v);
    if (c.s_vertices.empty())
        return c;
    if (!is_clique(g, c.s_vertices))
        return std::nullopt;

    int low = 64, high = -1;
    std::vector<int> starts;
    for (Vertex w : c.s_vertices) {
        std::uint64_t mask = path_positions(g, path, w);
        if (mask == 0)
            return std::nullopt;
        int start = std::countr_zero(mask);
        if (mask != triple_at(start) || start + 2 >= static_cast<int>(path.size()))
            return std::nullopt;
        starts.push_back(start);
        low = std::min(low, start);
        high = std::max(high, start);
    }
    if (high - low > 1)
        return std::nullopt;
    c.window_start = low;
    c.window_len = high == low ? 3 : 4;
    for (int start : starts)
        c.choice.push_back(start == low ? TripleChoice::FirstThree : TripleChoice::LastThree);
    return c;
}

} // namespace

bool is_extremal(const Graph& g, int d)
{
    require_diameter_domain(d);
    if (g.order() < d + 1)
        return false;
    return diameter(g) == d && g.size() == ore_max_size({g.order(), d});
}

std::optional<Certificate> extract_certificate(const Graph& g, int d, std::size_t geodesic_limit)
{
    if (!is_extremal(g, d))
        return std::nullopt;

    std::size_t examined = 0;
    for (Vertex u = 0; u < g.order(); ++u) {
        auto from_u = bfs_distances(g, u);
        for (Vertex v = u + 1; v < g.order(); ++v) {
            if (!(from_u[v] == d))
                continue;
            std::optional<Certificate> found;
            for_each_geodesic(g, u, v, [&](std::span<const Vertex> path) {
                if (++examined > geodesic_limit)
                    throw CapacityError("geodesic search exceeded limit of " +
                                        std::to_string(geodesic_limit) + " paths");
                auto c = decompose(g, path);
                if (c && validate_certificate(g, *c, d)) {
                    found = std::move(c);
                    return false;
                }
                return true;
            });
            if (found)
                return found;
        }
    }
    return std::nullopt;
}

bool validate_certificate(const Graph& g, const Certificate& c, int d)
{
    require_diameter_domain(d);
    if (!partitions(g, c))
        return false;
    if (static_cast<int>(c.path.size()) != d + 1 || c.choice.size() != c.s_vertices.size())
        return false;
    if (!is_geodesic(g, c.path))
        return false;
    if (g.size() != ore_max_size({g.order(), d}))
        return false;
    if (!is_clique(g, c.s_vertices))
        return false;

    if (c.s_vertices.empty())
        return c.window_len == 0;
    if (c.window_len != 3 && c.window_len != 4)
        return false;
    if (c.window_start < 0 || c.window_start + c.window_len > d + 1)
        return false;

    for (std::size_t k = 0; k < c.s_vertices.size(); ++k) {
        int start = c.window_start;
        if (c.choice[k] == TripleChoice::LastThree)
            start += c.window_len - 3;
        if (path_positions(g, c.path, c.s_vertices[k]) != triple_at(start))
            return false;
    }
    return true;
}

bool geodesic_neighbor_lemma(const Graph& g, std::span<const Vertex> path)
{
    if (!is_geodesic(g, path))
        throw InputError("geodesic_neighbor_lemma: sequence is not a geodesic");
    auto diam = diameter(g);
    if (!diam.reachable() || diam.value() != static_cast<int>(path.size()) - 1)
        throw InputError("geodesic_neighbor_lemma: path endpoints do not realize the diameter");

    std::uint64_t on_path = 0;
    for (Vertex v : path)
        on_path |= std::uint64_t{1} << v;
    for (Vertex w = 0; w < g.order(); ++w) {
        if ((on_path >> w) & 1)
            continue;
        std::uint64_t mask = path_positions(g, path, w);
        if (mask && (63 - std::countl_zero(mask)) - std::countr_zero(mask) > 2)
            return false;
    }
    return true;
}

bool window_union_lemma(const Graph& g, const Certificate& c)
{
    if (!partitions(g, c))
        throw InputError("window_union_lemma: certificate does not partition the vertex set");
    std::uint64_t seen = 0;
    for (Vertex w : c.s_vertices)
        seen |= path_positions(g, c.path, w);
    if (seen == 0)
        return true;
    if (c.window_len < 1 || c.window_len > 4 || c.window_start < 0)
        return false;
    const std::uint64_t window = ((std::uint64_t{1} << c.window_len) - 1) << c.window_start;
    return (seen & ~window) == 0;
}

} // namespace ore

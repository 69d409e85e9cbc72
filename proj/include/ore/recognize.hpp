#pragma once

#include "ore/graph.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace ore {

enum class TripleChoice { FirstThree, LastThree };

/// Structural witness that a graph is extremal: a diametral geodesic, the
/// clique formed by the remaining vertices, and the window of consecutive
/// path positions those vertices attach to.
///
/// choice[k] belongs to s_vertices[k]. With no outside vertices the window
/// is empty (window_len == 0).
struct Certificate {
    std::vector<Vertex> path;
    std::vector<Vertex> s_vertices;
    int window_start = 0;
    int window_len = 0;
    std::vector<TripleChoice> choice;

    bool operator==(const Certificate&) const = default;
};

inline constexpr std::size_t kDefaultGeodesicLimit = 1'000'000;

/// diameter(g) == d and g has the maximum size for its order and d.
bool is_extremal(const Graph& g, int d);

/// Searches diametral pairs in vertex order and their geodesics in
/// lexicographic order; returns the first decomposition that validates.
/// Throws CapacityError once more than geodesic_limit geodesics have been
/// examined without success.
std::optional<Certificate> extract_certificate(const Graph& g, int d,
                                               std::size_t geodesic_limit = kDefaultGeodesicLimit);

bool validate_certificate(const Graph& g, const Certificate& c, int d);

/// Every off-path vertex sees path positions spanning at most two steps.
/// path must be a geodesic between a diametral pair of g.
bool geodesic_neighbor_lemma(const Graph& g, std::span<const Vertex> path);

/// The path neighbourhoods of all outside vertices together stay inside the
/// certificate's window of at most four consecutive path positions. Only
/// requires the certificate to partition the vertex set; the neighbourhoods
/// are read from g.
bool window_union_lemma(const Graph& g, const Certificate& c);

} // namespace ore

#pragma once

#include <cstdint>

namespace ore {

/// Order n and diameter d with 2 <= d <= n-1.
struct BoundQuery {
    std::int64_t n = 0;
    std::int64_t d = 0;
};

/// Edge count of an extremal graph split by where the edges live: the
/// diametral path, path-to-outside attachments, and the outside clique.
struct BoundBreakdown {
    std::int64_t path_edges = 0;
    std::int64_t cross_edges = 0;
    std::int64_t clique_edges = 0;
    std::int64_t total = 0;

    bool operator==(const BoundBreakdown&) const = default;
};

/// Throws DomainError naming the violated constraint.
void validate(const BoundQuery& q);

/// Maximum number of edges of a graph of order n and diameter d:
/// d + (n-d-1)(n-d+4)/2.
std::int64_t ore_max_size(const BoundQuery& q);

BoundBreakdown bound_breakdown(const BoundQuery& q);

} // namespace ore

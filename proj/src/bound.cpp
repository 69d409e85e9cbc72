#include "ore/bound.hpp"

#include "ore/errors.hpp"

#include <string>

namespace ore {

void validate(const BoundQuery& q)
{
    if (q.d < 2)
        throw DomainError("d must be >= 2 (got d=" + std::to_string(q.d) +
                          "); d = 1 means the complete graph");
    if (q.d > q.n - 1)
        throw DomainError("d must be <= n-1 (got n=" + std::to_string(q.n) +
                          ", d=" + std::to_string(q.d) + ")");
}

std::int64_t ore_max_size(const BoundQuery& q)
{
    validate(q);
    // (n-d-1) and (n-d+4) differ by 5, so one of them is even.
    return q.d + (q.n - q.d - 1) * (q.n - q.d + 4) / 2;
}

BoundBreakdown bound_breakdown(const BoundQuery& q)
{
    validate(q);
    const std::int64_t outside = q.n - q.d - 1;
    BoundBreakdown b;
    b.path_edges = q.d;
    b.cross_edges = 3 * outside;
    b.clique_edges = outside * (outside - 1) / 2;
    b.total = b.path_edges + b.cross_edges + b.clique_edges;
    return b;
}

} // namespace ore

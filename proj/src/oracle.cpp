#include "ore/oracle.hpp"

#include "ore/bound.hpp"
#include "ore/errors.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <set>
#include <string>
#include <thread>

namespace ore {

namespace {

constexpr int kPrefixBits = 8;

struct ChunkResult {
    int best = -1;
    std::vector<std::uint32_t> masks;
};

// Runs job(i) for i in [0, count) on up to `workers` threads.
template <typename Job>
void parallel_for(std::size_t count, unsigned workers, Job&& job)
{
    if (count == 0)
        return;
    std::atomic<std::size_t> next{0};
    auto drain = [&] {
        for (std::size_t i = next++; i < count; i = next++)
            job(i);
    };
    const unsigned extra = std::min<std::size_t>(std::max(workers, 1u), count) - 1;
    std::vector<std::jthread> pool;
    pool.reserve(extra);
    for (unsigned t = 0; t < extra; ++t)
        pool.emplace_back(drain);
    drain();
}

class EdgeIndex {
public:
    explicit EdgeIndex(int n) : n_(n)
    {
        // graph6 column order, so mask bit e matches the e-th encoded bit
        for (Vertex j = 1; j < n; ++j)
            for (Vertex i = 0; i < j; ++i)
                ends_[count_++] = {i, j};
    }

    int count() const noexcept { return count_; }

    void rows(std::uint32_t mask, std::array<std::uint64_t, kMaxOracleOrder>& out) const
    {
        out.fill(0);
        for (; mask; mask &= mask - 1) {
            auto [i, j] = ends_[std::countr_zero(mask)];
            out[i] |= std::uint64_t{1} << j;
            out[j] |= std::uint64_t{1} << i;
        }
    }

    Graph graph(std::uint32_t mask) const
    {
        GraphBuilder b(n_);
        for (; mask; mask &= mask - 1) {
            auto [i, j] = ends_[std::countr_zero(mask)];
            b.add_edge(i, j);
        }
        return b.build();
    }

    int order() const noexcept { return n_; }

private:
    int n_;
    int count_ = 0;
    std::array<Edge, kMaxOracleOrder * (kMaxOracleOrder - 1) / 2> ends_{};
};

ChunkResult scan_chunk(const EdgeIndex& edges, int d, std::uint32_t chunk, int low_bits,
                       int floor, bool prune_below_best)
{
    ChunkResult r;
    std::array<std::uint64_t, kMaxOracleOrder> rows{};
    std::span<const std::uint64_t> view(rows.data(), edges.order());
    const std::uint32_t base = chunk << low_bits;
    const std::uint64_t span = std::uint64_t{1} << low_bits;
    for (std::uint64_t low = 0; low < span; ++low) {
        const std::uint32_t mask = base | static_cast<std::uint32_t>(low);
        const int edges_in = std::popcount(mask);
        if (edges_in < floor || (prune_below_best && edges_in < r.best))
            continue;
        edges.rows(mask, rows);
        if (!has_diameter(view, d))
            continue;
        if (edges_in > r.best) {
            r.best = edges_in;
            r.masks.clear();
        }
        if (edges_in == r.best)
            r.masks.push_back(mask);
    }
    return r;
}

} // namespace

OracleReport oracle_search(int n, int d, const OracleOptions& options)
{
    if (n > kMaxOracleOrder)
        throw CapacityError("exhaustive search supports n <= " + std::to_string(kMaxOracleOrder) +
                            ", got n=" + std::to_string(n));
    if (n > kMaxFullOracleOrder && !options.pruned)
        throw CapacityError("n=" + std::to_string(n) + " requires pruned mode");
    const auto bound = ore_max_size({n, d});
    const auto started = std::chrono::steady_clock::now();

    const EdgeIndex edges(n);
    const int prefix_bits = std::min(kPrefixBits, edges.count());
    const int low_bits = edges.count() - prefix_bits;
    const std::size_t chunks = std::size_t{1} << prefix_bits;
    const int floor = options.pruned ? static_cast<int>(bound) : 0;

    std::vector<ChunkResult> results(chunks);
    parallel_for(chunks, options.workers, [&](std::size_t c) {
        results[c] = scan_chunk(edges, d, static_cast<std::uint32_t>(c), low_bits, floor,
                                options.prune_below_best);
    });

    OracleReport report;
    report.n = n;
    report.d = d;
    report.pruned = options.pruned;
    for (const auto& r : results)
        report.max_size = std::max(report.max_size, r.best);

    std::vector<std::uint32_t> winners;
    if (report.max_size >= 0)
        for (const auto& r : results)
            if (r.best == report.max_size)
                winners.insert(winners.end(), r.masks.begin(), r.masks.end());
    report.labeled_count = winners.size();

    std::vector<CanonicalForm> forms(winners.size());
    parallel_for(winners.size(), options.workers,
                 [&](std::size_t k) { forms[k] = canonical_form(edges.graph(winners[k])); });
    std::set<CanonicalForm> unique(forms.begin(), forms.end());
    report.extremal_forms.assign(unique.begin(), unique.end());

    report.elapsed = std::chrono::steady_clock::now() - started;
    return report;
}

std::vector<OracleReport> oracle_table(int n_max, const OracleOptions& options)
{
    if (n_max > kMaxOracleOrder)
        throw CapacityError("exhaustive search supports n <= " + std::to_string(kMaxOracleOrder) +
                            ", got n=" + std::to_string(n_max));
    std::vector<OracleReport> out;
    for (int n = 3; n <= n_max; ++n)
        for (int d = 2; d <= n - 1; ++d)
            out.push_back(oracle_search(n, d, options));
    return out;
}

} // namespace ore

#pragma once

#include "ore/canon.hpp"

#include <chrono>
#include <cstdint>
#include <vector>

namespace ore {

/// Largest order the exhaustive search accepts at all; orders above
/// kMaxFullOracleOrder need pruned mode.
inline constexpr int kMaxOracleOrder = 8;
inline constexpr int kMaxFullOracleOrder = 7;

struct OracleOptions {
    unsigned workers = 1;
    /// Only examine graphs with at least ore_max_size(n, d) edges. The
    /// reported maximum is then verified only relative to the formula.
    bool pruned = false;
    /// Skip graphs with fewer edges than the best found so far. Sound in
    /// both modes; off only for cross-checking.
    bool prune_below_best = true;
};

struct OracleReport {
    int n = 0;
    int d = 0;
    /// -1 when no graph of diameter d was examined (possible only in pruned mode).
    int max_size = -1;
    std::vector<CanonicalForm> extremal_forms;
    std::uint64_t labeled_count = 0;
    bool pruned = false;
    std::chrono::duration<double> elapsed{};
};

/// Enumerates every labelled graph on n vertices (one edge-set bitmask
/// each) and collects the largest ones with diameter exactly d. The
/// bitmask space is cut into fixed prefix chunks handed to workers; the
/// result does not depend on the worker count.
OracleReport oracle_search(int n, int d, const OracleOptions& options = {});

/// Reports for every valid (n, d) with n <= n_max, ordered by n then d.
std::vector<OracleReport> oracle_table(int n_max, const OracleOptions& options = {});

} // namespace ore

#pragma once

#include "ore/canon.hpp"
#include "ore/graph.hpp"

#include <vector>

namespace ore {

/// One labelled member of the extremal family for order n and diameter d.
///
/// Vertices 0..d form the path, d+1..n-1 the outside clique. With a window
/// of three path vertices starting at window_start every outside vertex is
/// joined to all three (first_count = s, last_count = 0). With a window of
/// four, first_count outside vertices take the first three window vertices
/// and last_count the last three; both counts are at least one, since an
/// empty side is the same graph as a window of three.
///
/// window_len == 0 is the bare path (no outside vertices, n = d + 1).
struct ExtremalParams {
    int n = 0;
    int d = 0;
    int window_start = 0;
    int window_len = 0;
    int first_count = 0;
    int last_count = 0;

    static ExtremalParams bare_path(int d) { return {d + 1, d, 0, 0, 0, 0}; }
    static ExtremalParams window3(int n, int d, int start) { return {n, d, start, 3, n - d - 1, 0}; }
    static ExtremalParams window4(int n, int d, int start, int first, int last)
    {
        return {n, d, start, 4, first, last};
    }

    int outside() const noexcept { return n - d - 1; }

    bool operator==(const ExtremalParams&) const = default;
};

/// Throws DomainError when p is not a valid family member.
void validate(const ExtremalParams& p);

Graph realize(const ExtremalParams& p);

/// All valid parameter tuples for (n, d): windows of three first, by start,
/// then windows of four by start and increasing first_count.
std::vector<ExtremalParams> enumerate_params(int n, int d);

struct ExtremalClass {
    CanonicalForm form;
    Graph graph;
};

/// One representative per isomorphism class, ordered by canonical form.
std::vector<ExtremalClass> enumerate_extremal_up_to_iso(int n, int d);

} // namespace ore

#pragma once

#include "ore/graph.hpp"

#include <compare>
#include <string>

namespace ore {

/// Largest order canonical_form accepts.
inline constexpr int kMaxCanonOrder = 10;

/// Label-invariant fingerprint: the graph6 bytes of the relabelling whose
/// upper-triangle adjacency bit string is lexicographically smallest.
class CanonicalForm {
public:
    CanonicalForm() = default;
    explicit CanonicalForm(std::string bytes) : bytes_(std::move(bytes)) {}

    const std::string& bytes() const noexcept { return bytes_; }

    auto operator<=>(const CanonicalForm&) const = default;

private:
    std::string bytes_;
};

CanonicalForm canonical_form(const Graph& g);

/// Graphs of different order are simply not isomorphic.
bool are_isomorphic(const Graph& g, const Graph& h);

} // namespace ore

#pragma once

#include "ore/graph.hpp"

#include <string>
#include <string_view>

namespace ore {

/// Largest order the short (single-byte) graph6 header can carry.
inline constexpr int kMaxGraph6Order = 62;

/// graph6 record for g, without the trailing newline.
std::string encode_g6(const Graph& g);

/// Parses one graph6 record. A trailing "\n" or "\r\n" and a leading
/// ">>graph6<<" header are accepted. Throws ParseError with the byte offset
/// of the first offending byte.
Graph decode_g6(std::string_view line);

} // namespace ore

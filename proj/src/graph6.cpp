#include "ore/graph6.hpp"

#include "ore/errors.hpp"

namespace ore {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr char kBias = 63;

} // namespace

std::string encode_g6(const Graph& g)
{
    const int n = g.order();
    if (n > kMaxGraph6Order)
        throw CapacityError("graph6 short form supports order <= 62, got " + std::to_string(n));

    std::string out;
    out.push_back(static_cast<char>(n + kBias));
    int group = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + kBias));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
    return out;
}

Graph decode_g6(std::string_view line)
{
    std::size_t base = 0;
    if (line.starts_with(kHeader)) {
        line.remove_prefix(kHeader.size());
        base = kHeader.size();
    }
    if (line.ends_with('\n'))
        line.remove_suffix(1);
    if (line.ends_with('\r'))
        line.remove_suffix(1);

    for (std::size_t k = 0; k < line.size(); ++k) {
        auto c = static_cast<unsigned char>(line[k]);
        if (c < 63 || c > 126)
            throw ParseError("byte " + std::to_string(c) + " outside graph6 range 63..126",
                             base + k);
    }
    if (line.empty())
        throw ParseError("empty graph6 record", base);
    if (line[0] == 126)
        throw ParseError("multi-byte graph6 order (n > 62) is not supported", base);

    const int n = line[0] - kBias;
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (line.size() - 1 < bytes)
        throw ParseError("truncated graph6 payload: expected " + std::to_string(bytes) +
                             " bytes, got " + std::to_string(line.size() - 1),
                         base + line.size());
    if (line.size() - 1 > bytes)
        throw ParseError("trailing bytes after graph6 payload", base + 1 + bytes);

    GraphBuilder b(n);
    std::size_t index = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++index) {
            int value = line[1 + index / 6] - kBias;
            if ((value >> (5 - index % 6)) & 1)
                b.add_edge(i, j);
        }
    }
    if (bits % 6 != 0) {
        int value = line[bytes] - kBias;
        int pad = 6 - static_cast<int>(bits % 6);
        if (value & ((1 << pad) - 1))
            throw ParseError("nonzero graph6 padding bits", base + bytes);
    }
    return b.build();
}

} // namespace ore

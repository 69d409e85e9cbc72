#include "ore/construct.hpp"

#include "ore/bound.hpp"
#include "ore/errors.hpp"

#include <map>
#include <string>

namespace ore {

namespace {

std::string describe(const ExtremalParams& p)
{
    return "(n=" + std::to_string(p.n) + ", d=" + std::to_string(p.d) +
           ", start=" + std::to_string(p.window_start) + ", len=" +
           std::to_string(p.window_len) + ", split=" + std::to_string(p.first_count) + "/" +
           std::to_string(p.last_count) + ")";
}

} // namespace

void validate(const ExtremalParams& p)
{
    validate(BoundQuery{p.n, p.d});
    if (p.n > Graph::kMaxOrder)
        throw CapacityError("order " + std::to_string(p.n) + " exceeds graph capacity");
    const int s = p.outside();
    auto fail = [&](const char* why) { throw DomainError(std::string(why) + " " + describe(p)); };

    switch (p.window_len) {
    case 0:
        if (s != 0 || p.first_count != 0 || p.last_count != 0 || p.window_start != 0)
            fail("bare path requires n = d + 1 and no window");
        break;
    case 3:
        if (s < 1)
            fail("window requires outside vertices");
        if (p.window_start < 0 || p.window_start + 2 > p.d)
            fail("window of three does not fit on the path");
        if (p.first_count != s || p.last_count != 0)
            fail("window of three requires split (s, 0)");
        break;
    case 4:
        if (s < 1)
            fail("window requires outside vertices");
        if (p.window_start < 0 || p.window_start + 3 > p.d)
            fail("window of four does not fit on the path");
        if (p.first_count < 1 || p.last_count < 1 || p.first_count + p.last_count != s)
            fail("window of four requires a split a + b = s with a, b >= 1");
        break;
    default:
        fail("window length must be 3 or 4");
    }
}

Graph realize(const ExtremalParams& p)
{
    validate(p);
    GraphBuilder b(p.n);
    for (Vertex j = 0; j < p.d; ++j)
        b.add_edge(j, j + 1);
    const Vertex first_outside = p.d + 1;
    for (Vertex u = first_outside; u < p.n; ++u)
        for (Vertex v = u + 1; v < p.n; ++v)
            b.add_edge(u, v);
    for (int k = 0; k < p.first_count + p.last_count; ++k) {
        const Vertex u = first_outside + k;
        const int offset = k < p.first_count ? 0 : 1;
        for (int t = 0; t < 3; ++t)
            b.add_edge(u, p.window_start + offset + t);
    }
    return b.build();
}

std::vector<ExtremalParams> enumerate_params(int n, int d)
{
    validate(BoundQuery{n, d});
    const int s = n - d - 1;
    std::vector<ExtremalParams> out;
    if (s == 0) {
        out.push_back(ExtremalParams::bare_path(d));
        return out;
    }
    for (int i = 0; i + 2 <= d; ++i)
        out.push_back(ExtremalParams::window3(n, d, i));
    for (int i = 0; i + 3 <= d; ++i)
        for (int a = 1; a < s; ++a)
            out.push_back(ExtremalParams::window4(n, d, i, a, s - a));
    return out;
}

std::vector<ExtremalClass> enumerate_extremal_up_to_iso(int n, int d)
{
    std::map<CanonicalForm, Graph> classes;
    for (const auto& p : enumerate_params(n, d)) {
        Graph g = realize(p);
        CanonicalForm form = canonical_form(g);
        classes.try_emplace(std::move(form), std::move(g));
    }
    std::vector<ExtremalClass> out;
    out.reserve(classes.size());
    for (auto& [form, g] : classes)
        out.push_back({form, g});
    return out;
}

} // namespace ore

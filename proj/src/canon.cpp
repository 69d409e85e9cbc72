#include "ore/canon.hpp"

#include "ore/errors.hpp"
#include "ore/graph6.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>

namespace ore {

namespace {

// Branch and bound over relabellings that list vertices by nondecreasing
// degree. The degree sequence is an invariant, so the minimum over this
// restricted set is still a canonical choice. Positions are filled in order
// and each new position fixes one more column of the graph6 bit string.
class Search {
public:
    explicit Search(const Graph& g) : g_(g), n_(g.order())
    {
        for (Vertex v = 0; v < n_; ++v)
            degree_[v] = g.degree(v);
        std::array<int, kMaxCanonOrder> sorted{};
        std::copy_n(degree_.begin(), n_, sorted.begin());
        std::sort(sorted.begin(), sorted.begin() + n_);
        slot_degree_ = sorted;
        total_bits_ = n_ * (n_ - 1) / 2;
    }

    std::array<Vertex, kMaxCanonOrder> run()
    {
        place(0, 0, 0);
        return best_order_;
    }

private:
    void place(int pos, std::uint32_t used, std::uint64_t prefix)
    {
        if (pos == n_) {
            if (!found_ || prefix < best_code_) {
                found_ = true;
                best_code_ = prefix;
                best_order_ = order_;
            }
            return;
        }
        for (Vertex v = 0; v < n_; ++v) {
            if ((used >> v) & 1 || degree_[v] != slot_degree_[pos])
                continue;
            std::uint64_t code = prefix;
            for (int i = 0; i < pos; ++i)
                code = (code << 1) | ((g_.neighbours(order_[i]) >> v) & 1);
            if (found_) {
                const int len = (pos + 1) * pos / 2;
                const std::uint64_t best_prefix = best_code_ >> (total_bits_ - len);
                if (code > best_prefix)
                    continue;
            }
            order_[pos] = v;
            place(pos + 1, used | (1u << v), code);
        }
    }

    const Graph& g_;
    int n_;
    int total_bits_ = 0;
    std::array<int, kMaxCanonOrder> degree_{};
    std::array<int, kMaxCanonOrder> slot_degree_{};
    std::array<Vertex, kMaxCanonOrder> order_{};
    std::array<Vertex, kMaxCanonOrder> best_order_{};
    std::uint64_t best_code_ = 0;
    bool found_ = false;
};

} // namespace

CanonicalForm canonical_form(const Graph& g)
{
    const int n = g.order();
    if (n > kMaxCanonOrder)
        throw CapacityError("canonical labelling supports order <= " +
                            std::to_string(kMaxCanonOrder) + ", got " + std::to_string(n));
    if (n == 0)
        return CanonicalForm(encode_g6(g));

    auto order = Search(g).run();
    std::vector<Vertex> perm(n);
    for (int pos = 0; pos < n; ++pos)
        perm[order[pos]] = pos;
    return CanonicalForm(encode_g6(g.relabelled(perm)));
}

bool are_isomorphic(const Graph& g, const Graph& h)
{
    if (g.order() != h.order() || g.size() != h.size())
        return false;
    return canonical_form(g) == canonical_form(h);
}

} // namespace ore

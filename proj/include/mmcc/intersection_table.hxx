#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hxx"

namespace mmcc {

// Dense table of closed-neighborhood intersection sizes |N_u ∩ N_v| for all
// node pairs, stored as a triangular array including the diagonal
// I_{v,v} = |N_v|. Refuses graphs above the node limit instead of spilling:
// the table is quadratic and everything downstream assumes it is complete.
class IntersectionTable {
public:
    static constexpr std::size_t default_max_nodes = 20000;

    static IntersectionTable build(const Graph& g, std::size_t max_nodes = default_max_nodes)
    {
        std::size_t const n = g.node_count();
        if (n > max_nodes)
            throw std::length_error(
                "intersection table refused: " + std::to_string(n) +
                " nodes exceed the dense-storage limit of " + std::to_string(max_nodes));

        IntersectionTable table;
        table.n_ = n;
        table.neighborhood_size_.resize(n);
        table.counts_.assign(n * (n + 1) / 2, 0);
        for (std::size_t v = 0; v < n; ++v) {
            table.neighborhood_size_[v] = g.degree(v) + 1;
            table.counts_[index(v, v)] = static_cast<std::uint32_t>(g.degree(v) + 1);
        }
        // Each w contributes one unit to I_{u,v} for every pair {u,v} in N_w.
        for (std::size_t w = 0; w < n; ++w) {
            auto const closed = g.closed_neighborhood(w);
            for (std::size_t i = 0; i < closed.size(); ++i)
                for (std::size_t j = i + 1; j < closed.size(); ++j)
                    ++table.counts_[index(closed[i], closed[j])];
        }
        return table;
    }

    std::size_t node_count() const { return n_; }

    // |N_u ∩ N_v|; the diagonal gives |N_v|.
    std::size_t intersection_size(std::size_t u, std::size_t v) const
    {
        return counts_[index(u, v)];
    }

    std::size_t neighborhood_size(std::size_t v) const { return neighborhood_size_[v]; }

    // |N_u △ N_v| = |N_u| + |N_v| - 2 |N_u ∩ N_v|
    std::size_t symmetric_difference_size(std::size_t u, std::size_t v) const
    {
        return neighborhood_size_[u] + neighborhood_size_[v] - 2 * intersection_size(u, v);
    }

private:
    static std::size_t index(std::size_t u, std::size_t v)
    {
        if (u > v)
            std::swap(u, v);
        return v * (v + 1) / 2 + u;
    }

    std::size_t n_ = 0;
    std::vector<std::size_t> neighborhood_size_;
    std::vector<std::uint32_t> counts_;
};

inline IntersectionTable build_intersection_table(
    const Graph& g, std::size_t max_nodes = IntersectionTable::default_max_nodes)
{
    return IntersectionTable::build(g, max_nodes);
}

} // namespace mmcc

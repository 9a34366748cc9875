#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "graph.hxx"
#include "intersection_table.hxx"
#include "partition.hxx"

namespace mmcc {

// {u : |N_u ∩ N_v| > |N_v| / 2}, evaluated in integers as 2 I > |N_v|.
// Always contains v since I_{v,v} = |N_v|.
inline std::vector<std::size_t> majority_cluster(const Graph& g, const IntersectionTable& table,
                                                 std::size_t v)
{
    if (v >= g.node_count())
        throw std::out_of_range("node id out of range");
    std::vector<std::size_t> cluster;
    std::size_t const nv = table.neighborhood_size(v);
    for (std::size_t u = 0; u < g.node_count(); ++u)
        if (2 * table.intersection_size(u, v) > nv)
            cluster.push_back(u);
    return cluster;
}

struct Approx4Result {
    Partition partition;
    std::size_t iterations = 0;
    bool terminated_early = false;
};

// Combinatorial 4-approximation. Starting from singletons, repeatedly take
// an unfixed node v of largest current disagreement (unfixed nodes are
// singletons, so that is the degree; ties go to the smallest id) and fix its
// majority cluster C. Stop as soon as C touches an already fixed node or
// some member's disagreement with C strictly exceeds |N_v| / 4; equality
// proceeds. All comparisons are integer arithmetic.
inline Approx4Result approx_4(const Graph& g, const IntersectionTable& table)
{
    std::size_t const n = g.node_count();
    Approx4Result result{Partition::singletons(n)};

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (g.degree(a) != g.degree(b))
            return g.degree(a) > g.degree(b);
        return a < b;
    });

    std::vector<char> fixed(n, 0), in_c(n, 0);
    for (std::size_t v : order) {
        if (fixed[v])
            continue;
        ++result.iterations;
        auto const c = majority_cluster(g, table, v);

        bool conflict = false;
        for (std::size_t u : c)
            if (fixed[u]) {
                conflict = true;
                break;
            }

        bool over_budget = false;
        if (!conflict) {
            for (std::size_t u : c)
                in_c[u] = 1;
            std::size_t const nv = table.neighborhood_size(v);
            for (std::size_t u : c) {
                std::size_t inter = 1; // u itself
                for (std::size_t x : g.neighbors(u))
                    inter += in_c[x];
                std::size_t const sd = table.neighborhood_size(u) + c.size() - 2 * inter;
                if (4 * sd > nv) {
                    over_budget = true;
                    break;
                }
            }
            for (std::size_t u : c)
                in_c[u] = 0;
        }

        if (conflict || over_budget) {
            result.terminated_early = true;
            break;
        }

        std::size_t target = result.partition.cluster_of(c.front());
        for (std::size_t i = 1; i < c.size(); ++i)
            target = result.partition.join(target, result.partition.cluster_of(c[i]));
        for (std::size_t u : c)
            fixed[u] = 1;
    }
    return result;
}

} // namespace mmcc

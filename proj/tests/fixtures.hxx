#pragma once

#include <random>
#include <set>
#include <vector>

#include <mmcc/graph.hxx>
#include <mmcc/partition.hxx>

namespace fixtures {

// 7-node golden graph: a 3-node fan between 0 and 4, plus the triangle 4-5-6.
inline mmcc::Graph fan_triangle()
{
    return mmcc::Graph(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}, {4, 5}, {4, 6}, {5, 6}});
}

// Variant of the golden graph without the 5-6 edge, as listed in the
// acceptance fixture; every frozen value asserted on it holds as well.
inline mmcc::Graph fan_cherry()
{
    return mmcc::Graph(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}, {4, 5}, {4, 6}});
}

// 6-node golden graph: two 2-paths from 0 meeting the triangle 3-4-5.
inline mmcc::Graph twin_paths_triangle()
{
    return mmcc::Graph(6, {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}});
}

inline mmcc::Graph path3() { return mmcc::Graph(3, {{0, 1}, {1, 2}}); }

inline mmcc::Graph triangle() { return mmcc::Graph(3, {{0, 1}, {0, 2}, {1, 2}}); }

inline mmcc::Graph star(std::size_t leaves)
{
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 1; i <= leaves; ++i)
        edges.emplace_back(0, i);
    return mmcc::Graph(leaves + 1, edges);
}

inline mmcc::Graph edgeless(std::size_t n) { return mmcc::Graph(n, {}); }

inline mmcc::Graph disjoint_cliques(std::size_t k, std::size_t s)
{
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t i = c * s; i < (c + 1) * s; ++i)
            for (std::size_t j = i + 1; j < (c + 1) * s; ++j)
                edges.emplace_back(i, j);
    return mmcc::Graph(k * s, edges);
}

inline mmcc::Graph random_graph(std::size_t n, double density, std::mt19937_64& rng)
{
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (std::size_t v = 1; v < n; ++v)
        for (std::size_t u = 0; u < v; ++u)
            if (coin(rng) < density)
                edges.emplace_back(u, v);
    return mmcc::Graph(n, edges);
}

inline mmcc::Partition random_partition(std::size_t n, std::mt19937_64& rng)
{
    std::vector<std::size_t> labels(n);
    std::size_t used = 0;
    for (std::size_t v = 0; v < n; ++v) {
        labels[v] = std::uniform_int_distribution<std::size_t>(0, used)(rng);
        used = std::max(used, labels[v] + 1);
    }
    return mmcc::Partition(labels);
}

// --- naive oracles, independent of the library's counting paths -------------

inline std::set<std::size_t> naive_closed_neighborhood(const mmcc::Graph& g, std::size_t v)
{
    std::set<std::size_t> result{v};
    for (std::size_t u = 0; u < g.node_count(); ++u)
        if (u != v && g.is_adjacent(u, v))
            result.insert(u);
    return result;
}

inline std::size_t naive_intersection(const mmcc::Graph& g, std::size_t u, std::size_t v)
{
    auto const a = naive_closed_neighborhood(g, u);
    auto const b = naive_closed_neighborhood(g, v);
    std::size_t count = 0;
    for (std::size_t x : a)
        count += b.count(x);
    return count;
}

inline std::size_t naive_symmetric_difference(const mmcc::Graph& g, std::size_t u, std::size_t v)
{
    auto const a = naive_closed_neighborhood(g, u);
    auto const b = naive_closed_neighborhood(g, v);
    std::size_t count = 0;
    for (std::size_t x : a)
        count += 1 - b.count(x);
    for (std::size_t x : b)
        count += 1 - a.count(x);
    return count;
}

inline std::size_t naive_node_disagreement(const mmcc::Graph& g, const mmcc::Partition& p,
                                           std::size_t v)
{
    auto const neighborhood = naive_closed_neighborhood(g, v);
    std::set<std::size_t> cluster(p.members(p.cluster_of(v)).begin(),
                                  p.members(p.cluster_of(v)).end());
    std::size_t count = 0;
    for (std::size_t x : neighborhood)
        count += 1 - cluster.count(x);
    for (std::size_t x : cluster)
        count += 1 - neighborhood.count(x);
    return count;
}

inline std::size_t naive_max_disagreement(const mmcc::Graph& g, const mmcc::Partition& p)
{
    std::size_t result = 0;
    for (std::size_t v = 0; v < g.node_count(); ++v)
        result = std::max(result, naive_node_disagreement(g, p, v));
    return result;
}

} // namespace fixtures

#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "graph.hxx"

namespace mmcc {

// Planted-partition instance: k disjoint s-cliques perturbed by f edge flips.
struct SynthSpec {
    std::size_t cliques = 1;     // k
    std::size_t clique_size = 1; // s
    std::size_t flips = 0;       // f
    std::uint64_t seed = 0;
};

namespace detail {

// Unranks a pair index in [0, n(n-1)/2) to the pair (u, v) with u < v, where
// the index of (u, v) is v(v-1)/2 + u.
inline std::pair<std::size_t, std::size_t> unrank_pair(std::uint64_t index)
{
    auto v = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(index))) / 2.0);
    while (v * (v - 1) / 2 > index)
        --v;
    while ((v + 1) * v / 2 <= index)
        ++v;
    return {static_cast<std::size_t>(index - v * (v - 1) / 2), static_cast<std::size_t>(v)};
}

} // namespace detail

// Builds k disjoint s-cliques on nodes 0..k*s-1 (clique c holds the nodes
// [c*s, (c+1)*s)), then flips f node pairs: the pair is drawn uniformly
// without replacement over all unordered pairs (Floyd's sampling driven by
// mt19937_64), an absent edge is added and a present edge removed. Without
// replacement, the result is at Hamming distance exactly f from the planted
// graph, and it is deterministic for a given seed.
inline Graph planted_partition_graph(const SynthSpec& spec)
{
    if (spec.cliques == 0 || spec.clique_size == 0)
        throw std::invalid_argument("cliques and clique_size must be positive");
    std::size_t const n = spec.cliques * spec.clique_size;
    std::uint64_t const pair_count = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    if (spec.flips > pair_count)
        throw std::invalid_argument("flips exceed the number of node pairs (" +
                                    std::to_string(pair_count) + ")");

    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t c = 0; c < spec.cliques; ++c)
        for (std::size_t i = c * spec.clique_size; i < (c + 1) * spec.clique_size; ++i)
            for (std::size_t j = i + 1; j < (c + 1) * spec.clique_size; ++j)
                edges.emplace(i, j);

    std::mt19937_64 rng(spec.seed);
    std::unordered_set<std::uint64_t> chosen;
    for (std::uint64_t j = pair_count - spec.flips; j < pair_count; ++j) {
        std::uint64_t const t = std::uniform_int_distribution<std::uint64_t>(0, j)(rng);
        if (!chosen.insert(t).second)
            chosen.insert(j);
    }

    for (std::uint64_t index : chosen) {
        auto const [u, v] = detail::unrank_pair(index);
        std::pair<std::size_t, std::size_t> const edge{u, v};
        if (auto it = edges.find(edge); it != edges.end())
            edges.erase(it);
        else
            edges.insert(edge);
    }

    std::vector<std::pair<std::size_t, std::size_t>> edge_list(edges.begin(), edges.end());
    return Graph(n, edge_list);
}

} // namespace mmcc

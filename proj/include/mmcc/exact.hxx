#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hxx"
#include "partition.hxx"

namespace mmcc {

// Bell numbers B_0..B_25 fit in 64 bits; larger arguments saturate.
inline std::uint64_t bell_number(std::size_t n)
{
    static constexpr std::uint64_t table[] = {
        1ull, 1ull, 2ull, 5ull, 15ull, 52ull, 203ull, 877ull, 4140ull, 21147ull,
        115975ull, 678570ull, 4213597ull, 27644437ull, 190899322ull, 1382958545ull,
        10480142147ull, 82864869804ull, 682076806159ull, 5832742205057ull,
        51724158235372ull, 474869816156751ull, 4506715738447323ull,
        44152005855084346ull, 445958869294805289ull, 4638590332229999353ull};
    if (n >= sizeof(table) / sizeof(table[0]))
        return UINT64_MAX;
    return table[n];
}

// Visits every set partition of {0..n-1} exactly once, as a restricted-growth
// string in lexicographic order: labels[i] is the cluster of node i and a new
// cluster always takes the next unused label.
template <class Visitor>
inline void enumerate_set_partitions(std::size_t n, Visitor&& visit)
{
    std::vector<std::size_t> labels(n, 0);
    if (n == 0) {
        visit(static_cast<const std::vector<std::size_t>&>(labels));
        return;
    }
    auto recurse = [&](auto&& self, std::size_t i, std::size_t used) -> void {
        if (i == n) {
            visit(static_cast<const std::vector<std::size_t>&>(labels));
            return;
        }
        for (std::size_t c = 0; c <= used; ++c) {
            labels[i] = c;
            self(self, i + 1, std::max(used, c + 1));
        }
    };
    recurse(recurse, 0, 0);
}

// Maximum disagreement of a per-node cluster assignment, computed directly
// from the labels. This is the oracle's own evaluation path.
inline std::size_t max_disagreement_of_labels(const Graph& g, const std::vector<std::size_t>& labels)
{
    std::size_t const n = g.node_count();
    std::vector<std::size_t> cluster_size(n, 0);
    for (std::size_t v = 0; v < n; ++v)
        ++cluster_size[labels[v]];
    std::size_t phi = 0;
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t same = 0;
        for (std::size_t u : g.neighbors(v))
            if (labels[u] == labels[v])
                ++same;
        phi = std::max(phi, (g.degree(v) - same) + (cluster_size[labels[v]] - 1 - same));
    }
    return phi;
}

struct ExactResult {
    std::size_t opt = 0;
    Partition argmin;
    std::uint64_t partitions_examined = 0;
};

// Exhaustive minimum of the maximum disagreement over all set partitions.
// The first optimum in lexicographic restricted-growth order is the witness.
// Refuses n above the node limit; raise the limit explicitly to override.
inline ExactResult brute_force_opt(const Graph& g, std::size_t node_limit = 13)
{
    std::size_t const n = g.node_count();
    if (n > node_limit)
        throw std::length_error(
            "brute force refused: n = " + std::to_string(n) + " would enumerate Bell(" +
            std::to_string(n) + ") = " + std::to_string(bell_number(n)) +
            " partitions; raise the node limit to override");

    ExactResult result;
    std::vector<std::size_t> best_labels(n, 0);
    bool have_best = false;
    enumerate_set_partitions(n, [&](const std::vector<std::size_t>& labels) {
        ++result.partitions_examined;
        std::size_t const phi = max_disagreement_of_labels(g, labels);
        if (!have_best || phi < result.opt) {
            result.opt = phi;
            best_labels = labels;
            have_best = true;
        }
    });
    result.argmin = Partition(best_labels);
    return result;
}

// Branch-and-bound variant: prunes assignments whose disagreement among the
// already-placed nodes reaches the incumbent. Agrees with brute_force_opt on
// the optimum but examines fewer leaves; never used to produce ground truth.
inline ExactResult brute_force_opt_pruned(const Graph& g, std::size_t node_limit = 13)
{
    std::size_t const n = g.node_count();
    if (n > node_limit)
        throw std::length_error(
            "brute force refused: n = " + std::to_string(n) + " would enumerate Bell(" +
            std::to_string(n) + ") = " + std::to_string(bell_number(n)) +
            " partitions; raise the node limit to override");

    ExactResult result;
    std::vector<std::size_t> labels(n, 0), best_labels(n, 0);
    // partial[v]: disagreement of v restricted to already-placed nodes; it can
    // only grow as more nodes are placed, so it is a valid pruning bound.
    std::vector<std::size_t> partial(n, 0);
    std::size_t best = SIZE_MAX;

    auto recurse = [&](auto&& self, std::size_t i, std::size_t used, std::size_t partial_max) -> void {
        if (partial_max >= best && best != SIZE_MAX)
            return;
        if (i == n) {
            ++result.partitions_examined;
            if (partial_max < best) {
                best = partial_max;
                best_labels = labels;
            }
            return;
        }
        for (std::size_t c = 0; c <= used; ++c) {
            labels[i] = c;
            std::size_t grown_max = partial_max;
            std::size_t disagreement_i = 0;
            for (std::size_t u = 0; u < i; ++u) {
                bool const adjacent = g.is_adjacent(u, i);
                bool const together = labels[u] == c;
                if (adjacent != together) {
                    ++partial[u];
                    ++disagreement_i;
                    grown_max = std::max(grown_max, partial[u]);
                }
            }
            partial[i] = disagreement_i;
            grown_max = std::max(grown_max, disagreement_i);
            self(self, i + 1, std::max(used, c + 1), grown_max);
            for (std::size_t u = 0; u < i; ++u)
                if (g.is_adjacent(u, i) != (labels[u] == c))
                    --partial[u];
        }
    };

    if (n == 0) {
        result.partitions_examined = 1;
        result.argmin = Partition(std::vector<std::size_t>{});
        return result;
    }
    recurse(recurse, 0, 0, 0);
    result.opt = best;
    result.argmin = Partition(best_labels);
    return result;
}

// Checks both forced-relation implications for every node pair: neighborhoods
// intersecting in more than 2 phi nodes force a common cluster, symmetric
// differences above 2 phi force distinct clusters. Holds for every partition
// of every graph; a false return indicates an implementation bug.
inline bool verify_lemma1(const Graph& g, const Partition& p)
{
    std::size_t const phi = max_disagreement(g, p);
    std::size_t const n = g.node_count();
    std::vector<std::vector<std::size_t>> closed(n);
    for (std::size_t v = 0; v < n; ++v)
        closed[v] = g.closed_neighborhood(v);
    for (std::size_t v = 1; v < n; ++v)
        for (std::size_t u = 0; u < v; ++u) {
            std::vector<std::size_t> common;
            std::set_intersection(closed[u].begin(), closed[u].end(), closed[v].begin(),
                                  closed[v].end(), std::back_inserter(common));
            std::size_t const inter = common.size();
            std::size_t const symdiff = closed[u].size() + closed[v].size() - 2 * inter;
            bool const together = p.cluster_of(u) == p.cluster_of(v);
            if (inter > 2 * phi && !together)
                return false;
            if (symdiff > 2 * phi && together)
                return false;
        }
    return true;
}

} // namespace mmcc

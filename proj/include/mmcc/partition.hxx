#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hxx"

namespace mmcc {

// Partition of the nodes 0..n-1 into nonempty, pairwise disjoint clusters.
// Cluster ids stay stable under joins (the larger side keeps its id, ties
// keep the smaller id) and need not be contiguous after joins.
class Partition {
public:
    Partition() = default;

    // Partition from an arbitrary per-node cluster assignment; cluster ids
    // are renumbered 0..k-1 in order of first occurrence.
    explicit Partition(const std::vector<std::size_t>& assignment)
    {
        cluster_of_.resize(assignment.size());
        std::vector<std::size_t> id_map(assignment.size(), npos);
        for (std::size_t v = 0; v < assignment.size(); ++v) {
            std::size_t const raw = assignment[v];
            if (raw >= assignment.size())
                throw std::invalid_argument("cluster assignment value out of range");
            if (id_map[raw] == npos) {
                id_map[raw] = members_.size();
                members_.emplace_back();
            }
            cluster_of_[v] = id_map[raw];
            members_[id_map[raw]].push_back(v);
        }
        cluster_count_ = members_.size();
    }

    static Partition singletons(std::size_t n)
    {
        Partition p;
        p.cluster_of_.resize(n);
        p.members_.resize(n);
        for (std::size_t v = 0; v < n; ++v) {
            p.cluster_of_[v] = v;
            p.members_[v] = {v};
        }
        p.cluster_count_ = n;
        return p;
    }

    std::size_t node_count() const { return cluster_of_.size(); }
    std::size_t cluster_count() const { return cluster_count_; }

    std::size_t cluster_of(std::size_t v) const
    {
        if (v >= cluster_of_.size())
            throw std::out_of_range("node id " + std::to_string(v) + " out of range");
        return cluster_of_[v];
    }

    bool is_cluster(std::size_t id) const
    {
        return id < members_.size() && !members_[id].empty();
    }

    const std::vector<std::size_t>& members(std::size_t id) const
    {
        if (!is_cluster(id))
            throw std::invalid_argument("no cluster with id " + std::to_string(id));
        return members_[id];
    }

    std::size_t cluster_size(std::size_t id) const { return members(id).size(); }

    std::vector<std::size_t> cluster_ids() const
    {
        std::vector<std::size_t> ids;
        ids.reserve(cluster_count_);
        for (std::size_t id = 0; id < members_.size(); ++id)
            if (!members_[id].empty())
                ids.push_back(id);
        return ids;
    }

    // Joins two clusters; the id of the larger cluster survives (ties: the
    // smaller id). Returns the surviving id.
    std::size_t join(std::size_t a, std::size_t b)
    {
        if (a == b)
            throw std::invalid_argument("cannot join a cluster with itself");
        if (!is_cluster(a) || !is_cluster(b))
            throw std::invalid_argument("join of nonexistent cluster id");
        std::size_t winner = a, loser = b;
        if (members_[winner].size() < members_[loser].size() ||
            (members_[winner].size() == members_[loser].size() && loser < winner))
            std::swap(winner, loser);
        for (std::size_t v : members_[loser]) {
            cluster_of_[v] = winner;
            members_[winner].push_back(v);
        }
        std::sort(members_[winner].begin(), members_[winner].end());
        members_[loser].clear();
        members_[loser].shrink_to_fit();
        --cluster_count_;
        return winner;
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::vector<std::size_t> cluster_of_;
    std::vector<std::vector<std::size_t>> members_;
    std::size_t cluster_count_ = 0;
};

// Disagreement of node v: |[v]_Π △ N_v|, i.e. the neighbors of v outside its
// cluster plus the cluster co-members outside N_v.
inline std::size_t node_disagreement(const Graph& g, const Partition& p, std::size_t v)
{
    if (v >= g.node_count())
        throw std::out_of_range("node id " + std::to_string(v) + " out of range");
    if (p.node_count() != g.node_count())
        throw std::invalid_argument("partition does not cover the node set of the graph");
    std::size_t const c = p.cluster_of(v);
    std::size_t shared = 0;
    for (std::size_t u : g.neighbors(v))
        if (p.cluster_of(u) == c)
            ++shared;
    return (g.degree(v) - shared) + (p.cluster_size(c) - 1 - shared);
}

// Maximum disagreement over all nodes; 0 for the empty graph.
inline std::size_t max_disagreement(const Graph& g, const Partition& p)
{
    std::size_t result = 0;
    for (std::size_t v = 0; v < g.node_count(); ++v)
        result = std::max(result, node_disagreement(g, p, v));
    return result;
}

// Per-node cluster labels renumbered 0..k-1 in node order; equal labelings
// mean equal partitions.
inline std::vector<std::size_t> canonical_labels(const Partition& p)
{
    std::vector<std::size_t> labels(p.node_count());
    std::vector<std::size_t> id_map;
    constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::vector<std::size_t> seen;
    for (std::size_t v = 0; v < p.node_count(); ++v) {
        std::size_t const c = p.cluster_of(v);
        if (c >= seen.size())
            seen.resize(c + 1, npos);
        if (seen[c] == npos) {
            seen[c] = id_map.size();
            id_map.push_back(c);
        }
        labels[v] = seen[c];
    }
    return labels;
}

// Writes "original_label<TAB>cluster_id" per node; cluster ids renumbered
// contiguously in first-occurrence order.
inline void write_partition(std::ostream& out, const Partition& p,
                            const std::vector<std::uint64_t>* original_labels = nullptr)
{
    auto const labels = canonical_labels(p);
    for (std::size_t v = 0; v < p.node_count(); ++v) {
        if (original_labels)
            out << (*original_labels)[v];
        else
            out << v;
        out << '\t' << labels[v] << '\n';
    }
}

} // namespace mmcc

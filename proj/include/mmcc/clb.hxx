#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "graph.hxx"
#include "intersection_table.hxx"
#include "partition.hxx"
#include "union_find.hxx"

namespace mmcc {

// Certificate of one feasibility check at level d. pi_d groups the nodes
// that are forced into a common cluster by any partition with maximum
// disagreement d; compat is the cluster-compatibility matrix (with the
// reflexive bit per cluster) whose complement marks clusters forced apart.
struct ClbCertificate {
    static constexpr std::size_t no_witness = static_cast<std::size_t>(-1);

    std::size_t d = 0;
    Partition pi_d;                    // cluster ids are contiguous 0..k-1
    std::vector<std::uint8_t> compat;  // k*k row-major, symmetric, includes diagonal
    std::vector<std::size_t> per_node_bound;
    bool all_clusters_self_compatible = true;
    std::size_t max_bound = 0;
    std::size_t witness = no_witness;  // node attaining max_bound (smallest id)
    bool feasible = true;

    bool compatible(std::size_t cluster_a, std::size_t cluster_b) const
    {
        return compat[cluster_a * pi_d.cluster_count() + cluster_b] != 0;
    }

    // U^d_C for cluster id c: all nodes whose pi_d cluster is compatible
    // with c, including c itself when self-compatible.
    std::vector<std::size_t> u_set(std::size_t c) const
    {
        std::vector<std::size_t> nodes;
        for (std::size_t v = 0; v < pi_d.node_count(); ++v)
            if (compatible(pi_d.cluster_of(v), c))
                nodes.push_back(v);
        return nodes;
    }
};

// Connected components of the graph whose edges are the node pairs with
// |N_u ∩ N_v| > 2d. Cluster ids are assigned 0..k-1 in first-occurrence
// node order.
inline Partition components_pi_d(const Graph& g, const IntersectionTable& table, std::size_t d)
{
    std::size_t const n = g.node_count();
    UnionFind uf(n);
    for (std::size_t v = 1; v < n; ++v)
        for (std::size_t u = 0; u < v; ++u)
            if (table.intersection_size(u, v) > 2 * d)
                uf.merge(u, v);
    std::vector<std::size_t> assignment(n);
    for (std::size_t v = 0; v < n; ++v)
        assignment[v] = uf.find(v);
    return Partition(assignment);
}

// Evaluates the feasibility condition at level d: every cluster of pi_d must
// be self-compatible and no per-node bound
//   |N_v \ U^d_{[v]}| + |[v]_{pi_d} \ N_v|
// may exceed d. The first term is counted through the compatibility matrix:
// it equals the number of u in N_v whose cluster is incompatible with the
// cluster of v.
inline ClbCertificate check_feasibility(const Graph& g, const IntersectionTable& table, std::size_t d)
{
    ClbCertificate cert;
    cert.d = d;
    cert.pi_d = components_pi_d(g, table, d);
    std::size_t const n = g.node_count();
    std::size_t const k = cert.pi_d.cluster_count();

    cert.compat.assign(k * k, 0);
    for (std::size_t c1 = 0; c1 < k; ++c1) {
        auto const& a = cert.pi_d.members(c1);
        for (std::size_t c2 = c1; c2 < k; ++c2) {
            auto const& b = cert.pi_d.members(c2);
            bool ok = true;
            for (std::size_t i = 0; ok && i < a.size(); ++i) {
                std::size_t const j0 = (c1 == c2) ? i + 1 : 0;
                for (std::size_t j = j0; j < b.size(); ++j)
                    if (table.symmetric_difference_size(a[i], b[j]) > 2 * d) {
                        ok = false;
                        break;
                    }
            }
            cert.compat[c1 * k + c2] = cert.compat[c2 * k + c1] = ok ? 1 : 0;
        }
        if (!cert.compat[c1 * k + c1])
            cert.all_clusters_self_compatible = false;
    }

    cert.per_node_bound.assign(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t const cv = cert.pi_d.cluster_of(v);
        std::size_t incompatible_neighbors = cert.compat[cv * k + cv] ? 0 : 1; // v itself
        std::size_t intra_neighbors = 0;
        for (std::size_t u : g.neighbors(v)) {
            std::size_t const cu = cert.pi_d.cluster_of(u);
            if (!cert.compat[cu * k + cv])
                ++incompatible_neighbors;
            if (cu == cv)
                ++intra_neighbors;
        }
        std::size_t const cluster_only = cert.pi_d.cluster_size(cv) - 1 - intra_neighbors;
        cert.per_node_bound[v] = incompatible_neighbors + cluster_only;
        if (cert.witness == ClbCertificate::no_witness || cert.per_node_bound[v] > cert.max_bound) {
            cert.max_bound = cert.per_node_bound[v];
            cert.witness = v;
        }
    }

    cert.feasible = cert.all_clusters_self_compatible && cert.max_bound <= d;
    return cert;
}

// Smallest d for which check_feasibility succeeds, found by bisection on
// [0, max_degree]. The feasibility predicate is presumed monotone in d; the
// boundary pair (d-1, d) is re-verified explicitly regardless of the
// bisection path, and check_all_levels additionally scans every level
// linearly and demands agreement.
inline ClbCertificate compute_clb(const Graph& g, const IntersectionTable& table,
                                  bool check_all_levels = false)
{
    auto verified_result = [&](std::size_t d) {
        ClbCertificate cert = check_feasibility(g, table, d);
        if (!cert.feasible)
            throw std::logic_error("clb bisection landed on an infeasible level");
        if (d > 0 && check_feasibility(g, table, d - 1).feasible)
            throw std::logic_error("clb feasibility is not monotone at the returned level");
        return cert;
    };

    auto bisect = [&]() -> std::size_t {
        if (check_feasibility(g, table, 0).feasible)
            return 0;
        std::size_t lo = 0;                 // infeasible
        std::size_t hi = g.max_degree();    // feasible: pi_d is singletons and all bounds vanish
        while (hi - lo > 1) {
            std::size_t const mid = lo + (hi - lo) / 2;
            if (check_feasibility(g, table, mid).feasible)
                hi = mid;
            else
                lo = mid;
        }
        return hi;
    };

    std::size_t const d = bisect();
    if (check_all_levels) {
        std::size_t linear = 0;
        while (linear <= g.max_degree() && !check_feasibility(g, table, linear).feasible)
            ++linear;
        if (linear != d)
            throw std::logic_error("clb bisection disagrees with the linear scan");
    }
    return verified_result(d);
}

} // namespace mmcc

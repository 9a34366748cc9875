#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <future>
#include <stdexcept>
#include <string>
#include <vector>

#include "approx4.hxx"
#include "graph.hxx"
#include "intersection_table.hxx"
#include "partition.hxx"

namespace mmcc {

// Tie-break among nodes of maximum disagreement (dc1).
enum class WorstNodeTie { largest_degree, smallest_degree };
// Tie-break within the neighbor sort (dc2).
enum class NeighborOrder { increasing_degree, decreasing_degree };
// Primary neighbor sort key (dc3).
enum class NeighborKey { combined, intersection_only, neg_symdiff_only };
// Join-discard rule (dc4).
enum class JoinGuard { base, strict };

struct DesignChoices {
    WorstNodeTie worst_node_tie = WorstNodeTie::largest_degree;
    NeighborOrder neighbor_order = NeighborOrder::decreasing_degree;
    NeighborKey neighbor_key = NeighborKey::combined;
    JoinGuard join_guard = JoinGuard::strict;

    bool operator==(const DesignChoices&) const = default;
};

// The reference configuration, exposed as variant "A" on the command line.
// The neighbor-order tie-break is not forced by the variant's definition; we
// fix decreasing degree, consistent with the largest-degree node tie-break.
inline DesignChoices variant_a_choices()
{
    return {WorstNodeTie::largest_degree, NeighborOrder::decreasing_degree,
            NeighborKey::combined, JoinGuard::strict};
}

// All 24 combinations in fixed enumeration order: dc1, dc2, dc3, dc4, each
// cycling in declaration order. This order breaks ties in the best-variant
// search.
inline std::array<DesignChoices, 24> all_design_choices()
{
    std::array<DesignChoices, 24> all;
    std::size_t i = 0;
    for (auto dc1 : {WorstNodeTie::largest_degree, WorstNodeTie::smallest_degree})
        for (auto dc2 : {NeighborOrder::increasing_degree, NeighborOrder::decreasing_degree})
            for (auto dc3 : {NeighborKey::combined, NeighborKey::intersection_only,
                             NeighborKey::neg_symdiff_only})
                for (auto dc4 : {JoinGuard::base, JoinGuard::strict})
                    all[i++] = {dc1, dc2, dc3, dc4};
    return all;
}

inline std::string to_string(WorstNodeTie v)
{
    return v == WorstNodeTie::largest_degree ? "largest_degree" : "smallest_degree";
}
inline std::string to_string(NeighborOrder v)
{
    return v == NeighborOrder::increasing_degree ? "increasing_degree" : "decreasing_degree";
}
inline std::string to_string(NeighborKey v)
{
    switch (v) {
    case NeighborKey::combined: return "combined";
    case NeighborKey::intersection_only: return "intersection_only";
    default: return "neg_symdiff_only";
    }
}
inline std::string to_string(JoinGuard v)
{
    return v == JoinGuard::base ? "base" : "strict";
}

inline std::string to_string(const DesignChoices& c)
{
    return to_string(c.worst_node_tie) + "-" + to_string(c.neighbor_order) + "-" +
           to_string(c.neighbor_key) + "-" + to_string(c.join_guard);
}

inline DesignChoices parse_design_choices(const std::string& text)
{
    for (auto const& c : all_design_choices())
        if (to_string(c) == text)
            return c;
    throw std::invalid_argument("unknown design-choice string '" + text + "'");
}

struct GreedyResult {
    Partition partition;
    DesignChoices choices;
    std::size_t phi = 0;
    std::size_t joins = 0;
    std::vector<std::size_t> phi_trace; // phi after init and after every join
};

namespace detail {

class GreedyJoin {
public:
    GreedyJoin(const Graph& g, Partition init, DesignChoices choices)
        : g_(g), pi_(std::move(init)), choices_(choices)
    {
        if (pi_.node_count() != g_.node_count())
            throw std::invalid_argument("initial partition does not cover the graph");
        std::size_t const n = g_.node_count();
        disagreement_.resize(n);
        for (std::size_t v = 0; v < n; ++v)
            disagreement_[v] = node_disagreement(g_, pi_, v);
        mark_.assign(n, 0);
    }

    GreedyResult run()
    {
        GreedyResult result;
        result.choices = choices_;
        std::size_t phi = current_phi();
        result.phi_trace.push_back(phi);
        while (g_.node_count() > 0) {
            std::size_t const w = select_worst_node();
            if (!try_join_from(w))
                break;
            ++result.joins;
            std::size_t const new_phi = current_phi();
            if (new_phi > phi)
                throw std::logic_error("greedy join increased the maximum disagreement");
            phi = new_phi;
            result.phi_trace.push_back(phi);
        }
        result.phi = phi;
        result.partition = std::move(pi_);
        return result;
    }

private:
    std::size_t current_phi() const
    {
        std::size_t phi = 0;
        for (std::size_t d : disagreement_)
            phi = std::max(phi, d);
        return phi;
    }

    std::size_t select_worst_node() const
    {
        std::size_t best = 0;
        for (std::size_t v = 1; v < g_.node_count(); ++v) {
            if (disagreement_[v] != disagreement_[best]) {
                if (disagreement_[v] > disagreement_[best])
                    best = v;
                continue;
            }
            std::size_t const dv = g_.degree(v), db = g_.degree(best);
            if (dv != db) {
                bool const prefer_large = choices_.worst_node_tie == WorstNodeTie::largest_degree;
                if (prefer_large ? dv > db : dv < db)
                    best = v;
            }
        }
        return best;
    }

    // Attempts the best join for w per the configured neighbor order;
    // returns false when every candidate is discarded.
    bool try_join_from(std::size_t w)
    {
        auto const closed_w = g_.closed_neighborhood(w);
        for (std::size_t x : closed_w)
            mark_[x] = 1;

        struct Candidate {
            std::size_t v;
            long long key;
            std::size_t degree;
        };
        std::vector<Candidate> candidates;
        candidates.reserve(closed_w.size());
        std::size_t const cw = pi_.cluster_of(w);
        for (std::size_t v : closed_w) {
            if (pi_.cluster_of(v) == cw)
                continue; // v already in the cluster of w
            std::size_t inter = 0;
            for (std::size_t x : g_.closed_neighborhood(v))
                inter += mark_[x];
            long long const symdiff = static_cast<long long>(g_.degree(w) + 1) +
                                      static_cast<long long>(g_.degree(v) + 1) -
                                      2 * static_cast<long long>(inter);
            long long key = 0;
            switch (choices_.neighbor_key) {
            case NeighborKey::combined: key = static_cast<long long>(inter) - symdiff; break;
            case NeighborKey::intersection_only: key = static_cast<long long>(inter); break;
            case NeighborKey::neg_symdiff_only: key = -symdiff; break;
            }
            candidates.push_back({v, key, g_.degree(v)});
        }
        for (std::size_t x : closed_w)
            mark_[x] = 0;

        std::sort(candidates.begin(), candidates.end(), [&](const Candidate& a, const Candidate& b) {
            if (a.key != b.key)
                return a.key > b.key;
            if (a.degree != b.degree)
                return choices_.neighbor_order == NeighborOrder::increasing_degree
                           ? a.degree < b.degree
                           : a.degree > b.degree;
            return a.v < b.v;
        });

        for (auto const& cand : candidates)
            if (attempt_join(w, cand.v))
                return true;
        return false;
    }

    bool attempt_join(std::size_t w, std::size_t v)
    {
        std::size_t const cw = pi_.cluster_of(w);
        std::size_t const cv = pi_.cluster_of(v);
        auto const& a = pi_.members(cw);
        auto const& b = pi_.members(cv);
        std::size_t const joint_size = a.size() + b.size();

        // Disagreement of every member with the joint cluster C = [v] ∪ [w].
        joint_members_.clear();
        joint_disagreement_.clear();
        std::size_t max_in_joint = 0;
        for (auto const* side : {&a, &b})
            for (std::size_t u : *side) {
                std::size_t inter = 1; // u itself
                for (std::size_t x : g_.neighbors(u)) {
                    std::size_t const cx = pi_.cluster_of(x);
                    if (cx == cw || cx == cv)
                        ++inter;
                }
                std::size_t const sd = (g_.degree(u) + 1) + joint_size - 2 * inter;
                joint_members_.push_back(u);
                joint_disagreement_.push_back(sd);
                max_in_joint = std::max(max_in_joint, sd);
            }

        if (max_in_joint > disagreement_[v])
            return false; // joining would exceed the disagreement of v
        if (choices_.join_guard == JoinGuard::strict) {
            for (std::size_t i = 0; i < joint_members_.size(); ++i) {
                std::size_t const u = joint_members_[i];
                if (disagreement_[u] < disagreement_[w] &&
                    joint_disagreement_[i] == disagreement_[w])
                    return false;
            }
        }

        pi_.join(cw, cv);
        for (std::size_t i = 0; i < joint_members_.size(); ++i)
            disagreement_[joint_members_[i]] = joint_disagreement_[i];
        return true;
    }

    const Graph& g_;
    Partition pi_;
    DesignChoices choices_;
    std::vector<std::size_t> disagreement_;
    std::vector<std::uint8_t> mark_;
    std::vector<std::size_t> joint_members_;
    std::vector<std::size_t> joint_disagreement_;
};

} // namespace detail

// Greedy joining local search: repeatedly pick a node of maximum
// disagreement and join its cluster with the cluster of one of its
// neighbors, preferring neighbors whose neighborhood looks most like the
// node's own; a join is discarded if it would exceed the chosen neighbor's
// current disagreement (the strict guard discards a few more). Terminates
// when the worst node admits no join.
inline GreedyResult greedy_join(const Graph& g, Partition init, DesignChoices choices)
{
    return detail::GreedyJoin(g, std::move(init), choices).run();
}

inline GreedyResult run_variant_a(const Graph& g, const IntersectionTable& table)
{
    return greedy_join(g, approx_4(g, table).partition, variant_a_choices());
}

inline GreedyResult run_variant_a(const Graph& g)
{
    return run_variant_a(g, build_intersection_table(g));
}

struct VariantOutcome {
    DesignChoices choices;
    std::size_t phi = 0;
    std::size_t joins = 0;
};

struct BestVariantResult {
    GreedyResult best;
    std::vector<VariantOutcome> variants; // all 24, in enumeration order
};

// Runs greedy joining from the 4-approximation for all 24 design-choice
// combinations and keeps the first minimum-phi result in enumeration order.
// The variants are independent; with parallel=true they fan out over the
// shared immutable graph and are reduced deterministically.
inline BestVariantResult run_best_variant(const Graph& g, const IntersectionTable& table,
                                          bool parallel = false)
{
    Partition const init = approx_4(g, table).partition;
    auto const all = all_design_choices();

    std::vector<GreedyResult> results(all.size());
    if (parallel) {
        std::vector<std::future<GreedyResult>> futures;
        futures.reserve(all.size());
        for (auto const& choices : all)
            futures.push_back(std::async(std::launch::async, [&g, init, choices]() {
                return greedy_join(g, init, choices);
            }));
        for (std::size_t i = 0; i < futures.size(); ++i)
            results[i] = futures[i].get();
    } else {
        for (std::size_t i = 0; i < all.size(); ++i)
            results[i] = greedy_join(g, init, all[i]);
    }

    BestVariantResult out;
    std::size_t best_index = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        out.variants.push_back({all[i], results[i].phi, results[i].joins});
        if (results[i].phi < results[best_index].phi)
            best_index = i;
    }
    out.best = std::move(results[best_index]);
    return out;
}

inline BestVariantResult run_best_variant(const Graph& g, bool parallel = false)
{
    return run_best_variant(g, build_intersection_table(g), parallel);
}

} // namespace mmcc

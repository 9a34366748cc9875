#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace mmcc {

// Undirected simple graph on nodes 0..n-1, stored as sorted adjacency lists.
// The edge set is interpreted as the positive edges of a complete signed
// graph: every absent pair is implicitly a negative edge.
class Graph {
public:
    Graph() = default;

    Graph(std::size_t node_count, const std::vector<std::pair<std::size_t, std::size_t>>& edges)
        : adjacency_(node_count)
    {
        for (auto const& [u, v] : edges) {
            if (u >= node_count || v >= node_count)
                throw std::invalid_argument("edge endpoint out of range");
            if (u == v)
                throw std::invalid_argument("self-loops are not allowed");
            adjacency_[u].push_back(v);
            adjacency_[v].push_back(u);
        }
        for (auto& neighbors : adjacency_) {
            std::sort(neighbors.begin(), neighbors.end());
            neighbors.erase(std::unique(neighbors.begin(), neighbors.end()), neighbors.end());
            edge_count_ += neighbors.size();
            max_degree_ = std::max(max_degree_, neighbors.size());
        }
        edge_count_ /= 2;
    }

    std::size_t node_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    std::size_t max_degree() const { return max_degree_; }

    std::size_t degree(std::size_t v) const { return neighbors(v).size(); }

    const std::vector<std::size_t>& neighbors(std::size_t v) const
    {
        if (v >= adjacency_.size())
            throw std::out_of_range("node id " + std::to_string(v) + " out of range");
        return adjacency_[v];
    }

    bool is_adjacent(std::size_t u, std::size_t v) const
    {
        auto const& adj = neighbors(u);
        return std::binary_search(adj.begin(), adj.end(), v);
    }

    // Closed neighborhood N_v = {v} plus the neighbors of v, sorted ascending.
    std::vector<std::size_t> closed_neighborhood(std::size_t v) const
    {
        auto const& adj = neighbors(v);
        std::vector<std::size_t> closed;
        closed.reserve(adj.size() + 1);
        auto pos = std::lower_bound(adj.begin(), adj.end(), v);
        closed.insert(closed.end(), adj.begin(), pos);
        closed.push_back(v);
        closed.insert(closed.end(), pos, adj.end());
        return closed;
    }

    // |N_v| = degree(v) + 1
    std::size_t closed_neighborhood_size(std::size_t v) const { return degree(v) + 1; }

private:
    std::vector<std::vector<std::size_t>> adjacency_;
    std::size_t edge_count_ = 0;
    std::size_t max_degree_ = 0;
};

// Result of reading an edge-list file: the graph with nodes relabeled to
// 0..n-1 in first-occurrence order, plus the label mapping and counts of
// dropped input lines.
struct ParseResult {
    Graph graph;
    std::vector<std::uint64_t> original_label;                  // internal id -> input label
    std::unordered_map<std::uint64_t, std::size_t> internal_id; // input label -> internal id
    std::size_t self_loops_dropped = 0;
    std::size_t duplicate_edges_merged = 0;
};

namespace detail {

inline std::uint64_t parse_node_label(const std::string& token, std::size_t line_number)
{
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw std::runtime_error("parse error at line " + std::to_string(line_number) +
                                 ": malformed node token '" + token + "'");
    return value;
}

} // namespace detail

// Reads a SNAP-style edge list: one edge per line as two whitespace-separated
// nonnegative integer labels, '#'-prefixed comment lines and blank lines
// ignored. Self-loop lines are dropped, duplicate edges merged.
inline ParseResult parse_edge_list(std::istream& in)
{
    ParseResult result;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::set<std::pair<std::size_t, std::size_t>> seen;

    auto intern = [&](std::uint64_t label) {
        auto [it, inserted] = result.internal_id.try_emplace(label, result.original_label.size());
        if (inserted)
            result.original_label.push_back(label);
        return it->second;
    };

    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        auto const first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream tokens(line);
        std::string a, b, extra;
        if (!(tokens >> a >> b))
            throw std::runtime_error("parse error at line " + std::to_string(line_number) +
                                     ": expected two node tokens");
        if (tokens >> extra)
            throw std::runtime_error("parse error at line " + std::to_string(line_number) +
                                     ": unexpected trailing token '" + extra + "'");
        std::uint64_t const label_a = detail::parse_node_label(a, line_number);
        std::uint64_t const label_b = detail::parse_node_label(b, line_number);
        if (label_a == label_b) {
            ++result.self_loops_dropped;
            continue;
        }
        std::size_t const u = intern(label_a);
        std::size_t const v = intern(label_b);
        if (seen.emplace(std::min(u, v), std::max(u, v)).second)
            edges.emplace_back(u, v);
        else
            ++result.duplicate_edges_merged;
    }
    result.graph = Graph(result.original_label.size(), edges);
    return result;
}

inline ParseResult parse_edge_list(const std::string& text)
{
    std::istringstream in(text);
    return parse_edge_list(in);
}

// Writes one edge per line, "u v" with u < v in node order. When labels are
// given, internal ids are translated back to the original input labels.
inline void write_edge_list(std::ostream& out, const Graph& g,
                            const std::vector<std::uint64_t>* labels = nullptr)
{
    for (std::size_t u = 0; u < g.node_count(); ++u)
        for (std::size_t v : g.neighbors(u))
            if (u < v) {
                if (labels)
                    out << (*labels)[u] << ' ' << (*labels)[v] << '\n';
                else
                    out << u << ' ' << v << '\n';
            }
}

} // namespace mmcc

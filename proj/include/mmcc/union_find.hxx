#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace mmcc {

// Union-find over 0..n-1 with union by size and path halving.
class UnionFind {
public:
    explicit UnionFind(std::size_t n)
        : parent_(n), size_(n, 1), component_count_(n)
    {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t v)
    {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }

    bool merge(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (size_[a] < size_[b])
            std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        --component_count_;
        return true;
    }

    std::size_t component_count() const { return component_count_; }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
    std::size_t component_count_;
};

} // namespace mmcc

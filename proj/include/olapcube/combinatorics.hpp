#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace olapcube {

// One report view over a cube: a fixed horizontal-axis dimension plus the
// pivot dimensions stacked on the vertical axis. The pivot list carries the
// display order; view identity treats the pivots as a set.
struct ViewSpec {
    std::string horizontal;
    std::vector<std::string> pivots;

    std::size_t arity() const noexcept { return pivots.size() + 1; }

    // Sorted copy of the pivots, the set identity of the view.
    std::vector<std::string> pivot_set() const;

    bool operator==(const ViewSpec&) const = default;
};

// Per-arity view counts for an n-dimensional cube.
struct ViewCensus {
    std::uint64_t n = 0;
    std::map<std::uint64_t, std::uint64_t> per_arity;  // r -> count, r = 1..n
    std::uint64_t total = 0;
};

// k!, exact. k > 20 does not fit 64 bits and raises ArithmeticOverflow.
std::uint64_t factorial(std::uint64_t k);

// C(n, r), computed multiplicatively so every value that fits 64 bits
// succeeds regardless of n. r > n raises DomainError.
std::uint64_t binomial(std::uint64_t n, std::uint64_t r);

// Number of distinct report views of arity r over n dimensions:
// n * C(n-1, r-1). Requires 1 <= r <= n.
std::uint64_t view_count(std::uint64_t n, std::uint64_t r);

// Sum of view_count(n, r) over r = 1..n; equal to n * 2^(n-1).
std::uint64_t total_view_count(std::uint64_t n);

// Per-arity counts plus total for an n-dimensional cube.
ViewCensus view_census(std::uint64_t n);

// Every view of arity r over the named dimensions: each choice of horizontal
// axis paired with each (r-1)-subset of the rest. Pivots are listed in dims
// order; results are sorted by horizontal (dims order), then by pivot set.
std::vector<ViewSpec> enumerate_views(const std::vector<std::string>& dims, std::uint64_t r);

}  // namespace olapcube

#include "olapcube/combinatorics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "olapcube/checked_math.hpp"
#include "olapcube/errors.hpp"

namespace olapcube {

std::vector<std::string> ViewSpec::pivot_set() const {
    auto s = pivots;
    std::sort(s.begin(), s.end());
    return s;
}

std::uint64_t factorial(std::uint64_t k) {
    if (k > 20) {
        throw ArithmeticOverflow("factorial(" + std::to_string(k) + ") exceeds 64 bits");
    }
    std::uint64_t acc = 1;
    for (std::uint64_t i = 2; i <= k; ++i) acc *= i;
    return acc;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
    if (r > n) {
        throw DomainError("binomial: r=" + std::to_string(r) + " exceeds n=" + std::to_string(n));
    }
    r = std::min(r, n - r);
    // After step i the accumulator holds C(n-r+i, i), so every division is
    // exact and no intermediate ever exceeds the final value.
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        acc = acc * (n - r + i) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max()) {
            throw ArithmeticOverflow("binomial(" + std::to_string(n) + ", " + std::to_string(r) +
                                     ") exceeds 64 bits");
        }
    }
    return static_cast<std::uint64_t>(acc);
}

std::uint64_t view_count(std::uint64_t n, std::uint64_t r) {
    if (n == 0) {
        throw DomainError("view_count: a cube has at least one dimension");
    }
    if (r == 0 || r > n) {
        throw DomainError("view_count: arity " + std::to_string(r) + " is outside 1.." +
                          std::to_string(n));
    }
    return checked_mul(n, binomial(n - 1, r - 1), "view_count");
}

std::uint64_t total_view_count(std::uint64_t n) {
    if (n == 0) {
        throw DomainError("total_view_count: a cube has at least one dimension");
    }
    std::uint64_t total = 0;
    for (std::uint64_t r = 1; r <= n; ++r) {
        total = checked_add(total, view_count(n, r), "total_view_count");
    }
    return total;
}

ViewCensus view_census(std::uint64_t n) {
    ViewCensus census;
    census.n = n;
    census.total = total_view_count(n);  // validates n
    for (std::uint64_t r = 1; r <= n; ++r) {
        census.per_arity[r] = view_count(n, r);
    }
    return census;
}

std::vector<ViewSpec> enumerate_views(const std::vector<std::string>& dims, std::uint64_t r) {
    if (dims.empty()) {
        throw DomainError("enumerate_views: dimension list is empty");
    }
    {
        auto sorted = dims;
        std::sort(sorted.begin(), sorted.end());
        auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end()) {
            throw DomainError("enumerate_views: duplicate dimension '" + *dup + "'");
        }
    }
    const std::size_t n = dims.size();
    if (r == 0 || r > n) {
        throw DomainError("enumerate_views: arity " + std::to_string(r) + " is outside 1.." +
                          std::to_string(n));
    }
    const std::size_t k = static_cast<std::size_t>(r) - 1;

    std::vector<ViewSpec> views;
    views.reserve(view_count(n, r));
    for (std::size_t h = 0; h < n; ++h) {
        std::vector<std::size_t> others;
        others.reserve(n - 1);
        for (std::size_t i = 0; i < n; ++i) {
            if (i != h) others.push_back(i);
        }
        // k-subsets of `others`, indices ascending: lexicographic in dims order.
        std::vector<std::size_t> pick(k);
        std::iota(pick.begin(), pick.end(), std::size_t{0});
        while (true) {
            ViewSpec view;
            view.horizontal = dims[h];
            view.pivots.reserve(k);
            for (auto idx : pick) view.pivots.push_back(dims[others[idx]]);
            views.push_back(std::move(view));

            if (k == 0) break;
            std::size_t i = k;
            while (i > 0 && pick[i - 1] == others.size() - k + (i - 1)) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return views;
}

}  // namespace olapcube

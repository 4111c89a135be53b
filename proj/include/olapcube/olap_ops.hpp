#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "olapcube/cube.hpp"

namespace olapcube {

// A column reference or substring extraction of one, the pieces the
// drill-down link grammar allows: IDENT | left(IDENT,k) | right(IDENT,k) |
// substr(IDENT,start,len) with 1-based start.
struct ColumnExpr {
    enum class Kind { Whole, Left, Right, Substr };

    Kind kind = Kind::Whole;
    std::string column;
    std::size_t arg1 = 0;  // left/right: k; substr: start
    std::size_t arg2 = 0;  // substr: len

    // Applies the extraction; nullopt when the value is too short for it,
    // which joins treat as a failed predicate rather than an error.
    std::optional<std::string> eval(const std::string& value) const;

    std::string to_string() const;

    bool operator==(const ColumnExpr&) const = default;
};

// One join clause: a detail-side expression matched against a cube dimension
// value, which may itself pass through an extraction (right(ang,2) etc.).
struct LinkBinding {
    ColumnExpr detail;
    ColumnExpr dimension;  // .column names a schema dimension

    bool operator==(const LinkBinding&) const = default;
};

// Declarative mapping from detail-record columns to cube dimensions.
struct DetailLink {
    std::vector<LinkBinding> bindings;

    // Binding whose dimension side targets `dimension`, or nullptr.
    const LinkBinding* find(const std::string& dimension) const;
};

// Parses the link text grammar, one `<detail-expr> = <dim-expr>` per line;
// blank lines are skipped. A dimension bound twice raises DomainError.
DetailLink parse_detail_link(const std::string& text);

// Conjunctive per-dimension membership filter. Clause order is kept as
// given; values are stored sorted and deduplicated.
struct DiceFilter {
    struct Clause {
        std::string dimension;
        std::vector<std::string> values;  // sorted, unique, non-empty

        bool operator==(const Clause&) const = default;
    };

    std::vector<Clause> clauses;

    // DomainError on an empty value set or a dimension already present.
    void add(const std::string& dimension, std::vector<std::string> values);

    const Clause* find(const std::string& dimension) const;

    bool empty() const noexcept { return clauses.empty(); }

    bool operator==(const DiceFilter&) const = default;
};

// Cells whose `dim` component equals `value`; same schema. An empty result
// is not an error, an unknown dimension is.
FactTable slice(const FactTable& facts, const std::string& dim, const std::string& value);

// Cells passing every clause's membership test; unnamed dimensions are
// unrestricted, so an empty filter returns the cube unchanged.
FactTable dice(const FactTable& facts, const DiceFilter& filter);

// Aggregates away every dimension not in `keep`; result dimensions follow
// the keep order and the total measure is preserved.
FactTable rollup(const FactTable& facts, const std::vector<std::string>& keep);

// Values for a subset of the schema dimensions.
using CellKey = std::map<std::string, std::string>;

// Detail rows whose linked expressions match the cell's dimension values
// on every dimension the key assigns. Rows too short for an extraction
// simply fail the join; an assigned dimension missing from the link is a
// DomainError.
std::vector<std::vector<std::string>> drilldown(const FactTable& facts, const CellKey& cell_key,
                                                const DetailStore& store, const DetailLink& link);

}  // namespace olapcube

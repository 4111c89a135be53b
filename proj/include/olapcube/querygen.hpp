#pragma once

#include <optional>
#include <string>
#include <vector>

#include "olapcube/combinatorics.hpp"
#include "olapcube/cube.hpp"
#include "olapcube/olap_ops.hpp"

namespace olapcube {

struct SqlWhereClause {
    std::string dimension;
    std::string op;  // "=" or "IN"
    std::vector<std::string> values;

    bool operator==(const SqlWhereClause&) const = default;
};

// Canonical aggregation query: the select list minus the aggregate always
// equals the group-by list, in the same order.
struct SqlQuery {
    std::string text;
    std::vector<std::string> select_columns;  // excludes the aggregate term
    std::vector<std::string> group_by_columns;
    std::vector<SqlWhereClause> where_clauses;
};

// SELECT <h>, <pivots...>, SUM(<measure>) AS jumlah FROM <table>
// [WHERE ...] GROUP BY <h>, <pivots...>;  String literals are single-quoted
// with embedded quotes doubled; a single-value clause uses `=`, multi-value
// uses `IN (...)`. Invalid identifiers raise DomainError.
SqlQuery generate_sql(const ViewSpec& view, const std::string& table_name,
                      const std::string& measure,
                      const std::optional<DiceFilter>& filter = std::nullopt);

// One query per view over all arities 1..n, in enumeration order; the list
// has total_view_count(n) entries.
std::vector<SqlQuery> batch_generate(const Schema& schema, const std::string& table_name);

}  // namespace olapcube

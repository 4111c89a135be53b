#include "olapcube/querygen.hpp"

#include <algorithm>
#include <cctype>

#include "olapcube/errors.hpp"

namespace olapcube {

namespace {

bool is_sql_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

void require_identifier(const std::string& s, const char* role) {
    if (!is_sql_identifier(s)) {
        throw DomainError(std::string(role) + " '" + s + "' is not a valid SQL identifier");
    }
}

std::string quote_literal(const std::string& value) {
    std::string out = "'";
    for (char c : value) {
        if (c == '\'') out += '\'';
        out += c;
    }
    out += '\'';
    return out;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) out += sep;
        out += items[i];
    }
    return out;
}

}  // namespace

SqlQuery generate_sql(const ViewSpec& view, const std::string& table_name,
                      const std::string& measure, const std::optional<DiceFilter>& filter) {
    require_identifier(view.horizontal, "column");
    for (const auto& p : view.pivots) {
        require_identifier(p, "column");
        if (p == view.horizontal) {
            throw DomainError("view pivots repeat the horizontal column '" + p + "'");
        }
    }
    {
        auto sorted = view.pivot_set();
        auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end()) {
            throw DomainError("view repeats pivot column '" + *dup + "'");
        }
    }
    require_identifier(table_name, "table name");
    require_identifier(measure, "measure");

    SqlQuery query;
    query.select_columns.push_back(view.horizontal);
    query.select_columns.insert(query.select_columns.end(), view.pivots.begin(),
                                view.pivots.end());
    query.group_by_columns = query.select_columns;

    if (filter.has_value()) {
        for (const auto& clause : filter->clauses) {
            require_identifier(clause.dimension, "column");
            query.where_clauses.push_back(SqlWhereClause{
                clause.dimension, clause.values.size() == 1 ? "=" : "IN", clause.values});
        }
    }

    std::string text = "SELECT " + join(query.select_columns, ", ") + ", SUM(" + measure +
                       ") AS jumlah FROM " + table_name;
    if (!query.where_clauses.empty()) {
        std::vector<std::string> conjuncts;
        conjuncts.reserve(query.where_clauses.size());
        for (const auto& clause : query.where_clauses) {
            if (clause.op == "=") {
                conjuncts.push_back(clause.dimension + " = " + quote_literal(clause.values[0]));
            } else {
                std::vector<std::string> literals;
                literals.reserve(clause.values.size());
                for (const auto& v : clause.values) literals.push_back(quote_literal(v));
                conjuncts.push_back(clause.dimension + " IN (" + join(literals, ", ") + ")");
            }
        }
        text += " WHERE " + join(conjuncts, " AND ");
    }
    text += " GROUP BY " + join(query.group_by_columns, ", ") + ";";
    query.text = std::move(text);
    return query;
}

std::vector<SqlQuery> batch_generate(const Schema& schema, const std::string& table_name) {
    schema.validate();
    std::vector<SqlQuery> queries;
    const std::uint64_t n = schema.dimension_count();
    for (std::uint64_t r = 1; r <= n; ++r) {
        for (const auto& view : enumerate_views(schema.dimensions, r)) {
            queries.push_back(generate_sql(view, table_name, schema.measure));
        }
    }
    return queries;
}

}  // namespace olapcube

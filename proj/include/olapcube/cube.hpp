#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace olapcube {

// A full cell address: one value per dimension, in schema order.
using Key = std::vector<std::string>;

// Measures are non-negative counts; sums are overflow-checked.
using Measure = std::uint64_t;

// Ordered dimension names plus the measure column they aggregate.
struct Schema {
    std::vector<std::string> dimensions;
    std::string measure;

    std::size_t dimension_count() const noexcept { return dimensions.size(); }

    bool has_dimension(const std::string& name) const;

    // Position of a dimension; DomainError when unknown.
    std::size_t index_of(const std::string& name) const;

    // At least one dimension, names non-empty and unique, measure not a dimension.
    void validate() const;

    bool operator==(const Schema&) const = default;
};

// One input record: a value per dimension plus the measure to aggregate.
struct FactRow {
    Key key;
    Measure measure = 0;
};

// The cube: aggregated measures addressed by full keys. Built once by
// load_fact_table (or an OLAP operation) and treated as immutable after;
// a missing key means absent, which is distinct from a stored zero.
struct FactTable {
    Schema schema;
    std::map<Key, Measure> cells;

    std::size_t cell_count() const noexcept { return cells.size(); }

    // Sum over all cells, overflow-checked.
    Measure total() const;
};

// Aggregates rows into a cube; duplicate keys are summed into one cell.
FactTable load_fact_table(const std::vector<FactRow>& rows, const Schema& schema);

// Measure stored at a full key, or nullopt when the cell is absent.
std::optional<Measure> cell_value(const FactTable& facts, const Key& key);

// Plain record store that drill-down reaches into.
struct DetailStore {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    std::size_t column_index(const std::string& name) const;
    void validate() const;  // every row has exactly |columns| values
};

}  // namespace olapcube

#include "olapcube/cube.hpp"

#include <algorithm>

#include "olapcube/checked_math.hpp"
#include "olapcube/errors.hpp"

namespace olapcube {

bool Schema::has_dimension(const std::string& name) const {
    return std::find(dimensions.begin(), dimensions.end(), name) != dimensions.end();
}

std::size_t Schema::index_of(const std::string& name) const {
    auto it = std::find(dimensions.begin(), dimensions.end(), name);
    if (it == dimensions.end()) {
        throw DomainError("unknown dimension '" + name + "'");
    }
    return static_cast<std::size_t>(it - dimensions.begin());
}

void Schema::validate() const {
    if (dimensions.empty()) {
        throw DomainError("schema needs at least one dimension");
    }
    if (measure.empty()) {
        throw DomainError("schema needs a measure column name");
    }
    for (const auto& d : dimensions) {
        if (d.empty()) throw DomainError("schema has an empty dimension name");
    }
    auto sorted = dimensions;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
        throw DomainError("schema has duplicate dimension '" + *dup + "'");
    }
    if (has_dimension(measure)) {
        throw DomainError("measure column '" + measure + "' cannot also be a dimension");
    }
}

Measure FactTable::total() const {
    Measure sum = 0;
    for (const auto& [key, value] : cells) {
        sum = checked_add(sum, value, "fact table total");
    }
    return sum;
}

FactTable load_fact_table(const std::vector<FactRow>& rows, const Schema& schema) {
    schema.validate();
    FactTable facts;
    facts.schema = schema;
    const std::size_t n = schema.dimension_count();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (row.key.size() != n) {
            throw IngestError(i + 1, "key has " + std::to_string(row.key.size()) +
                                         " components, schema has " + std::to_string(n));
        }
        auto [it, inserted] = facts.cells.try_emplace(row.key, row.measure);
        if (!inserted) {
            it->second = checked_add(it->second, row.measure, "cell aggregation");
        }
    }
    return facts;
}

std::optional<Measure> cell_value(const FactTable& facts, const Key& key) {
    const std::size_t n = facts.schema.dimension_count();
    if (key.size() != n) {
        throw DomainError("cell key has " + std::to_string(key.size()) +
                          " components, schema has " + std::to_string(n));
    }
    auto it = facts.cells.find(key);
    if (it == facts.cells.end()) return std::nullopt;
    return it->second;
}

std::size_t DetailStore::column_index(const std::string& name) const {
    auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) {
        throw DomainError("unknown detail column '" + name + "'");
    }
    return static_cast<std::size_t>(it - columns.begin());
}

void DetailStore::validate() const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != columns.size()) {
            throw IngestError(i + 1, "detail row has " + std::to_string(rows[i].size()) +
                                         " values, store has " + std::to_string(columns.size()) +
                                         " columns");
        }
    }
}

}  // namespace olapcube

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "olapcube/combinatorics.hpp"
#include "olapcube/cube.hpp"

namespace olapcube {

// One line of a pivot report: the measure per axis value for a fixed
// combination of pivot values. The label is the pivot values joined by a
// single space, in the view's display order.
struct Series {
    std::string label;
    std::vector<std::string> pivot_values;        // aligned with view.pivots
    std::vector<std::optional<Measure>> cells;    // aligned with axis_values

    bool operator==(const Series&) const = default;
};

// A materialized view: horizontal axis values crossed with one series per
// pivot-value combination. Absent cells stay absent here; renderers show 0.
struct PivotReport {
    ViewSpec view;
    std::string measure;  // measure column name, for headers and legends
    std::vector<std::string> axis_values;  // ascending
    std::vector<Series> series;            // sorted by label
    Measure grand_total = 0;
};

// Rolls the cube up onto the view's dimensions, then pivots. Axis values
// sort ascending, series sort by legend label. An empty cube gives an empty
// report; an unknown dimension is a DomainError.
PivotReport materialize_view(const FactTable& facts, const ViewSpec& view);

// True when both reports show the same horizontal axis, the same pivot set,
// and identical values cell by cell, regardless of pivot display order.
bool views_equivalent(const PivotReport& a, const PivotReport& b);

// Fixed-width text table: header, one row per axis value, and a final
// "Jumlah" row carrying the grand total. Deterministic bytes.
std::string render_table(const PivotReport& report);

// Same layout as CSV: axis name + legends header, rows, final "Jumlah" row.
std::string render_csv(const PivotReport& report);

}  // namespace olapcube

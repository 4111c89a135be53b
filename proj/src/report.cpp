#include "olapcube/report.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "olapcube/checked_math.hpp"
#include "olapcube/csv.hpp"
#include "olapcube/errors.hpp"
#include "olapcube/olap_ops.hpp"

namespace olapcube {

namespace {

std::string join_with_space(const std::vector<std::string>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ' ';
        out += values[i];
    }
    return out;
}

void validate_view(const FactTable& facts, const ViewSpec& view) {
    facts.schema.index_of(view.horizontal);
    for (const auto& p : view.pivots) {
        facts.schema.index_of(p);
        if (p == view.horizontal) {
            throw DomainError("view pivots repeat the horizontal dimension '" + p + "'");
        }
    }
    auto sorted = view.pivot_set();
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
        throw DomainError("view repeats pivot dimension '" + *dup + "'");
    }
}

// (dimension, value) pairs sorted by dimension name: the identity of a
// series independent of pivot display order.
std::vector<std::pair<std::string, std::string>> canonical_pivot(const ViewSpec& view,
                                                                 const Series& series) {
    std::vector<std::pair<std::string, std::string>> kv;
    kv.reserve(series.pivot_values.size());
    for (std::size_t i = 0; i < series.pivot_values.size(); ++i) {
        kv.emplace_back(view.pivots[i], series.pivot_values[i]);
    }
    std::sort(kv.begin(), kv.end());
    return kv;
}

using CanonicalCells =
    std::map<std::pair<std::string, std::vector<std::pair<std::string, std::string>>>, Measure>;

CanonicalCells canonical_cells(const PivotReport& report) {
    CanonicalCells out;
    for (const auto& s : report.series) {
        auto pivot = canonical_pivot(report.view, s);
        for (std::size_t i = 0; i < s.cells.size(); ++i) {
            if (s.cells[i].has_value()) {
                out[{report.axis_values[i], pivot}] = *s.cells[i];
            }
        }
    }
    return out;
}

std::string cell_text(const std::optional<Measure>& cell) {
    return cell.has_value() ? std::to_string(*cell) : std::string("0");
}

}  // namespace

PivotReport materialize_view(const FactTable& facts, const ViewSpec& view) {
    validate_view(facts, view);

    std::vector<std::string> keep;
    keep.reserve(view.arity());
    keep.push_back(view.horizontal);
    keep.insert(keep.end(), view.pivots.begin(), view.pivots.end());
    FactTable rolled = rollup(facts, keep);

    std::set<std::string> axis;
    std::map<std::vector<std::string>, std::map<std::string, Measure>> combos;
    for (const auto& [key, measure] : rolled.cells) {
        axis.insert(key[0]);
        combos[std::vector<std::string>(key.begin() + 1, key.end())][key[0]] = measure;
    }

    PivotReport report;
    report.view = view;
    report.measure = facts.schema.measure;
    report.axis_values.assign(axis.begin(), axis.end());
    for (const auto& [pivot_values, column] : combos) {
        Series series;
        series.label = join_with_space(pivot_values);
        series.pivot_values = pivot_values;
        series.cells.reserve(report.axis_values.size());
        for (const auto& a : report.axis_values) {
            auto it = column.find(a);
            if (it == column.end()) {
                series.cells.emplace_back(std::nullopt);
            } else {
                series.cells.emplace_back(it->second);
            }
        }
        report.series.push_back(std::move(series));
    }
    std::sort(report.series.begin(), report.series.end(),
              [](const Series& a, const Series& b) { return a.label < b.label; });

    report.grand_total = 0;
    for (const auto& s : report.series) {
        for (const auto& c : s.cells) {
            if (c.has_value()) {
                report.grand_total = checked_add(report.grand_total, *c, "report grand total");
            }
        }
    }
    return report;
}

bool views_equivalent(const PivotReport& a, const PivotReport& b) {
    if (a.view.horizontal != b.view.horizontal) return false;
    if (a.view.pivot_set() != b.view.pivot_set()) return false;
    return canonical_cells(a) == canonical_cells(b);
}

namespace {

// Shared table shape for the text and CSV renderers. The grand total sits
// in the last column of the final "Jumlah" row.
std::vector<std::vector<std::string>> report_grid(const PivotReport& report) {
    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> header;
    header.push_back(report.view.horizontal);
    for (const auto& s : report.series) {
        header.push_back(s.label.empty() ? report.measure : s.label);
    }
    grid.push_back(std::move(header));

    for (std::size_t i = 0; i < report.axis_values.size(); ++i) {
        std::vector<std::string> row;
        row.push_back(report.axis_values[i]);
        for (const auto& s : report.series) {
            row.push_back(cell_text(s.cells[i]));
        }
        grid.push_back(std::move(row));
    }

    std::vector<std::string> total_row;
    total_row.push_back("Jumlah");
    for (std::size_t i = 1; i < report.series.size(); ++i) total_row.emplace_back();
    total_row.push_back(std::to_string(report.grand_total));
    grid.push_back(std::move(total_row));
    return grid;
}

}  // namespace

std::string render_table(const PivotReport& report) {
    auto grid = report_grid(report);

    std::vector<std::size_t> widths;
    for (const auto& row : grid) {
        if (row.size() > widths.size()) widths.resize(row.size(), 0);
        for (std::size_t c = 0; c < row.size(); ++c) {
            widths[c] = std::max(widths[c], row[c].size());
        }
    }

    std::string out;
    for (const auto& row : grid) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) line += "  ";
            const std::string& cell = row[c];
            if (c == 0) {
                line += cell;
                line.append(widths[c] - cell.size(), ' ');
            } else {
                line.append(widths[c] - cell.size(), ' ');
                line += cell;
            }
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

std::string render_csv(const PivotReport& report) {
    CsvTable csv;
    auto grid = report_grid(report);
    csv.header = std::move(grid.front());
    csv.rows.assign(std::make_move_iterator(grid.begin() + 1), std::make_move_iterator(grid.end()));
    return write_csv(csv);
}

}  // namespace olapcube

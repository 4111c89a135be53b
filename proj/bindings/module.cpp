#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "olapcube/chart.hpp"
#include "olapcube/combinatorics.hpp"
#include "olapcube/csv.hpp"
#include "olapcube/cube.hpp"
#include "olapcube/dsl.hpp"
#include "olapcube/errors.hpp"
#include "olapcube/olap_ops.hpp"
#include "olapcube/querygen.hpp"
#include "olapcube/report.hpp"

namespace py = pybind11;
using namespace olapcube;

namespace {

FactTable load_rows(const std::vector<std::pair<Key, Measure>>& rows, const Schema& schema) {
    std::vector<FactRow> fact_rows;
    fact_rows.reserve(rows.size());
    for (const auto& [key, measure] : rows) fact_rows.push_back(FactRow{key, measure});
    return load_fact_table(fact_rows, schema);
}

DiceFilter filter_from_dict(const std::vector<std::pair<std::string, std::vector<std::string>>>&
                                clauses) {
    DiceFilter filter;
    for (const auto& [dim, values] : clauses) filter.add(dim, values);
    return filter;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Embedded OLAP cube engine: slice/dice/roll-up/drill-down, report-view "
              "enumeration, pivot reports, SVG charts and SQL generation";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ArithmeticOverflow>(m, "ArithmeticOverflowError", PyExc_OverflowError);
    py::register_exception<ParseError>(m, "ExprParseError", PyExc_ValueError);

    // combinatorics
    py::class_<ViewSpec>(m, "ViewSpec")
        .def(py::init<std::string, std::vector<std::string>>(), py::arg("horizontal"),
             py::arg("pivots") = std::vector<std::string>{})
        .def_readonly("horizontal", &ViewSpec::horizontal)
        .def_readonly("pivots", &ViewSpec::pivots)
        .def_property_readonly("arity", &ViewSpec::arity)
        .def("pivot_set", &ViewSpec::pivot_set)
        .def(py::self == py::self)
        .def("__repr__",
             [](const ViewSpec& v) { return "ViewSpec('" + format_view_expr(v) + "')"; });

    py::class_<ViewCensus>(m, "ViewCensus")
        .def_readonly("n", &ViewCensus::n)
        .def_readonly("per_arity", &ViewCensus::per_arity)
        .def_readonly("total", &ViewCensus::total);

    m.def("factorial", &factorial, py::arg("k"));
    m.def("binomial", &binomial, py::arg("n"), py::arg("r"));
    m.def("view_count", &view_count, py::arg("n"), py::arg("r"));
    m.def("total_view_count", &total_view_count, py::arg("n"));
    m.def("view_census", &view_census, py::arg("n"));
    m.def("enumerate_views", &enumerate_views, py::arg("dims"), py::arg("arity"));

    // cube
    py::class_<Schema>(m, "Schema")
        .def(py::init<std::vector<std::string>, std::string>(), py::arg("dimensions"),
             py::arg("measure"))
        .def_readonly("dimensions", &Schema::dimensions)
        .def_readonly("measure", &Schema::measure)
        .def_property_readonly("dimension_count", &Schema::dimension_count)
        .def("validate", &Schema::validate)
        .def(py::self == py::self);

    py::class_<FactTable>(m, "FactTable")
        .def_readonly("schema", &FactTable::schema)
        .def_property_readonly("cells",
                               [](const FactTable& t) {
                                   py::dict cells;
                                   for (const auto& [key, measure] : t.cells) {
                                       cells[py::tuple(py::cast(key))] = measure;
                                   }
                                   return cells;
                               })
        .def_property_readonly("cell_count", &FactTable::cell_count)
        .def("total", &FactTable::total)
        .def("__len__", &FactTable::cell_count);

    m.def("load_fact_table", &load_rows, py::arg("rows"), py::arg("schema"),
          "Aggregate (key, measure) pairs into a cube");
    m.def("cell_value", &cell_value, py::arg("facts"), py::arg("key"));

    py::class_<DetailStore>(m, "DetailStore")
        .def(py::init<std::vector<std::string>, std::vector<std::vector<std::string>>>(),
             py::arg("columns"), py::arg("rows"))
        .def_readonly("columns", &DetailStore::columns)
        .def_readonly("rows", &DetailStore::rows);

    // olap ops
    py::class_<DiceFilter>(m, "DiceFilter")
        .def(py::init(&filter_from_dict), py::arg("clauses"))
        .def("__repr__", [](const DiceFilter& f) {
            std::string out = "DiceFilter(";
            for (std::size_t i = 0; i < f.clauses.size(); ++i) {
                if (i) out += "; ";
                out += f.clauses[i].dimension + "=";
                for (std::size_t j = 0; j < f.clauses[i].values.size(); ++j) {
                    if (j) out += ",";
                    out += f.clauses[i].values[j];
                }
            }
            return out + ")";
        });

    py::class_<DetailLink>(m, "DetailLink");

    m.def("slice", &slice, py::arg("facts"), py::arg("dim"), py::arg("value"));
    m.def("dice", &dice, py::arg("facts"), py::arg("filter"));
    m.def("rollup", &rollup, py::arg("facts"), py::arg("keep"));
    m.def("drilldown", &drilldown, py::arg("facts"), py::arg("cell_key"), py::arg("store"),
          py::arg("link"));
    m.def("parse_detail_link", &parse_detail_link, py::arg("text"));

    // report
    py::class_<Series>(m, "Series")
        .def_readonly("label", &Series::label)
        .def_readonly("pivot_values", &Series::pivot_values)
        .def_readonly("cells", &Series::cells);

    py::class_<PivotReport>(m, "PivotReport")
        .def_readonly("view", &PivotReport::view)
        .def_readonly("measure", &PivotReport::measure)
        .def_readonly("axis_values", &PivotReport::axis_values)
        .def_readonly("series", &PivotReport::series)
        .def_readonly("grand_total", &PivotReport::grand_total);

    m.def("materialize_view", &materialize_view, py::arg("facts"), py::arg("view"));
    m.def("views_equivalent", &views_equivalent, py::arg("a"), py::arg("b"));
    m.def("render_table", &render_table, py::arg("report"));
    m.def("render_csv", &render_csv, py::arg("report"));
    m.def("render_chart", &render_chart, py::arg("report"));

    // querygen
    py::class_<SqlWhereClause>(m, "SqlWhereClause")
        .def_readonly("dimension", &SqlWhereClause::dimension)
        .def_readonly("op", &SqlWhereClause::op)
        .def_readonly("values", &SqlWhereClause::values);

    py::class_<SqlQuery>(m, "SqlQuery")
        .def_readonly("text", &SqlQuery::text)
        .def_readonly("select_columns", &SqlQuery::select_columns)
        .def_readonly("group_by_columns", &SqlQuery::group_by_columns)
        .def_readonly("where_clauses", &SqlQuery::where_clauses)
        .def("__repr__", [](const SqlQuery& q) { return q.text; });

    m.def(
        "generate_sql",
        [](const ViewSpec& view, const std::string& table, const std::string& measure,
           const std::optional<DiceFilter>& filter) {
            return generate_sql(view, table, measure, filter);
        },
        py::arg("view"), py::arg("table"), py::arg("measure"),
        py::arg("filter") = std::nullopt);
    m.def("batch_generate", &batch_generate, py::arg("schema"), py::arg("table"));

    // text surfaces
    m.def("parse_view_expr", &parse_view_expr, py::arg("text"));
    m.def("format_view_expr", &format_view_expr, py::arg("view"));
    m.def("parse_filter_expr", &parse_filter_expr, py::arg("text"));
    m.def("parse_key_expr", &parse_key_expr, py::arg("text"));

    // csv io
    m.def(
        "read_fact_table",
        [](const std::filesystem::path& path, const std::string& measure) {
            return fact_table_from_csv(read_csv_file(path), measure);
        },
        py::arg("path"), py::arg("measure") = std::string{},
        "Load a fact table CSV; the measure defaults to the last column");
    m.def(
        "read_detail_store",
        [](const std::filesystem::path& path) {
            return detail_store_from_csv(read_csv_file(path));
        },
        py::arg("path"));
    m.def("fact_table_to_csv_text",
          [](const FactTable& facts) { return write_csv(fact_table_to_csv(facts)); },
          py::arg("facts"));
}

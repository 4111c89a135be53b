#include "olapcube/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>

#include "olapcube/chart.hpp"
#include "olapcube/combinatorics.hpp"
#include "olapcube/csv.hpp"
#include "olapcube/cube.hpp"
#include "olapcube/dsl.hpp"
#include "olapcube/errors.hpp"
#include "olapcube/olap_ops.hpp"
#include "olapcube/querygen.hpp"
#include "olapcube/report.hpp"

namespace olapcube::cli {

namespace {

// Bad invocation rather than bad data; maps to exit code 1.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

ViewSpec view_from_arg(const std::string& expr) {
    try {
        return parse_view_expr(expr);
    } catch (const ParseError& e) {
        throw UsageError(std::string("invalid --view expression: ") + e.what());
    }
}

DiceFilter filter_from_arg(const std::string& expr) {
    try {
        return parse_filter_expr(expr);
    } catch (const ParseError& e) {
        throw UsageError(std::string("invalid --filter expression: ") + e.what());
    }
}

CellKey key_from_arg(const std::string& expr) {
    try {
        return parse_key_expr(expr);
    } catch (const ParseError& e) {
        throw UsageError(std::string("invalid --key expression: ") + e.what());
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw DomainError("cannot write file '" + path.string() + "'");
    }
    out << text;
    if (!out) {
        throw DomainError("write failed for '" + path.string() + "'");
    }
}

struct LoadOptions {
    std::string input;
    std::string measure;  // empty: last column
};

FactTable load_cube(const LoadOptions& options) {
    return fact_table_from_csv(read_csv_file(options.input), options.measure);
}

void print_fact_table(const FactTable& facts, const std::string& output, std::ostream& out) {
    std::string text = write_csv(fact_table_to_csv(facts));
    if (output.empty()) {
        out << text;
    } else {
        write_text_file(output, text);
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Embedded OLAP cube engine: slice, dice, roll-up, drill-down, "
                 "report-view enumeration, pivot reports, SVG charts and SQL generation"};
    app.name("olapcube");
    app.require_subcommand(1);

    // count
    std::uint64_t count_dims = 0;
    std::uint64_t count_arity = 0;
    auto* cmd_count = app.add_subcommand("count", "Count report views per arity");
    cmd_count->add_option("--dims", count_dims, "Number of dimensions")->required();
    auto* count_arity_opt = cmd_count->add_option("--arity", count_arity, "Only this arity");

    // enumerate
    std::vector<std::string> enum_dims;
    std::uint64_t enum_arity = 0;
    auto* cmd_enum = app.add_subcommand("enumerate", "List every view of one arity");
    cmd_enum->add_option("--dims", enum_dims, "Dimension names")->delimiter(',')->required();
    cmd_enum->add_option("--arity", enum_arity, "View arity")->required();

    // slice / dice
    LoadOptions slice_load;
    std::string slice_filter, slice_output;
    auto* cmd_slice = app.add_subcommand("slice", "Keep cells with one dimension value");
    cmd_slice->add_option("--input", slice_load.input, "Fact table CSV")->required();
    cmd_slice->add_option("--measure", slice_load.measure, "Measure column (default: last)");
    cmd_slice->add_option("--filter", slice_filter, "dimension=value")->required();
    cmd_slice->add_option("--output", slice_output, "Output CSV (default: stdout)");

    LoadOptions dice_load;
    std::string dice_filter, dice_output;
    auto* cmd_dice = app.add_subcommand("dice", "Keep cells matching value sets");
    cmd_dice->add_option("--input", dice_load.input, "Fact table CSV")->required();
    cmd_dice->add_option("--measure", dice_load.measure, "Measure column (default: last)");
    cmd_dice->add_option("--filter", dice_filter, "dim=v1,v2; dim2=v3")->required();
    cmd_dice->add_option("--output", dice_output, "Output CSV (default: stdout)");

    // rollup
    LoadOptions rollup_load;
    std::vector<std::string> rollup_keep;
    auto* cmd_rollup = app.add_subcommand("rollup", "Aggregate away dimensions");
    cmd_rollup->add_option("--input", rollup_load.input, "Fact table CSV")->required();
    cmd_rollup->add_option("--measure", rollup_load.measure, "Measure column (default: last)");
    cmd_rollup->add_option("--keep", rollup_keep, "Dimensions to keep")->delimiter(',')->required();

    // view
    LoadOptions view_load;
    std::string view_expr, view_filter, view_format = "table";
    auto* cmd_view = app.add_subcommand("view", "Materialize a pivot report");
    cmd_view->add_option("--input", view_load.input, "Fact table CSV")->required();
    cmd_view->add_option("--measure", view_load.measure, "Measure column (default: last)");
    cmd_view->add_option("--view", view_expr, "horizontal|pivot1,pivot2")->required();
    cmd_view->add_option("--filter", view_filter, "Dice filter applied first");
    cmd_view->add_option("--format", view_format, "table or csv")
        ->check(CLI::IsMember({"table", "csv"}));

    // chart
    LoadOptions chart_load;
    std::string chart_expr, chart_filter, chart_out;
    auto* cmd_chart = app.add_subcommand("chart", "Render a view as an SVG line chart");
    cmd_chart->add_option("--input", chart_load.input, "Fact table CSV")->required();
    cmd_chart->add_option("--measure", chart_load.measure, "Measure column (default: last)");
    cmd_chart->add_option("--view", chart_expr, "horizontal|pivot1,pivot2")->required();
    cmd_chart->add_option("--filter", chart_filter, "Dice filter applied first");
    cmd_chart->add_option("--out", chart_out, "Output SVG file")->required();

    // sql
    std::string sql_view, sql_filter, sql_table, sql_measure = "jum", sql_out_dir;
    bool sql_all = false;
    auto* cmd_sql = app.add_subcommand("sql", "Emit canonical SQL for a view");
    cmd_sql->add_option("--view", sql_view, "horizontal|pivot1,pivot2")->required();
    cmd_sql->add_option("--filter", sql_filter, "WHERE filter");
    cmd_sql->add_option("--table", sql_table, "Table name")->required();
    cmd_sql->add_option("--measure", sql_measure, "Measure column (default: jum)");
    cmd_sql->add_flag("--all", sql_all, "One query per view over the named dimensions");
    cmd_sql->add_option("--out-dir", sql_out_dir, "Write one .sql file per view");

    // drilldown
    LoadOptions drill_load;
    std::string drill_detail, drill_link, drill_key;
    auto* cmd_drill = app.add_subcommand("drilldown", "List detail records behind a cell");
    cmd_drill->add_option("--input", drill_load.input, "Fact table CSV")->required();
    cmd_drill->add_option("--measure", drill_load.measure, "Measure column (default: last)");
    cmd_drill->add_option("--detail", drill_detail, "Detail store CSV")->required();
    cmd_drill->add_option("--link", drill_link, "Detail link file")->required();
    cmd_drill->add_option("--key", drill_key, "dim=value; dim2=value2")->required();

    try {
        auto reversed = args;
        std::reverse(reversed.begin(), reversed.end());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (cmd_count->parsed()) {
            if (count_arity_opt->count() > 0) {
                out << view_count(count_dims, count_arity) << "\n";
            } else {
                ViewCensus census = view_census(count_dims);
                for (const auto& [r, c] : census.per_arity) {
                    out << r << ":" << c << " ";
                }
                out << "total:" << census.total << "\n";
            }
        } else if (cmd_enum->parsed()) {
            for (const auto& view : enumerate_views(enum_dims, enum_arity)) {
                out << format_view_expr(view) << "\n";
            }
        } else if (cmd_slice->parsed()) {
            DiceFilter filter = filter_from_arg(slice_filter);
            if (filter.clauses.size() != 1 || filter.clauses[0].values.size() != 1) {
                throw UsageError("slice takes exactly one dimension=value pair; use dice for more");
            }
            FactTable facts = load_cube(slice_load);
            print_fact_table(slice(facts, filter.clauses[0].dimension, filter.clauses[0].values[0]),
                             slice_output, out);
        } else if (cmd_dice->parsed()) {
            DiceFilter filter = filter_from_arg(dice_filter);
            FactTable facts = load_cube(dice_load);
            print_fact_table(dice(facts, filter), dice_output, out);
        } else if (cmd_rollup->parsed()) {
            FactTable facts = load_cube(rollup_load);
            print_fact_table(rollup(facts, rollup_keep), "", out);
        } else if (cmd_view->parsed()) {
            ViewSpec view = view_from_arg(view_expr);
            std::optional<DiceFilter> filter;
            if (!view_filter.empty()) filter = filter_from_arg(view_filter);
            FactTable facts = load_cube(view_load);
            if (filter.has_value()) facts = dice(facts, *filter);
            PivotReport report = materialize_view(facts, view);
            out << (view_format == "csv" ? render_csv(report) : render_table(report));
        } else if (cmd_chart->parsed()) {
            ViewSpec view = view_from_arg(chart_expr);
            std::optional<DiceFilter> filter;
            if (!chart_filter.empty()) filter = filter_from_arg(chart_filter);
            FactTable facts = load_cube(chart_load);
            if (filter.has_value()) facts = dice(facts, *filter);
            write_text_file(chart_out, render_chart(materialize_view(facts, view)));
        } else if (cmd_sql->parsed()) {
            ViewSpec view = view_from_arg(sql_view);
            std::optional<DiceFilter> filter;
            if (!sql_filter.empty()) filter = filter_from_arg(sql_filter);
            std::vector<SqlQuery> queries;
            if (sql_all) {
                if (filter.has_value()) {
                    throw UsageError("--all enumerates unfiltered views; drop --filter");
                }
                std::vector<std::string> dims;
                dims.push_back(view.horizontal);
                dims.insert(dims.end(), view.pivots.begin(), view.pivots.end());
                queries = batch_generate(Schema{dims, sql_measure}, sql_table);
            } else {
                queries.push_back(generate_sql(view, sql_table, sql_measure, filter));
            }
            if (sql_out_dir.empty()) {
                for (const auto& q : queries) out << q.text << "\n";
            } else {
                std::filesystem::create_directories(sql_out_dir);
                for (std::size_t i = 0; i < queries.size(); ++i) {
                    char name[32];
                    std::snprintf(name, sizeof(name), "view_%03zu.sql", i + 1);
                    write_text_file(std::filesystem::path(sql_out_dir) / name,
                                    queries[i].text + "\n");
                }
            }
        } else if (cmd_drill->parsed()) {
            CellKey key = key_from_arg(drill_key);
            FactTable facts = load_cube(drill_load);
            DetailStore store = detail_store_from_csv(read_csv_file(drill_detail));
            std::ifstream link_in(drill_link, std::ios::binary);
            if (!link_in) {
                throw DomainError("cannot open file '" + drill_link + "'");
            }
            std::string link_text((std::istreambuf_iterator<char>(link_in)),
                                  std::istreambuf_iterator<char>());
            DetailLink link = parse_detail_link(link_text);
            CsvTable result;
            result.header = store.columns;
            result.rows = drilldown(facts, key, store, link);
            out << write_csv(result);
        }
        return kOk;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const ArithmeticOverflow& e) {
        err << "error: " << e.what() << "\n";
        return kOverflowError;
    } catch (const std::runtime_error& e) {
        // DomainError, IngestError, ParseError from data files.
        err << "error: " << e.what() << "\n";
        return kDataError;
    }
}

}  // namespace olapcube::cli

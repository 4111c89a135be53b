#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "olapcube/cli.hpp"
#include "olapcube/dsl.hpp"

namespace fs = std::filesystem;
using olapcube::cli::run;

namespace {

const std::string kData = OLAPCUBE_DATA_DIR;

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& text) {
    std::size_t lines = 0;
    for (char c : text) {
        if (c == '\n') ++lines;
    }
    return lines;
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("olapcube_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("count prints the per-arity census") {
    RunResult r = invoke({"count", "--dims", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "1:3 2:6 3:3 total:12\n");
    CHECK(r.err.empty());
}

TEST_CASE("count with an arity prints one number") {
    RunResult r = invoke({"count", "--dims", "3", "--arity", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "6\n");
}

TEST_CASE("count overflow exits 3") {
    RunResult r = invoke({"count", "--dims", "70"});
    CHECK(r.code == 3);
    CHECK(r.out.empty());
    CHECK(count_lines(r.err) == 1);
}

TEST_CASE("enumerate lists views one per line") {
    RunResult r = invoke({"enumerate", "--dims", "A,B,C", "--arity", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "A|B,C\nB|A,C\nC|A,B\n");
}

TEST_CASE("enumerate output re-parses to the same views") {
    RunResult r = invoke({"enumerate", "--dims", "ang,jenj,ps,jenkel", "--arity", "3"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::size_t n = 0;
    while (std::getline(lines, line)) {
        olapcube::ViewSpec view = olapcube::parse_view_expr(line);
        CHECK(olapcube::format_view_expr(view) == line);
        ++n;
    }
    CHECK(n == 12);  // view_count(4,3)
}

TEST_CASE("rollup prints per-cohort sums as csv") {
    RunResult r = invoke({"rollup", "--input", kData + "/tabel1.csv", "--measure", "jumlah",
                          "--keep", "ang"});
    CHECK(r.code == 0);
    CHECK(r.out == "ang,jumlah\n2000,68\n2001,106\n2002,154\n");
}

TEST_CASE("slice writes the filtered cube") {
    TempDir tmp;
    fs::path out_file = tmp.path / "sliced.csv";
    RunResult r = invoke({"slice", "--input", kData + "/tabel1.csv", "--filter", "ang=2000",
                          "--output", out_file.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(slurp(out_file) ==
          "ang,jenj,ps,jenkel,jumlah\n"
          "2000,3,11,p,12\n"
          "2000,3,11,w,13\n"
          "2000,5,11,p,11\n"
          "2000,5,11,w,22\n"
          "2000,5,22,p,10\n");
}

TEST_CASE("slice rejects multi-value filters") {
    RunResult r = invoke({"slice", "--input", kData + "/tabel1.csv", "--filter", "ang=2000,2001"});
    CHECK(r.code == 1);
    CHECK(count_lines(r.err) == 1);
}

TEST_CASE("dice equals slice for a single-value filter") {
    RunResult sliced = invoke({"slice", "--input", kData + "/tabel1.csv", "--filter", "ang=2000"});
    RunResult diced = invoke({"dice", "--input", kData + "/tabel1.csv", "--filter", "ang=2000"});
    CHECK(sliced.code == 0);
    CHECK(diced.code == 0);
    CHECK(sliced.out == diced.out);
}

TEST_CASE("view renders the pivot table with the grand total") {
    RunResult r = invoke({"view", "--input", kData + "/tabel2.csv", "--view",
                          "Angkatan|Jenjang,Jenis"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Angkatan  3 P  3 W  5 P  5 W\n") == 0);
    CHECK(r.out.find("328\n") != std::string::npos);
}

TEST_CASE("view with a filter and csv format") {
    RunResult r = invoke({"view", "--input", kData + "/tabel1.csv", "--filter", "ang=2000",
                          "--view", "jenkel|jenj", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "jenkel,3,5\np,12,21\nw,13,22\nJumlah,,68\n");
}

TEST_CASE("unknown dimensions exit 2") {
    RunResult r = invoke({"view", "--input", kData + "/tabel1.csv", "--view", "bulan"});
    CHECK(r.code == 2);
    CHECK(count_lines(r.err) == 1);
}

TEST_CASE("bad view expressions exit 1") {
    RunResult r = invoke({"view", "--input", kData + "/tabel1.csv", "--view", "|x"});
    CHECK(r.code == 1);
    CHECK(count_lines(r.err) == 1);
}

TEST_CASE("missing input files exit 2") {
    RunResult r = invoke({"view", "--input", kData + "/nope.csv", "--view", "ang"});
    CHECK(r.code == 2);
}

TEST_CASE("usage errors exit 1") {
    CHECK(invoke({"frobnicate"}).code == 1);
    CHECK(invoke({}).code == 1);
    CHECK(invoke({"count"}).code == 1);  // missing --dims
}

TEST_CASE("chart writes an svg file") {
    TempDir tmp;
    fs::path svg_file = tmp.path / "chart.svg";
    RunResult r = invoke({"chart", "--input", kData + "/tabel2.csv", "--view",
                          "Angkatan|Jenjang,Jenis", "--out", svg_file.string()});
    CHECK(r.code == 0);
    std::string svg = slurp(svg_file);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("<polyline") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("sql emits the canonical statement") {
    RunResult r = invoke({"sql", "--view", "ang|jenj,jenkel", "--table", "dwmhs", "--filter",
                          "ang=2000"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "SELECT ang, jenj, jenkel, SUM(jum) AS jumlah FROM dwmhs "
          "WHERE ang = '2000' GROUP BY ang, jenj, jenkel;\n");
}

TEST_CASE("sql --all emits one statement per view") {
    RunResult r = invoke({"sql", "--view", "a|b,c", "--table", "t", "--all"});
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 12);
}

TEST_CASE("sql --all --out-dir writes one file per view") {
    TempDir tmp;
    fs::path dir = tmp.path / "queries";
    RunResult r = invoke({"sql", "--view", "a|b,c", "--table", "t", "--all", "--out-dir",
                          dir.string()});
    CHECK(r.code == 0);
    std::size_t files = 0;
    for (const auto& entry : fs::directory_iterator(dir)) {
        ++files;
        CHECK(entry.path().extension() == ".sql");
    }
    CHECK(files == 12);
    CHECK(slurp(dir / "view_001.sql") == "SELECT a, SUM(jum) AS jumlah FROM t GROUP BY a;\n");
}

TEST_CASE("drilldown lists the matching detail rows") {
    RunResult r = invoke({"drilldown", "--input", kData + "/tabel1.csv", "--detail",
                          kData + "/mastmhs.csv", "--link", kData + "/drilldown.link", "--key",
                          "ang=2000; jenj=5; ps=11; jenkel=p"});
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 12);  // header + 11 matches
    CHECK(r.out.rfind("nim,nama,jenkel\n", 0) == 0);
}

TEST_CASE("drilldown with an unbound key dimension exits 2") {
    TempDir tmp;
    fs::path link = tmp.path / "partial.link";
    std::ofstream(link) << "left(nim,2) = right(ang,2)\n";
    RunResult r = invoke({"drilldown", "--input", kData + "/tabel1.csv", "--detail",
                          kData + "/mastmhs.csv", "--link", link.string(), "--key", "ps=11"});
    CHECK(r.code == 2);
}

TEST_CASE("subcommand output is byte-identical across runs") {
    std::vector<std::vector<std::string>> invocations = {
        {"count", "--dims", "5"},
        {"enumerate", "--dims", "a,b,c,d", "--arity", "2"},
        {"rollup", "--input", kData + "/tabel1.csv", "--keep", "jenkel,ang"},
        {"view", "--input", kData + "/tabel2.csv", "--view", "Angkatan|Jenis"},
        {"sql", "--view", "x|y,z", "--table", "t", "--all"},
    };
    for (const auto& args : invocations) {
        RunResult first = invoke(args);
        RunResult second = invoke(args);
        CHECK(first.code == 0);
        CHECK(first.out == second.out);
    }
}

TEST_CASE("help is available") {
    RunResult r = invoke({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("count") != std::string::npos);
    CHECK(r.out.find("drilldown") != std::string::npos);
}

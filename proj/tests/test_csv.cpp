#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "olapcube/csv.hpp"
#include "olapcube/errors.hpp"

using namespace olapcube;

TEST_CASE("parse a plain csv") {
    CsvTable t = parse_csv("a,b,c\n1,2,3\n4,5,6\n");
    CHECK(t.header == std::vector<std::string>{"a", "b", "c"});
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0] == std::vector<std::string>{"1", "2", "3"});
    CHECK(t.rows[1] == std::vector<std::string>{"4", "5", "6"});
}

TEST_CASE("quoted fields, embedded separators and quotes") {
    CsvTable t = parse_csv("name,note\n\"a,b\",\"say \"\"hi\"\"\"\n\"multi\nline\",plain\n");
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0][0] == "a,b");
    CHECK(t.rows[0][1] == "say \"hi\"");
    CHECK(t.rows[1][0] == "multi\nline");
}

TEST_CASE("crlf endings and a missing final newline are accepted") {
    CsvTable t = parse_csv("a,b\r\n1,2\r\n3,4");
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[1] == std::vector<std::string>{"3", "4"});
}

TEST_CASE("blank lines are skipped") {
    CsvTable t = parse_csv("a,b\n\n1,2\n\n");
    CHECK(t.rows.size() == 1);
}

TEST_CASE("ragged rows are ingestion errors naming the row") {
    try {
        parse_csv("a,b\n1\n");
        FAIL("expected IngestError");
    } catch (const IngestError& e) {
        CHECK(e.row_index() == 1);
    }
}

TEST_CASE("malformed csv raises parse errors") {
    CHECK_THROWS_AS(parse_csv(""), ParseError);
    CHECK_THROWS_AS(parse_csv("a,\"b\n"), ParseError);        // unterminated quote
    CHECK_THROWS_AS(parse_csv("a,b\"c\n"), ParseError);       // quote inside unquoted field
    CHECK_THROWS_AS(parse_csv("\"a\"x,b\n"), ParseError);     // text after closing quote
}

TEST_CASE("write/parse round trip preserves arbitrary fields") {
    std::mt19937 rng(97);
    const std::string alphabet = "ab,\"\n x";
    std::uniform_int_distribution<std::size_t> len(0, 6);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
        CsvTable t;
        t.header = {"c1", "c2", "c3"};
        std::uniform_int_distribution<std::size_t> rows(0, 5);
        const std::size_t row_count = rows(rng);
        for (std::size_t r = 0; r < row_count; ++r) {
            std::vector<std::string> row;
            for (int c = 0; c < 3; ++c) {
                std::string field;
                const std::size_t field_len = len(rng);
                for (std::size_t i = 0; i < field_len; ++i) field += alphabet[pick(rng)];
                row.push_back(std::move(field));
            }
            t.rows.push_back(std::move(row));
        }
        CHECK(parse_csv(write_csv(t)) == t);
    }
}

TEST_CASE("fact_table_from_csv defaults the measure to the last column") {
    CsvTable t = parse_csv("ang,jenj,jumlah\n2000,5,7\n2000,5,3\n");
    FactTable facts = fact_table_from_csv(t);
    CHECK(facts.schema.dimensions == std::vector<std::string>{"ang", "jenj"});
    CHECK(facts.schema.measure == "jumlah");
    CHECK(facts.cell_count() == 1);
    CHECK(cell_value(facts, {"2000", "5"}) == 10);
}

TEST_CASE("fact_table_from_csv honors a named measure column") {
    CsvTable t = parse_csv("jumlah,ang\n7,2000\n");
    FactTable facts = fact_table_from_csv(t, "jumlah");
    CHECK(facts.schema.dimensions == std::vector<std::string>{"ang"});
    CHECK(cell_value(facts, {"2000"}) == 7);
    CHECK_THROWS_AS(fact_table_from_csv(t, "nope"), DomainError);
}

TEST_CASE("fact_table_from_csv rejects bad measures, naming the row") {
    CsvTable t = parse_csv("ang,jumlah\n2000,5\n2001,x\n");
    try {
        fact_table_from_csv(t);
        FAIL("expected IngestError");
    } catch (const IngestError& e) {
        CHECK(e.row_index() == 2);
    }
    CHECK_THROWS_AS(fact_table_from_csv(parse_csv("a,m\nx,-1\n")), IngestError);
    CHECK_THROWS_AS(fact_table_from_csv(parse_csv("a,m\nx,1.5\n")), IngestError);
    CHECK_THROWS_AS(fact_table_from_csv(parse_csv("a,m\nx,\n")), IngestError);
}

TEST_CASE("a csv with only a measure column cannot bind a cube") {
    CHECK_THROWS_AS(fact_table_from_csv(parse_csv("jumlah\n5\n")), DomainError);
}

TEST_CASE("fact_table_to_csv writes cells in key order") {
    CsvTable t = parse_csv("ang,jumlah\n2001,4\n2000,7\n2001,1\n");
    FactTable facts = fact_table_from_csv(t);
    CHECK(write_csv(fact_table_to_csv(facts)) == "ang,jumlah\n2000,7\n2001,5\n");
}

TEST_CASE("detail_store_from_csv keeps columns and rows") {
    DetailStore store = detail_store_from_csv(parse_csv("nim,nama\n1,a\n2,b\n"));
    CHECK(store.columns == std::vector<std::string>{"nim", "nama"});
    CHECK(store.rows.size() == 2);
}

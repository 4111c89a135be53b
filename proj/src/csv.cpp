#include "olapcube/csv.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "olapcube/errors.hpp"

namespace olapcube {

CsvTable parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool in_quotes = false;
    bool field_quoted = false;

    auto end_field = [&] {
        record.push_back(std::move(field));
        field.clear();
        field_quoted = false;
    };
    auto end_record = [&] {
        if (record.empty() && field.empty() && !field_quoted) {
            return;  // blank line
        }
        end_field();
        records.push_back(std::move(record));
        record.clear();
    };

    std::size_t i = 0;
    const std::size_t size = text.size();
    while (i < size) {
        char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < size && text[i + 1] == '"') {
                    field += '"';
                    i += 2;
                } else {
                    in_quotes = false;
                    ++i;
                }
            } else {
                field += c;
                ++i;
            }
        } else if (c == '"' && field.empty() && !field_quoted) {
            in_quotes = true;
            field_quoted = true;
            ++i;
        } else if (c == ',') {
            end_field();
            ++i;
        } else if (c == '\n') {
            end_record();
            ++i;
        } else if (c == '\r' && i + 1 < size && text[i + 1] == '\n') {
            end_record();
            i += 2;
        } else if (c == '"') {
            throw ParseError("unexpected '\"' inside unquoted field", i + 1);
        } else if (field_quoted) {
            throw ParseError("text after closing quote", i + 1);
        } else {
            field += c;
            ++i;
        }
    }
    if (in_quotes) {
        throw ParseError("unterminated quoted field", size + 1);
    }
    end_record();

    if (records.empty()) {
        throw ParseError("csv input has no header row");
    }

    CsvTable table;
    table.header = std::move(records.front());
    for (std::size_t r = 1; r < records.size(); ++r) {
        if (records[r].size() != table.header.size()) {
            throw IngestError(r, "has " + std::to_string(records[r].size()) +
                                     " fields, header has " + std::to_string(table.header.size()));
        }
        table.rows.push_back(std::move(records[r]));
    }
    return table;
}

CsvTable read_csv_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DomainError("cannot open file '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_csv(buffer.str());
}

namespace {

void write_field(std::string& out, const std::string& field) {
    bool needs_quotes = field.find_first_of(",\"\r\n") != std::string::npos;
    if (!needs_quotes) {
        out += field;
        return;
    }
    out += '"';
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
}

void write_record(std::string& out, const std::vector<std::string>& record) {
    for (std::size_t i = 0; i < record.size(); ++i) {
        if (i > 0) out += ',';
        write_field(out, record[i]);
    }
    out += '\n';
}

}  // namespace

std::string write_csv(const CsvTable& table) {
    std::string out;
    write_record(out, table.header);
    for (const auto& row : table.rows) {
        write_record(out, row);
    }
    return out;
}

FactTable fact_table_from_csv(const CsvTable& csv, const std::string& measure) {
    if (csv.header.empty()) {
        throw DomainError("csv has no columns");
    }
    std::size_t measure_idx;
    if (measure.empty()) {
        measure_idx = csv.header.size() - 1;
    } else {
        auto it = std::find(csv.header.begin(), csv.header.end(), measure);
        if (it == csv.header.end()) {
            throw DomainError("measure column '" + measure + "' not found in csv header");
        }
        measure_idx = static_cast<std::size_t>(it - csv.header.begin());
    }

    Schema schema;
    schema.measure = csv.header[measure_idx];
    for (std::size_t c = 0; c < csv.header.size(); ++c) {
        if (c != measure_idx) schema.dimensions.push_back(csv.header[c]);
    }
    schema.validate();

    std::vector<FactRow> rows;
    rows.reserve(csv.rows.size());
    for (std::size_t r = 0; r < csv.rows.size(); ++r) {
        FactRow row;
        row.key.reserve(schema.dimension_count());
        for (std::size_t c = 0; c < csv.rows[r].size(); ++c) {
            if (c != measure_idx) row.key.push_back(csv.rows[r][c]);
        }
        const std::string& text = csv.rows[r][measure_idx];
        auto result = std::from_chars(text.data(), text.data() + text.size(), row.measure);
        if (result.ec != std::errc{} || result.ptr != text.data() + text.size()) {
            throw IngestError(r + 1, "measure value '" + text + "' is not a non-negative integer");
        }
        rows.push_back(std::move(row));
    }
    return load_fact_table(rows, schema);
}

CsvTable fact_table_to_csv(const FactTable& facts) {
    CsvTable csv;
    csv.header = facts.schema.dimensions;
    csv.header.push_back(facts.schema.measure);
    for (const auto& [key, measure] : facts.cells) {
        auto row = key;
        row.push_back(std::to_string(measure));
        csv.rows.push_back(std::move(row));
    }
    return csv;
}

DetailStore detail_store_from_csv(const CsvTable& csv) {
    DetailStore store;
    store.columns = csv.header;
    store.rows = csv.rows;
    store.validate();
    return store;
}

}  // namespace olapcube

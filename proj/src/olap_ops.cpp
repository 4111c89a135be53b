#include "olapcube/olap_ops.hpp"

#include <algorithm>
#include <cctype>

#include "olapcube/checked_math.hpp"
#include "olapcube/errors.hpp"

namespace olapcube {

std::optional<std::string> ColumnExpr::eval(const std::string& value) const {
    switch (kind) {
        case Kind::Whole:
            return value;
        case Kind::Left:
            if (value.size() < arg1) return std::nullopt;
            return value.substr(0, arg1);
        case Kind::Right:
            if (value.size() < arg1) return std::nullopt;
            return value.substr(value.size() - arg1);
        case Kind::Substr:
            if (value.size() < arg1 + arg2 - 1) return std::nullopt;
            return value.substr(arg1 - 1, arg2);
    }
    return std::nullopt;
}

std::string ColumnExpr::to_string() const {
    switch (kind) {
        case Kind::Whole:
            return column;
        case Kind::Left:
            return "left(" + column + "," + std::to_string(arg1) + ")";
        case Kind::Right:
            return "right(" + column + "," + std::to_string(arg1) + ")";
        case Kind::Substr:
            return "substr(" + column + "," + std::to_string(arg1) + "," + std::to_string(arg2) +
                   ")";
    }
    return column;
}

const LinkBinding* DetailLink::find(const std::string& dimension) const {
    for (const auto& b : bindings) {
        if (b.dimension.column == dimension) return &b;
    }
    return nullptr;
}

namespace {

// Cursor over one line of link text; columns are 1-based.
struct LineCursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    std::size_t column() const { return pos + 1; }
};

bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string parse_ident(LineCursor& cur) {
    cur.skip_ws();
    if (cur.pos >= cur.text.size() || !ident_start(cur.text[cur.pos])) {
        throw ParseError("expected identifier", cur.column());
    }
    std::size_t start = cur.pos;
    while (cur.pos < cur.text.size() && ident_char(cur.text[cur.pos])) ++cur.pos;
    return cur.text.substr(start, cur.pos - start);
}

std::size_t parse_positive_int(LineCursor& cur) {
    cur.skip_ws();
    if (cur.pos >= cur.text.size() || !std::isdigit(static_cast<unsigned char>(cur.text[cur.pos]))) {
        throw ParseError("expected integer", cur.column());
    }
    std::size_t start = cur.pos;
    std::size_t value = 0;
    while (cur.pos < cur.text.size() && std::isdigit(static_cast<unsigned char>(cur.text[cur.pos]))) {
        value = value * 10 + static_cast<std::size_t>(cur.text[cur.pos] - '0');
        ++cur.pos;
    }
    if (value == 0) {
        throw ParseError("integer must be at least 1", start + 1);
    }
    return value;
}

void expect(LineCursor& cur, char c) {
    cur.skip_ws();
    if (cur.pos >= cur.text.size() || cur.text[cur.pos] != c) {
        throw ParseError(std::string("expected '") + c + "'", cur.column());
    }
    ++cur.pos;
}

ColumnExpr parse_column_expr(LineCursor& cur) {
    std::string name = parse_ident(cur);
    cur.skip_ws();
    ColumnExpr expr;
    if (cur.pos < cur.text.size() && cur.text[cur.pos] == '(') {
        if (name == "left" || name == "right") {
            expr.kind = name == "left" ? ColumnExpr::Kind::Left : ColumnExpr::Kind::Right;
            expect(cur, '(');
            expr.column = parse_ident(cur);
            expect(cur, ',');
            expr.arg1 = parse_positive_int(cur);
            expect(cur, ')');
        } else if (name == "substr") {
            expr.kind = ColumnExpr::Kind::Substr;
            expect(cur, '(');
            expr.column = parse_ident(cur);
            expect(cur, ',');
            expr.arg1 = parse_positive_int(cur);
            expect(cur, ',');
            expr.arg2 = parse_positive_int(cur);
            expect(cur, ')');
        } else {
            throw ParseError("unknown function '" + name + "'", cur.column());
        }
    } else {
        expr.kind = ColumnExpr::Kind::Whole;
        expr.column = name;
    }
    return expr;
}

}  // namespace

DetailLink parse_detail_link(const std::string& text) {
    DetailLink link;
    std::size_t line_start = 0;
    std::size_t line_no = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string::npos) line_end = text.size();
        std::string line = text.substr(line_start, line_end - line_start);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        ++line_no;

        LineCursor cur{line};
        if (!cur.at_end()) {
            try {
                LinkBinding binding;
                binding.detail = parse_column_expr(cur);
                expect(cur, '=');
                binding.dimension = parse_column_expr(cur);
                if (!cur.at_end()) {
                    throw ParseError("unexpected trailing text", cur.column());
                }
                if (link.find(binding.dimension.column) != nullptr) {
                    throw DomainError("dimension '" + binding.dimension.column +
                                      "' is bound more than once");
                }
                link.bindings.push_back(std::move(binding));
            } catch (const ParseError& e) {
                throw ParseError("link line " + std::to_string(line_no) + ": " + e.what());
            } catch (const DomainError& e) {
                throw DomainError("link line " + std::to_string(line_no) + ": " + e.what());
            }
        }

        if (line_end == text.size()) break;
        line_start = line_end + 1;
    }
    return link;
}

void DiceFilter::add(const std::string& dimension, std::vector<std::string> values) {
    if (values.empty()) {
        throw DomainError("filter clause for '" + dimension + "' has no values");
    }
    if (find(dimension) != nullptr) {
        throw DomainError("filter names dimension '" + dimension + "' more than once");
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    clauses.push_back(Clause{dimension, std::move(values)});
}

const DiceFilter::Clause* DiceFilter::find(const std::string& dimension) const {
    for (const auto& c : clauses) {
        if (c.dimension == dimension) return &c;
    }
    return nullptr;
}

FactTable slice(const FactTable& facts, const std::string& dim, const std::string& value) {
    const std::size_t idx = facts.schema.index_of(dim);
    FactTable result;
    result.schema = facts.schema;
    for (const auto& [key, measure] : facts.cells) {
        if (key[idx] == value) result.cells.emplace(key, measure);
    }
    return result;
}

FactTable dice(const FactTable& facts, const DiceFilter& filter) {
    std::vector<std::pair<std::size_t, const DiceFilter::Clause*>> tests;
    tests.reserve(filter.clauses.size());
    for (const auto& clause : filter.clauses) {
        tests.emplace_back(facts.schema.index_of(clause.dimension), &clause);
    }
    FactTable result;
    result.schema = facts.schema;
    for (const auto& [key, measure] : facts.cells) {
        bool keep = true;
        for (const auto& [idx, clause] : tests) {
            if (!std::binary_search(clause->values.begin(), clause->values.end(), key[idx])) {
                keep = false;
                break;
            }
        }
        if (keep) result.cells.emplace(key, measure);
    }
    return result;
}

FactTable rollup(const FactTable& facts, const std::vector<std::string>& keep) {
    if (keep.empty()) {
        throw DomainError("roll-up keeps at least one dimension");
    }
    {
        auto sorted = keep;
        std::sort(sorted.begin(), sorted.end());
        auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end()) {
            throw DomainError("roll-up keep list repeats dimension '" + *dup + "'");
        }
    }
    std::vector<std::size_t> indices;
    indices.reserve(keep.size());
    for (const auto& dim : keep) {
        indices.push_back(facts.schema.index_of(dim));
    }

    FactTable result;
    result.schema = Schema{keep, facts.schema.measure};
    for (const auto& [key, measure] : facts.cells) {
        Key reduced;
        reduced.reserve(indices.size());
        for (auto idx : indices) reduced.push_back(key[idx]);
        auto [it, inserted] = result.cells.try_emplace(std::move(reduced), measure);
        if (!inserted) {
            it->second = checked_add(it->second, measure, "roll-up aggregation");
        }
    }
    return result;
}

std::vector<std::vector<std::string>> drilldown(const FactTable& facts, const CellKey& cell_key,
                                                const DetailStore& store, const DetailLink& link) {
    store.validate();

    // Resolve each assigned dimension to (detail column index, expressions,
    // expected value on the dimension side).
    struct Predicate {
        const LinkBinding* binding;
        std::size_t detail_column;
        std::optional<std::string> expected;  // nullopt: extraction failed, never matches
    };
    std::vector<Predicate> predicates;
    predicates.reserve(cell_key.size());
    for (const auto& [dim, value] : cell_key) {
        facts.schema.index_of(dim);  // unknown dimension -> DomainError
        const LinkBinding* binding = link.find(dim);
        if (binding == nullptr) {
            throw DomainError("dimension '" + dim + "' is not bound in the detail link");
        }
        predicates.push_back(Predicate{binding, store.column_index(binding->detail.column),
                                       binding->dimension.eval(value)});
    }

    std::vector<std::vector<std::string>> matches;
    for (const auto& row : store.rows) {
        bool match = true;
        for (const auto& p : predicates) {
            if (!p.expected.has_value()) {
                match = false;
                break;
            }
            auto actual = p.binding->detail.eval(row[p.detail_column]);
            if (!actual.has_value() || *actual != *p.expected) {
                match = false;
                break;
            }
        }
        if (match) matches.push_back(row);
    }
    return matches;
}

}  // namespace olapcube

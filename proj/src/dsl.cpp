#include "olapcube/dsl.hpp"

#include <algorithm>
#include <cctype>

#include "olapcube/errors.hpp"

namespace olapcube {

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }
    bool consume(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }
    std::size_t column() const { return pos + 1; }
};

bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string parse_ident(Cursor& cur) {
    cur.skip_ws();
    if (cur.pos >= cur.text.size() || !ident_start(cur.text[cur.pos])) {
        throw ParseError("expected dimension name", cur.column());
    }
    std::size_t start = cur.pos;
    while (cur.pos < cur.text.size() && ident_char(cur.text[cur.pos])) ++cur.pos;
    return cur.text.substr(start, cur.pos - start);
}

// A filter value runs to the next ',', ';' or '=', trimmed of spaces.
std::string parse_value(Cursor& cur) {
    cur.skip_ws();
    std::size_t start = cur.pos;
    while (cur.pos < cur.text.size() && cur.text[cur.pos] != ',' && cur.text[cur.pos] != ';' &&
           cur.text[cur.pos] != '=') {
        ++cur.pos;
    }
    std::size_t end = cur.pos;
    while (end > start && std::isspace(static_cast<unsigned char>(cur.text[end - 1]))) --end;
    if (end == start) {
        throw ParseError("expected value", start + 1);
    }
    return cur.text.substr(start, end - start);
}

}  // namespace

ViewSpec parse_view_expr(const std::string& text) {
    Cursor cur{text};
    ViewSpec view;
    view.horizontal = parse_ident(cur);
    if (cur.consume('|')) {
        view.pivots.push_back(parse_ident(cur));
        while (cur.consume(',')) {
            view.pivots.push_back(parse_ident(cur));
        }
    }
    if (!cur.at_end()) {
        throw ParseError("unexpected trailing text", cur.column());
    }

    std::vector<std::string> all = view.pivots;
    all.push_back(view.horizontal);
    std::sort(all.begin(), all.end());
    auto dup = std::adjacent_find(all.begin(), all.end());
    if (dup != all.end()) {
        throw DomainError("view names dimension '" + *dup + "' more than once");
    }
    return view;
}

std::string format_view_expr(const ViewSpec& view) {
    std::string out = view.horizontal;
    for (std::size_t i = 0; i < view.pivots.size(); ++i) {
        out += i == 0 ? '|' : ',';
        out += view.pivots[i];
    }
    return out;
}

DiceFilter parse_filter_expr(const std::string& text) {
    Cursor cur{text};
    DiceFilter filter;
    while (true) {
        std::string dimension = parse_ident(cur);
        cur.skip_ws();
        if (!cur.consume('=')) {
            throw ParseError("expected '='", cur.column());
        }
        std::vector<std::string> values;
        values.push_back(parse_value(cur));
        while (cur.consume(',')) {
            values.push_back(parse_value(cur));
        }
        filter.add(dimension, std::move(values));  // DomainError on repeat
        if (cur.at_end()) break;
        if (!cur.consume(';')) {
            throw ParseError("expected ';'", cur.column());
        }
    }
    return filter;
}

CellKey parse_key_expr(const std::string& text) {
    DiceFilter filter = parse_filter_expr(text);
    CellKey key;
    for (const auto& clause : filter.clauses) {
        if (clause.values.size() != 1) {
            throw DomainError("cell key assigns dimension '" + clause.dimension +
                              "' more than one value");
        }
        key.emplace(clause.dimension, clause.values.front());
    }
    return key;
}

}  // namespace olapcube

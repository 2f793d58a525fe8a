#include "fca/context_io.hpp"

#include <charconv>
#include <unordered_set>

namespace fca {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            // trailing newline is optional: a final empty piece is not a line
            if (start < text.size()) lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

std::size_t parse_count(std::string_view token, std::size_t line, const char* what) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(line, std::string("invalid ") + what + " '" + std::string(token) + "'");
    return value;
}

// Reads `count` name lines starting at lines[at]; `line0` is the 1-based file
// line of lines[0].
std::vector<std::string> read_names(const std::vector<std::string_view>& lines, std::size_t at,
                                    std::size_t count, const char* kind) {
    std::vector<std::string> names;
    names.reserve(count);
    std::unordered_set<std::string_view> seen;
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t line = at + i + 1;
        if (at + i >= lines.size())
            throw ParseError(line, std::string("unexpected end of file, expected ") + kind + " name");
        std::string_view name = lines[at + i];
        if (name.empty()) throw ParseError(line, std::string("empty ") + kind + " name");
        if (!seen.insert(name).second)
            throw ParseError(line, std::string("duplicate ") + kind + " name '" + std::string(name) + "'");
        names.emplace_back(name);
    }
    return names;
}

} // namespace

FormalContext parse_cxt(std::string_view text) {
    auto lines = split_lines(text);

    if (lines.empty() || lines[0] != "B") throw ParseError(1, "expected header 'B'");
    if (lines.size() < 2) throw ParseError(2, "unexpected end of file, expected context name");
    if (lines.size() < 3) throw ParseError(3, "unexpected end of file, expected object count");
    std::size_t n_obj = parse_count(lines[2], 3, "object count");
    if (lines.size() < 4) throw ParseError(4, "unexpected end of file, expected attribute count");
    std::size_t n_attr = parse_count(lines[3], 4, "attribute count");
    if (lines.size() < 5 || !lines[4].empty()) throw ParseError(5, "expected blank line");

    auto object_names = read_names(lines, 5, n_obj, "object");
    auto attribute_names = read_names(lines, 5 + n_obj, n_attr, "attribute");

    const std::size_t rows_at = 5 + n_obj + n_attr;
    std::vector<AttributeSet> rows;
    rows.reserve(n_obj);
    for (std::size_t g = 0; g < n_obj; ++g) {
        std::size_t line = rows_at + g + 1;
        if (rows_at + g >= lines.size())
            throw ParseError(line, "row count mismatch: expected " + std::to_string(n_obj) +
                                       " incidence rows, got " + std::to_string(g));
        std::string_view row = lines[rows_at + g];
        if (row.size() != n_attr)
            throw ParseError(line, "row length " + std::to_string(row.size()) +
                                       " does not match attribute count " + std::to_string(n_attr));
        AttributeSet attrs(n_attr);
        for (std::size_t m = 0; m < n_attr; ++m) {
            if (row[m] == 'X')
                attrs.add(m);
            else if (row[m] != '.')
                throw ParseError(line, std::string("invalid incidence character '") + row[m] +
                                           "', expected 'X' or '.'");
        }
        rows.push_back(std::move(attrs));
    }

    for (std::size_t i = rows_at + n_obj; i < lines.size(); ++i)
        if (!lines[i].empty()) throw ParseError(i + 1, "unexpected trailing content");

    return FormalContext(std::move(object_names), std::move(attribute_names), std::move(rows));
}

std::string write_cxt(const FormalContext& ctx) {
    std::string out = "B\n\n";
    out += std::to_string(ctx.object_count());
    out += '\n';
    out += std::to_string(ctx.attribute_count());
    out += "\n\n";
    for (const auto& name : ctx.object_names()) {
        out += name;
        out += '\n';
    }
    for (const auto& name : ctx.attribute_names()) {
        out += name;
        out += '\n';
    }
    for (std::size_t g = 0; g < ctx.object_count(); ++g) {
        for (std::size_t m = 0; m < ctx.attribute_count(); ++m)
            out += ctx.incident(g, m) ? 'X' : '.';
        out += '\n';
    }
    return out;
}

namespace {

std::vector<std::string_view> split_csv_row(std::string_view line) {
    if (line.ends_with('\r')) line.remove_suffix(1);
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            cells.push_back(line.substr(start));
            return cells;
        }
        cells.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

bool csv_cell_incident(std::string_view cell, std::size_t line) {
    if (cell == "X" || cell == "x" || cell == "1") return true;
    if (cell.empty() || cell == "0" || cell == ".") return false;
    throw ParseError(line, "unrecognized cell token '" + std::string(cell) + "'");
}

} // namespace

FormalContext parse_csv_crosstable(std::string_view text) {
    auto lines = split_lines(text);
    while (lines.size() > 1 && lines.back().empty()) lines.pop_back();
    if (lines.empty()) throw ParseError(1, "expected header row");

    auto header = split_csv_row(lines[0]);
    if (!header[0].empty()) throw ParseError(1, "corner cell must be empty");

    std::vector<std::string> attribute_names;
    std::unordered_set<std::string_view> seen_attrs;
    for (std::size_t i = 1; i < header.size(); ++i) {
        if (header[i].empty()) throw ParseError(1, "empty attribute name");
        if (!seen_attrs.insert(header[i]).second)
            throw ParseError(1, "duplicate attribute name '" + std::string(header[i]) + "'");
        attribute_names.emplace_back(header[i]);
    }
    const std::size_t n_attr = attribute_names.size();

    std::vector<std::string> object_names;
    std::vector<AttributeSet> rows;
    std::unordered_set<std::string_view> seen_objs;
    for (std::size_t r = 1; r < lines.size(); ++r) {
        const std::size_t line = r + 1;
        auto cells = split_csv_row(lines[r]);
        if (cells.size() != n_attr + 1)
            throw ParseError(line, "ragged row: " + std::to_string(cells.size() - 1) +
                                       " cells under " + std::to_string(n_attr) + " attributes");
        if (cells[0].empty()) throw ParseError(line, "empty object name");
        if (!seen_objs.insert(cells[0]).second)
            throw ParseError(line, "duplicate object name '" + std::string(cells[0]) + "'");
        object_names.emplace_back(cells[0]);

        AttributeSet attrs(n_attr);
        for (std::size_t m = 0; m < n_attr; ++m)
            if (csv_cell_incident(cells[m + 1], line)) attrs.add(m);
        rows.push_back(std::move(attrs));
    }

    return FormalContext(std::move(object_names), std::move(attribute_names), std::move(rows));
}

std::string write_csv_crosstable(const FormalContext& ctx) {
    std::string out;
    for (const auto& name : ctx.attribute_names()) {
        out += ',';
        out += name;
    }
    out += '\n';
    for (std::size_t g = 0; g < ctx.object_count(); ++g) {
        out += ctx.object_name(g);
        for (std::size_t m = 0; m < ctx.attribute_count(); ++m) {
            out += ',';
            if (ctx.incident(g, m)) out += 'X';
        }
        out += '\n';
    }
    return out;
}

} // namespace fca

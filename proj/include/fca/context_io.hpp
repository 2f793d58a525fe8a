#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fca/context.hpp"

namespace fca {

// Raised by the parsers. what() carries "line N: ..." so callers can print
// it verbatim.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Burmeister interchange format:
//   B
//   <context name, may be empty>
//   <object count>
//   <attribute count>
//   <blank>
//   object names, one per line
//   attribute names, one per line
//   one row per object, exactly one 'X' or '.' per attribute
// Newlines are LF; the trailing newline is optional.
FormalContext parse_cxt(std::string_view text);

// Inverse of parse_cxt up to the context-name line, which is written empty.
// Output ends with a newline.
std::string write_cxt(const FormalContext& ctx);

// Cross-table CSV: header row is an empty corner cell followed by attribute
// names; each data row is an object name followed by one cell per attribute.
// Incident cells: "X", "x", "1". Blank cells: "", "0", ".". Anything else is
// an error, never silently treated as blank. Cells are split on ',' with no
// quoting; a trailing '\r' per line is tolerated.
FormalContext parse_csv_crosstable(std::string_view text);

std::string write_csv_crosstable(const FormalContext& ctx);

} // namespace fca

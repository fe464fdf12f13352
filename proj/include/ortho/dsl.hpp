#pragma once

#include "ortho/diagram.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace ortho {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
};

/// Diagram DSL: one context per line, atoms whitespace-separated; `/` also
/// separates contexts within a line; `#` starts a comment; blank lines are
/// ignored. Tokens may not contain `/` or `#`.
///
/// Parses without validating, so `validate` can report structural problems of
/// otherwise well-formed sources.
OrthoDiagram parse_diagram_syntax(std::string_view text);

/// Full parse: syntax plus structural validation; throws ParseError on both.
OrthoDiagram parse_diagram(std::string_view text);

OrthoDiagram load_diagram(const std::string& path);

std::string to_dsl(const OrthoDiagram& d);

/// {"atoms":[...], "contexts":[[...],...]} in canonical order.
std::string diagram_to_json(const OrthoDiagram& d);

}  // namespace ortho

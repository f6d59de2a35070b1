#ifndef DICHI_IO_HPP
#define DICHI_IO_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dichi/dicoloring.hpp"
#include "dichi/graph.hpp"
#include "dichi/patterns.hpp"

namespace dichi {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Graph file: header "n m", then m lines "u v". Blank lines and lines whose
/// first non-blank character is '#' are ignored. A repeated arc is accepted
/// once; an arc together with its reverse is rejected as a digon.
OrientedGraph parse_graph(std::string_view text);

/// Canonical form: header, then the arcs in lexicographic order.
std::string serialize_graph(const OrientedGraph& g);

/// 64-bit FNV-1a of the canonical form, as 16 hex digits.
std::string graph_digest(const OrientedGraph& g);

/// Coloring file:
///   dicoloring <n> <colors> <pattern|-> <budget|->
///   v c        (one line per vertex)
struct ColoringFile {
    std::size_t n = 0;
    std::size_t colors = 0;
    std::optional<PatternId> pattern;
    std::string budget = "-";
    std::vector<Color> color_of;
};

ColoringFile parse_coloring(std::string_view text);
std::string serialize_coloring(const Dicoloring& d, std::optional<PatternId> pattern);

std::string read_file(const std::string& path);

}  // namespace dichi

#endif

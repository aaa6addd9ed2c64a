#pragma once

// Plain-text graph and coloring files.
//
//   graph:    "n m d" with d in {oriented, symmetric}, then m lines "u v"
//   coloring: m lines "u v c", edges in the same order as the graph file
//
// Vertex ids are 0-based, fields are whitespace separated, lines end in LF.

#include "dipath/graph.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace dipath {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

std::string format_graph(const OrientedGraph& g);
std::string format_coloring(const OrientedGraph& g, const EdgeColoring& coloring);

OrientedGraph parse_graph(const std::string& text);
EdgeColoring parse_coloring(const OrientedGraph& g, int num_colors, const std::string& text);

OrientedGraph read_graph_file(const std::string& path);
EdgeColoring read_coloring_file(const OrientedGraph& g, int num_colors, const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);
std::string read_text_file(const std::string& path);

} // namespace dipath

#include "dipath/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace dipath {

namespace {

struct Token {
    std::string_view text;
    int column;
};

std::vector<Token> split_fields(std::string_view line)
{
    std::vector<Token> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        const auto start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
            ++i;
        if (i > start)
            fields.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return fields;
}

std::vector<std::string_view> split_lines(const std::string& text)
{
    std::vector<std::string_view> lines;
    std::string_view rest(text);
    while (!rest.empty()) {
        const auto nl = rest.find('\n');
        if (nl == std::string_view::npos) {
            lines.push_back(rest);
            break;
        }
        lines.push_back(rest.substr(0, nl));
        rest.remove_prefix(nl + 1);
    }
    return lines;
}

long long parse_integer(const Token& token, int line, const char* what)
{
    long long value = 0;
    const auto* first = token.text.data();
    const auto* last = first + token.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw ParseError(line, token.column, std::string("expected integer ") + what + ", got '" +
                                                 std::string(token.text) + "'");
    return value;
}

bool blank(std::string_view line)
{
    return split_fields(line).empty();
}

} // namespace

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line), column_(column)
{
}

std::string format_graph(const OrientedGraph& g)
{
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << ' ' << (g.allow_antiparallel() ? "symmetric" : "oriented")
        << '\n';
    for (const auto& e : g.edges())
        out << e.from << ' ' << e.to << '\n';
    return out.str();
}

std::string format_coloring(const OrientedGraph& g, const EdgeColoring& coloring)
{
    if (coloring.size() != g.edge_count())
        throw GraphError("coloring does not match the graph's edge count");
    std::ostringstream out;
    for (int id = 0; id < g.edge_count(); ++id)
        out << g.edge(id).from << ' ' << g.edge(id).to << ' ' << coloring[id] << '\n';
    return out.str();
}

OrientedGraph parse_graph(const std::string& text)
{
    const auto lines = split_lines(text);
    std::size_t index = 0;
    while (index < lines.size() && blank(lines[index]))
        ++index;
    if (index == lines.size())
        throw ParseError(1, 1, "missing header line 'n m d'");

    const int header_line = static_cast<int>(index) + 1;
    const auto header = split_fields(lines[index]);
    if (header.size() != 3)
        throw ParseError(header_line, 1, "header must have exactly three fields 'n m d'");
    const auto n = parse_integer(header[0], header_line, "vertex count");
    const auto m = parse_integer(header[1], header_line, "edge count");
    if (n < 0)
        throw ParseError(header_line, header[0].column, "negative vertex count");
    if (m < 0)
        throw ParseError(header_line, header[1].column, "negative edge count");
    bool symmetric = false;
    if (header[2].text == "symmetric")
        symmetric = true;
    else if (header[2].text != "oriented")
        throw ParseError(header_line, header[2].column, "graph kind must be 'oriented' or 'symmetric'");

    OrientedGraph g(static_cast<int>(n), symmetric);
    long long read = 0;
    for (++index; index < lines.size(); ++index) {
        const int line_no = static_cast<int>(index) + 1;
        const auto fields = split_fields(lines[index]);
        if (fields.empty())
            continue;
        if (read == m)
            throw ParseError(line_no, fields[0].column, "more edge lines than the header declares");
        if (fields.size() != 2)
            throw ParseError(line_no, fields[0].column, "edge line must be 'u v'");
        const auto u = parse_integer(fields[0], line_no, "source vertex");
        const auto v = parse_integer(fields[1], line_no, "target vertex");
        try {
            g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
        } catch (const GraphError& e) {
            throw ParseError(line_no, fields[0].column, e.what());
        }
        ++read;
    }
    if (read != m)
        throw ParseError(static_cast<int>(lines.size()) + 1, 1,
                         "expected " + std::to_string(m) + " edge lines, found " + std::to_string(read));
    return g;
}

EdgeColoring parse_coloring(const OrientedGraph& g, int num_colors, const std::string& text)
{
    EdgeColoring coloring(num_colors, g.edge_count());
    const auto lines = split_lines(text);
    int read = 0;
    for (std::size_t index = 0; index < lines.size(); ++index) {
        const int line_no = static_cast<int>(index) + 1;
        const auto fields = split_fields(lines[index]);
        if (fields.empty())
            continue;
        if (read == g.edge_count())
            throw ParseError(line_no, fields[0].column, "more coloring lines than graph edges");
        if (fields.size() != 3)
            throw ParseError(line_no, fields[0].column, "coloring line must be 'u v c'");
        const auto u = parse_integer(fields[0], line_no, "source vertex");
        const auto v = parse_integer(fields[1], line_no, "target vertex");
        const auto c = parse_integer(fields[2], line_no, "color");
        const auto& expected = g.edge(read);
        if (u != expected.from || v != expected.to)
            throw ParseError(line_no, fields[0].column,
                             "edge " + std::to_string(u) + " " + std::to_string(v) + " does not match graph edge " +
                                 std::to_string(expected.from) + " " + std::to_string(expected.to));
        if (c < 1 || c > num_colors)
            throw ParseError(line_no, fields[2].column,
                             "color " + std::to_string(c) + " outside 1.." + std::to_string(num_colors));
        coloring[read] = static_cast<int>(c);
        ++read;
    }
    if (read != g.edge_count())
        throw ParseError(static_cast<int>(lines.size()) + 1, 1,
                         "expected " + std::to_string(g.edge_count()) + " coloring lines, found " +
                             std::to_string(read));
    return coloring;
}

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& contents)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << contents;
}

OrientedGraph read_graph_file(const std::string& path)
{
    return parse_graph(read_text_file(path));
}

EdgeColoring read_coloring_file(const OrientedGraph& g, int num_colors, const std::string& path)
{
    return parse_coloring(g, num_colors, read_text_file(path));
}

} // namespace dipath

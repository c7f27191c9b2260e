#ifndef HADWIGER_GRAPH6_HH
#define HADWIGER_GRAPH6_HH 1

#include <hadwiger/graph.hh>

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace hadwiger
{
    /// Largest order representable with the one-byte graph6 header.
    inline constexpr int graph6_max_order = 62;

    /// Decodes one short-form graph6 line. A single trailing newline (LF or
    /// CRLF) and an optional ">>graph6<<" prefix are accepted. Throws
    /// ParseError with the byte offset of the first bad byte.
    auto parse_graph6(std::string_view text) -> Graph;

    /// Throws InvalidArgument for graphs with more than 62 vertices.
    auto write_graph6(const Graph & g) -> std::string;

    struct Graph6Line
    {
        int line_number;
        std::string text;
    };

    /// Non-empty, non-comment lines of a graph6 stream. Lines whose first
    /// byte is '#' are comments.
    auto read_graph6_lines(std::istream & in) -> std::vector<Graph6Line>;
}

#endif

#include <hadwiger/errors.hh>
#include <hadwiger/graph6.hh>

using namespace hadwiger;

using std::string;
using std::string_view;
using std::to_string;

namespace
{
    constexpr char bias = 63;
    constexpr string_view header_prefix = ">>graph6<<";
}

auto hadwiger::parse_graph6(string_view text) -> Graph
{
    std::size_t base = 0;
    if (text.starts_with(header_prefix)) {
        base = header_prefix.size();
        text.remove_prefix(header_prefix.size());
    }
    if (text.ends_with('\n'))
        text.remove_suffix(1);
    if (text.ends_with('\r'))
        text.remove_suffix(1);

    if (text.empty())
        throw ParseError("empty graph6 line", base);

    auto header = static_cast<unsigned char>(text[0]);
    if (header == 126)
        throw ParseError("long-form graph6 header (n > 62) is not supported", base);
    if (header < 63 || header > 125)
        throw ParseError("invalid graph6 header byte " + to_string(header), base);

    int n = header - bias;
    std::size_t bit_count = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    std::size_t byte_count = (bit_count + 5) / 6;

    for (std::size_t i = 1 ; i < text.size() && i <= byte_count ; ++i) {
        auto c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw ParseError("invalid graph6 body byte " + to_string(c), base + i);
    }
    if (text.size() < 1 + byte_count)
        throw ParseError("truncated graph6 body: expected " + to_string(byte_count) + " bytes, got " + to_string(text.size() - 1),
                base + text.size());
    if (text.size() > 1 + byte_count)
        throw ParseError("trailing bytes after graph6 body", base + 1 + byte_count);

    Graph g(n);
    std::size_t bit = 0;
    for (int j = 1 ; j < n ; ++j)
        for (int i = 0 ; i < j ; ++i, ++bit) {
            auto byte = static_cast<unsigned char>(text[1 + bit / 6]) - bias;
            if ((byte >> (5 - bit % 6)) & 1)
                g.add_edge(i, j);
        }

    if (bit_count % 6 != 0) {
        auto last = static_cast<unsigned char>(text[byte_count]) - bias;
        unsigned padding_mask = (1u << (6 - bit_count % 6)) - 1;
        if (last & padding_mask)
            throw ParseError("nonzero padding bits in graph6 body", base + byte_count);
    }

    return g;
}

auto hadwiger::write_graph6(const Graph & g) -> string
{
    int n = g.order();
    if (n > graph6_max_order)
        throw InvalidArgument("graph6 short form supports at most 62 vertices, got " + to_string(n));

    string result;
    result.push_back(static_cast<char>(n + bias));

    unsigned current = 0;
    int filled = 0;
    for (int j = 1 ; j < n ; ++j)
        for (int i = 0 ; i < j ; ++i) {
            current = (current << 1) | (g.adjacent(i, j) ? 1u : 0u);
            if (++filled == 6) {
                result.push_back(static_cast<char>(current + bias));
                current = 0;
                filled = 0;
            }
        }
    if (filled != 0)
        result.push_back(static_cast<char>((current << (6 - filled)) + bias));

    return result;
}

auto hadwiger::read_graph6_lines(std::istream & in) -> std::vector<Graph6Line>
{
    std::vector<Graph6Line> result;
    string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (line.ends_with('\r'))
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        result.push_back({ number, line });
    }
    return result;
}

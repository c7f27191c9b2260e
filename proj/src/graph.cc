#include <hadwiger/errors.hh>
#include <hadwiger/graph.hh>

#include <algorithm>
#include <deque>
#include <string>

using namespace hadwiger;

using std::pair;
using std::span;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace
{
    auto words_for(int universe) -> std::size_t
    {
        return (static_cast<std::size_t>(universe) + 63) / 64;
    }

    void check_vertex(const Graph & g, int v)
    {
        if (v < 0 || v >= g.order())
            throw InvalidArgument("vertex " + to_string(v) + " out of range for graph of order " + to_string(g.order()));
    }

    void check_universe(const Graph & g, const VertexSet & x)
    {
        if (x.universe() != g.order())
            throw InvalidArgument("vertex set over " + to_string(x.universe()) + " vertices used with graph of order " + to_string(g.order()));
    }
}

VertexSet::VertexSet(int universe) :
    _universe(universe),
    _words(words_for(universe), 0)
{
    if (universe < 0)
        throw InvalidArgument("negative vertex set universe");
}

auto VertexSet::of(int universe, std::initializer_list<int> members) -> VertexSet
{
    return from(universe, span<const int>(members.begin(), members.size()));
}

auto VertexSet::from(int universe, span<const int> members) -> VertexSet
{
    VertexSet result(universe);
    for (int v : members) {
        if (v < 0 || v >= universe)
            throw InvalidArgument("vertex " + to_string(v) + " out of range for universe " + to_string(universe));
        result.insert(v);
    }
    return result;
}

auto VertexSet::full(int universe) -> VertexSet
{
    VertexSet result(universe);
    for (std::size_t w = 0 ; w < result._words.size() ; ++w)
        result._words[w] = ~uint64_t{0};
    if (universe % 64 != 0)
        result._words.back() = (uint64_t{1} << (universe % 64)) - 1;
    return result;
}

auto VertexSet::size() const -> int
{
    int result = 0;
    for (auto w : _words)
        result += std::popcount(w);
    return result;
}

auto VertexSet::empty() const -> bool
{
    return std::all_of(_words.begin(), _words.end(), [] (uint64_t w) { return w == 0; });
}

auto VertexSet::first() const -> int
{
    for (std::size_t w = 0 ; w < _words.size() ; ++w)
        if (_words[w])
            return static_cast<int>(w * 64 + static_cast<unsigned>(std::countr_zero(_words[w])));
    return -1;
}

auto VertexSet::next(int v) const -> int
{
    int start = v + 1;
    if (start >= _universe)
        return -1;
    std::size_t w = static_cast<std::size_t>(start) >> 6;
    uint64_t bits = _words[w] & (~uint64_t{0} << (static_cast<unsigned>(start) & 63u));
    while (true) {
        if (bits)
            return static_cast<int>(w * 64 + static_cast<unsigned>(std::countr_zero(bits)));
        if (++w == _words.size())
            return -1;
        bits = _words[w];
    }
}

auto VertexSet::to_vector() const -> vector<int>
{
    vector<int> result;
    result.reserve(static_cast<std::size_t>(size()));
    for_each([&] (int v) { result.push_back(v); });
    return result;
}

auto VertexSet::intersects(const VertexSet & other) const -> bool
{
    auto n = std::min(_words.size(), other._words.size());
    for (std::size_t w = 0 ; w < n ; ++w)
        if (_words[w] & other._words[w])
            return true;
    return false;
}

auto VertexSet::is_subset_of(const VertexSet & other) const -> bool
{
    for (std::size_t w = 0 ; w < _words.size() ; ++w) {
        uint64_t theirs = w < other._words.size() ? other._words[w] : 0;
        if (_words[w] & ~theirs)
            return false;
    }
    return true;
}

auto VertexSet::operator&= (const VertexSet & other) -> VertexSet &
{
    for (std::size_t w = 0 ; w < _words.size() ; ++w)
        _words[w] &= w < other._words.size() ? other._words[w] : 0;
    return *this;
}

auto VertexSet::operator|= (const VertexSet & other) -> VertexSet &
{
    if (other._universe > _universe)
        throw InvalidArgument("union with a vertex set over a larger universe");
    for (std::size_t w = 0 ; w < other._words.size() ; ++w)
        _words[w] |= other._words[w];
    return *this;
}

auto VertexSet::operator-= (const VertexSet & other) -> VertexSet &
{
    auto n = std::min(_words.size(), other._words.size());
    for (std::size_t w = 0 ; w < n ; ++w)
        _words[w] &= ~other._words[w];
    return *this;
}

Graph::Graph(int n)
{
    if (n < 0)
        throw InvalidArgument("negative graph order");
    _adjacency.assign(static_cast<std::size_t>(n), VertexSet(n));
}

auto Graph::from_edges(int n, span<const pair<int, int>> edges) -> Graph
{
    Graph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

auto Graph::edge_count() const -> long
{
    long twice = 0;
    for (auto & row : _adjacency)
        twice += row.size();
    return twice / 2;
}

void Graph::add_edge(int u, int v)
{
    check_vertex(*this, u);
    check_vertex(*this, v);
    if (u == v)
        throw InvalidArgument("self-loop at vertex " + to_string(u));
    _adjacency[u].insert(v);
    _adjacency[v].insert(u);
}

void Graph::remove_edge(int u, int v)
{
    check_vertex(*this, u);
    check_vertex(*this, v);
    _adjacency[u].erase(v);
    _adjacency[v].erase(u);
}

auto Graph::edges() const -> vector<pair<int, int>>
{
    vector<pair<int, int>> result;
    for (int u = 0 ; u < order() ; ++u)
        for (int v = _adjacency[u].next(u) ; v != -1 ; v = _adjacency[u].next(v))
            result.emplace_back(u, v);
    return result;
}

auto Graph::complement() const -> Graph
{
    Graph result(order());
    for (int u = 0 ; u < order() ; ++u) {
        result._adjacency[u] = VertexSet::full(order()) - _adjacency[u];
        result._adjacency[u].erase(u);
    }
    return result;
}

auto InducedSubgraph::lift(const VertexSet & local, int parent_order) const -> VertexSet
{
    VertexSet result(parent_order);
    local.for_each([&] (int v) { result.insert(to_parent[v]); });
    return result;
}

auto hadwiger::induced_subgraph(const Graph & g, const VertexSet & keep) -> InducedSubgraph
{
    check_universe(g, keep);
    InducedSubgraph result;
    result.from_parent.assign(static_cast<std::size_t>(g.order()), -1);
    keep.for_each([&] (int v) {
        result.from_parent[v] = static_cast<int>(result.to_parent.size());
        result.to_parent.push_back(v);
    });

    result.graph = Graph(static_cast<int>(result.to_parent.size()));
    for (int i = 0 ; i < result.graph.order() ; ++i) {
        int u = result.to_parent[i];
        (g.neighbours(u) & keep).for_each([&] (int w) {
            if (w > u)
                result.graph.add_edge(i, result.from_parent[w]);
        });
    }
    return result;
}

auto hadwiger::delete_vertices(const Graph & g, const VertexSet & x) -> InducedSubgraph
{
    check_universe(g, x);
    return induced_subgraph(g, g.vertices() - x);
}

auto hadwiger::contract_edge(const Graph & g, int u, int v) -> Graph
{
    check_vertex(g, u);
    check_vertex(g, v);
    if (! g.adjacent(u, v))
        throw InvalidArgument("cannot contract non-edge {" + to_string(u) + "," + to_string(v) + "}");

    int keep = std::min(u, v), drop = std::max(u, v);
    auto relabel = [&] (int w) { return w > drop ? w - 1 : w; };

    Graph result(g.order() - 1);
    for (auto [a, b] : g.edges()) {
        int na = a == drop ? keep : a, nb = b == drop ? keep : b;
        if (na != nb)
            result.add_edge(relabel(na), relabel(nb));
    }
    return result;
}

auto hadwiger::bfs_distances(const Graph & g, const VertexSet & from) -> vector<int>
{
    check_universe(g, from);
    vector<int> dist(static_cast<std::size_t>(g.order()), unreachable);
    std::deque<int> queue;
    from.for_each([&] (int v) { dist[v] = 0; queue.push_back(v); });
    while (! queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        g.neighbours(v).for_each([&] (int w) {
            if (dist[w] == unreachable) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        });
    }
    return dist;
}

auto hadwiger::is_connected_set(const Graph & g, const VertexSet & x) -> bool
{
    check_universe(g, x);
    int start = x.first();
    if (start == -1)
        return true;

    VertexSet seen(g.order()), frontier(g.order());
    seen.insert(start);
    frontier.insert(start);
    while (! frontier.empty()) {
        VertexSet next(g.order());
        frontier.for_each([&] (int v) { next |= g.neighbours(v); });
        next &= x;
        next -= seen;
        seen |= next;
        frontier = std::move(next);
    }
    return seen == x;
}

auto hadwiger::is_connected(const Graph & g) -> bool
{
    return is_connected_set(g, g.vertices());
}

auto hadwiger::components(const Graph & g) -> vector<VertexSet>
{
    vector<VertexSet> result;
    VertexSet remaining = g.vertices();
    for (int start = remaining.first() ; start != -1 ; start = remaining.first()) {
        VertexSet component(g.order()), frontier(g.order());
        component.insert(start);
        frontier.insert(start);
        while (! frontier.empty()) {
            VertexSet next(g.order());
            frontier.for_each([&] (int v) { next |= g.neighbours(v); });
            next -= component;
            component |= next;
            frontier = std::move(next);
        }
        remaining -= component;
        result.push_back(std::move(component));
    }
    return result;
}

auto hadwiger::is_independent(const Graph & g, const VertexSet & x) -> bool
{
    check_universe(g, x);
    bool ok = true;
    x.for_each([&] (int v) { if (g.neighbours(v).intersects(x)) ok = false; });
    return ok;
}

auto hadwiger::is_clique(const Graph & g, const VertexSet & x) -> bool
{
    check_universe(g, x);
    bool ok = true;
    int size = x.size();
    x.for_each([&] (int v) { if ((g.neighbours(v) & x).size() != size - 1) ok = false; });
    return ok;
}

auto hadwiger::is_dominating(const Graph & g, const VertexSet & x) -> bool
{
    check_universe(g, x);
    VertexSet covered = x;
    x.for_each([&] (int v) { covered |= g.neighbours(v); });
    return covered == g.vertices();
}

auto hadwiger::adjacency_masks(const Graph & g) -> vector<uint64_t>
{
    if (g.order() > 64)
        throw LimitExceeded("bitmask solvers need at most 64 vertices, got " + to_string(g.order()));
    vector<uint64_t> rows(static_cast<std::size_t>(g.order()), 0);
    for (int v = 0 ; v < g.order() ; ++v)
        g.neighbours(v).for_each([&] (int w) { rows[v] |= uint64_t{1} << w; });
    return rows;
}

auto hadwiger::graph_from_masks(span<const uint64_t> rows) -> Graph
{
    Graph g(static_cast<int>(rows.size()));
    for (std::size_t v = 0 ; v < rows.size() ; ++v)
        for (auto bits = rows[v] ; bits ; bits &= bits - 1) {
            auto w = static_cast<std::size_t>(std::countr_zero(bits));
            if (w > v)
                g.add_edge(static_cast<int>(v), static_cast<int>(w));
        }
    return g;
}

#ifndef HADWIGER_GRAPH_HH
#define HADWIGER_GRAPH_HH 1

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace hadwiger
{
    /// A subset of the vertices 0..universe-1 of some graph, stored as a bitset.
    class VertexSet
    {
        private:
            int _universe = 0;
            std::vector<std::uint64_t> _words;

        public:
            VertexSet() = default;
            explicit VertexSet(int universe);

            static auto of(int universe, std::initializer_list<int> members) -> VertexSet;
            static auto from(int universe, std::span<const int> members) -> VertexSet;
            static auto full(int universe) -> VertexSet;

            auto universe() const -> int { return _universe; }

            auto contains(int v) const -> bool
            {
                return (_words[static_cast<unsigned>(v) >> 6] >> (static_cast<unsigned>(v) & 63u)) & 1u;
            }

            void insert(int v) { _words[static_cast<unsigned>(v) >> 6] |= std::uint64_t{1} << (static_cast<unsigned>(v) & 63u); }
            void erase(int v) { _words[static_cast<unsigned>(v) >> 6] &= ~(std::uint64_t{1} << (static_cast<unsigned>(v) & 63u)); }

            auto size() const -> int;
            auto empty() const -> bool;

            /// Smallest member, or -1.
            auto first() const -> int;

            /// Smallest member strictly greater than v, or -1.
            auto next(int v) const -> int;

            template <typename F_>
            void for_each(F_ && f) const
            {
                for (std::size_t w = 0 ; w < _words.size() ; ++w)
                    for (auto bits = _words[w] ; bits ; bits &= bits - 1)
                        f(static_cast<int>(w * 64 + static_cast<unsigned>(std::countr_zero(bits))));
            }

            auto to_vector() const -> std::vector<int>;

            auto intersects(const VertexSet & other) const -> bool;
            auto is_subset_of(const VertexSet & other) const -> bool;

            auto operator&= (const VertexSet & other) -> VertexSet &;
            auto operator|= (const VertexSet & other) -> VertexSet &;
            auto operator-= (const VertexSet & other) -> VertexSet &;

            friend auto operator& (VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
            friend auto operator| (VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
            friend auto operator- (VertexSet a, const VertexSet & b) -> VertexSet { return a -= b; }

            auto operator== (const VertexSet &) const -> bool = default;
    };

    /// Undirected simple graph on vertices 0..n-1 with bitset adjacency rows.
    ///
    /// Loops are rejected and every edge is stored in both rows, so the
    /// simple and symmetric invariants hold by construction.
    class Graph
    {
        private:
            std::vector<VertexSet> _adjacency;

        public:
            Graph() = default;
            explicit Graph(int n);

            static auto from_edges(int n, std::span<const std::pair<int, int>> edges) -> Graph;

            auto order() const -> int { return static_cast<int>(_adjacency.size()); }
            auto edge_count() const -> long;

            auto adjacent(int u, int v) const -> bool { return _adjacency[u].contains(v); }
            auto neighbours(int v) const -> const VertexSet & { return _adjacency[v]; }
            auto degree(int v) const -> int { return _adjacency[v].size(); }

            void add_edge(int u, int v);
            void remove_edge(int u, int v);

            /// Edges as (u, v) with u < v, sorted.
            auto edges() const -> std::vector<std::pair<int, int>>;

            auto vertices() const -> VertexSet { return VertexSet::full(order()); }
            auto complement() const -> Graph;

            auto operator== (const Graph &) const -> bool = default;
    };

    /// An induced subgraph together with the maps between its labels and
    /// the parent graph's labels. from_parent holds -1 for removed vertices.
    struct InducedSubgraph
    {
        Graph graph;
        std::vector<int> to_parent;
        std::vector<int> from_parent;

        auto lift(const VertexSet & local, int parent_order) const -> VertexSet;
    };

    auto induced_subgraph(const Graph & g, const VertexSet & keep) -> InducedSubgraph;

    /// G minus x, relabelled to 0..n-|x|-1 preserving vertex order.
    auto delete_vertices(const Graph & g, const VertexSet & x) -> InducedSubgraph;

    /// Merges v into u. The merged vertex takes the smaller of the two labels
    /// and the larger label is removed, shifting later labels down by one.
    auto contract_edge(const Graph & g, int u, int v) -> Graph;

    inline constexpr int unreachable = -1;

    /// Multi-source BFS. Sources have distance 0; unreachable vertices get
    /// the unreachable sentinel.
    auto bfs_distances(const Graph & g, const VertexSet & from) -> std::vector<int>;

    auto is_connected(const Graph & g) -> bool;

    /// Whether the subgraph induced by x is connected. The empty set counts
    /// as connected.
    auto is_connected_set(const Graph & g, const VertexSet & x) -> bool;

    /// Connected components ordered by their smallest vertex.
    auto components(const Graph & g) -> std::vector<VertexSet>;

    auto is_independent(const Graph & g, const VertexSet & x) -> bool;
    auto is_clique(const Graph & g, const VertexSet & x) -> bool;
    auto is_dominating(const Graph & g, const VertexSet & x) -> bool;

    /// Adjacency rows as 64-bit masks, for the exact solvers. Requires n <= 64.
    auto adjacency_masks(const Graph & g) -> std::vector<std::uint64_t>;
    auto graph_from_masks(std::span<const std::uint64_t> rows) -> Graph;
}

#endif

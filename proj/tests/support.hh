// Test helpers and slow reference oracles. Nothing here calls the solver it
// is meant to check.

#ifndef HADWIGER_TESTS_SUPPORT_HH
#define HADWIGER_TESTS_SUPPORT_HH 1

#include <hadwiger/enumerate.hh>
#include <hadwiger/graph.hh>

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace test
{
    using hadwiger::Graph;
    using hadwiger::VertexSet;

    inline auto make_graph(int n, std::initializer_list<std::pair<int, int>> edges) -> Graph
    {
        std::vector<std::pair<int, int>> list(edges);
        return Graph::from_edges(n, list);
    }

    /// Cycle 0..k-1 plus a hub k joined to every cycle vertex.
    inline auto wheel(int k) -> Graph
    {
        Graph g(k + 1);
        for (int i = 0 ; i < k ; ++i) {
            g.add_edge(i, (i + 1) % k);
            g.add_edge(i, k);
        }
        return g;
    }

    inline auto set_of(int n, std::initializer_list<int> members) -> VertexSet
    {
        return VertexSet::of(n, members);
    }

    /// graph6 by first writing the upper triangle as a '0'/'1' string.
    inline auto encode_graph6(const Graph & g) -> std::string
    {
        int n = g.order();
        std::string bits;
        for (int v = 1 ; v < n ; ++v)
            for (int u = 0 ; u < v ; ++u)
                bits += g.adjacent(u, v) ? '1' : '0';
        while (bits.size() % 6)
            bits += '0';

        std::string out(1, static_cast<char>(n + 63));
        for (std::size_t i = 0 ; i < bits.size() ; i += 6) {
            int value = 0;
            for (std::size_t j = 0 ; j < 6 ; ++j)
                value = value * 2 + (bits[i + j] - '0');
            out += static_cast<char>(value + 63);
        }
        return out;
    }

    inline auto rows(const Graph & g) -> std::vector<std::uint64_t>
    {
        std::vector<std::uint64_t> result(static_cast<std::size_t>(g.order()));
        for (auto [u, v] : g.edges()) {
            result[u] |= std::uint64_t{1} << v;
            result[v] |= std::uint64_t{1} << u;
        }
        return result;
    }

    /// alpha(G) = max(alpha(G - v), 1 + alpha(G - N[v])) on the lowest remaining v.
    inline auto alpha_recursive(const std::vector<std::uint64_t> & adj, std::uint64_t alive) -> int
    {
        if (! alive)
            return 0;
        int v = std::countr_zero(alive);
        std::uint64_t without = alive & ~(std::uint64_t{1} << v);
        int skip = alpha_recursive(adj, without);
        int take = 1 + alpha_recursive(adj, without & ~adj[v]);
        return std::max(skip, take);
    }

    inline auto alpha_oracle(const Graph & g) -> int
    {
        int n = g.order();
        return alpha_recursive(rows(g), n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    inline auto omega_oracle(const Graph & g) -> int
    {
        return alpha_oracle(g.complement());
    }

    /// Tries every k-colouring in vertex order, rejecting only on a clash.
    inline auto colourable(const Graph & g, int k, std::vector<int> & colour, int v) -> bool
    {
        if (v == g.order())
            return true;
        for (int c = 0 ; c < k ; ++c) {
            bool clash = false;
            for (int u = 0 ; u < v ; ++u)
                if (g.adjacent(u, v) && colour[u] == c)
                    clash = true;
            if (clash)
                continue;
            colour[v] = c;
            if (colourable(g, k, colour, v + 1))
                return true;
        }
        return false;
    }

    inline auto chi_oracle(const Graph & g) -> int
    {
        std::vector<int> colour(static_cast<std::size_t>(g.order()));
        for (int k = 0 ; ; ++k)
            if (colourable(g, k, colour, 0))
                return k;
    }

    /// eta via minors directly: a graph's largest clique minor is itself if
    /// complete, otherwise the best over single vertex deletions and single
    /// edge contractions. Memoized on isomorphism class.
    class EtaOracle
    {
        private:
            std::map<std::pair<int, std::uint64_t>, int> _memo;

        public:
            auto operator() (const Graph & g) -> int
            {
                int n = g.order();
                if (2 * g.edge_count() == static_cast<long>(n) * (n - 1))
                    return n;

                auto form = hadwiger::canonical_form(g);
                auto key = std::make_pair(n, form.code);
                if (auto found = _memo.find(key) ; found != _memo.end())
                    return found->second;

                int best = 0;
                for (int v = 0 ; v < n ; ++v) {
                    VertexSet x(n);
                    x.insert(v);
                    best = std::max(best, (*this)(hadwiger::delete_vertices(g, x).graph));
                }
                for (auto [u, v] : g.edges())
                    best = std::max(best, (*this)(hadwiger::contract_edge(g, u, v)));
                _memo.emplace(key, best);
                return best;
            }
    };
}

#endif

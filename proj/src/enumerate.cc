#include <hadwiger/enumerate.hh>
#include <hadwiger/errors.hh>

#include <algorithm>
#include <array>
#include <string>
#include <unordered_set>

using namespace hadwiger;

using std::array;
using std::to_string;
using std::uint32_t;
using std::uint64_t;
using std::vector;

namespace
{
    constexpr int max_n = canonical_max_order;

    using Rows = array<uint32_t, max_n>;

    /// Ordered partition of the vertices: verts lists vertices cell by cell,
    /// and cell_end[p] is one past the last position of the cell containing
    /// position p.
    struct Partition
    {
        array<int, max_n> verts;
        array<int, max_n> cell_end;
    };

    struct Search
    {
        int n;
        Rows rows;
        uint64_t best_code = 0;
        array<int, max_n> best_labelling{};
        bool have_best = false;

        auto leaf_code(const Partition & p) const -> uint64_t
        {
            uint64_t code = 0;
            for (int j = 1 ; j < n ; ++j) {
                uint32_t row = rows[p.verts[j]];
                for (int i = 0 ; i < j ; ++i)
                    code = (code << 1) | ((row >> p.verts[i]) & 1u);
            }
            return code;
        }

        /// Splits every cell by neighbour counts into every cell of the
        /// partition as it stood at the start of the pass, until stable.
        void refine(Partition & p) const
        {
            while (true) {
                array<uint32_t, max_n> cell_masks{};
                array<int, max_n> cell_starts{};
                int cells = 0;
                for (int s = 0 ; s < n ; s = p.cell_end[s]) {
                    uint32_t mask = 0;
                    for (int q = s ; q < p.cell_end[s] ; ++q)
                        mask |= 1u << p.verts[q];
                    cell_masks[cells] = mask;
                    cell_starts[cells] = s;
                    ++cells;
                }
                if (cells == n)
                    return;

                bool split = false;
                array<uint64_t, max_n> keys{};
                for (int c = 0 ; c < cells ; ++c) {
                    int s = cell_starts[c], e = p.cell_end[s];
                    if (e - s == 1)
                        continue;
                    for (int q = s ; q < e ; ++q) {
                        uint64_t key = 0;
                        uint32_t row = rows[p.verts[q]];
                        for (int d = 0 ; d < cells ; ++d)
                            key = (key << 4) | static_cast<uint64_t>(std::popcount(row & cell_masks[d]));
                        keys[p.verts[q]] = key;
                    }
                    std::sort(p.verts.begin() + s, p.verts.begin() + e,
                            [&] (int a, int b) { return keys[a] < keys[b]; });
                    int sub = s;
                    for (int q = s + 1 ; q <= e ; ++q)
                        if (q == e || keys[p.verts[q]] != keys[p.verts[sub]]) {
                            for (int r = sub ; r < q ; ++r)
                                p.cell_end[r] = q;
                            if (q != e)
                                split = true;
                            sub = q;
                        }
                }
                if (! split)
                    return;
            }
        }

        void search(Partition p)
        {
            refine(p);

            int target = -1;
            for (int s = 0 ; s < n ; s = p.cell_end[s])
                if (p.cell_end[s] - s > 1) {
                    target = s;
                    break;
                }

            if (target == -1) {
                uint64_t code = leaf_code(p);
                if (! have_best || code > best_code) {
                    best_code = code;
                    have_best = true;
                    best_labelling = p.verts;
                }
                return;
            }

            int end = p.cell_end[target];
            for (int q = target ; q < end ; ++q) {
                Partition child = p;
                std::swap(child.verts[target], child.verts[q]);
                child.cell_end[target] = target + 1;
                search(child);
            }
        }
    };

    auto rows_of(const Graph & g) -> Rows
    {
        if (g.order() > max_n)
            throw LimitExceeded("canonical forms support at most " + to_string(max_n) + " vertices, got " + to_string(g.order()));
        Rows rows{};
        for (int v = 0 ; v < g.order() ; ++v)
            g.neighbours(v).for_each([&] (int w) { rows[v] |= 1u << w; });
        return rows;
    }

    auto canonical_code_of(int n, const Rows & rows) -> uint64_t
    {
        Search s{ n, rows };
        Partition p;
        for (int i = 0 ; i < n ; ++i) {
            p.verts[i] = i;
            p.cell_end[i] = n;
        }
        s.search(p);
        return s.best_code;
    }

    auto rows_from_code(int n, uint64_t code) -> Rows
    {
        Rows rows{};
        int bit = n * (n - 1) / 2;
        for (int j = 1 ; j < n ; ++j)
            for (int i = 0 ; i < j ; ++i)
                if ((code >> --bit) & 1u) {
                    rows[i] |= 1u << j;
                    rows[j] |= 1u << i;
                }
        return rows;
    }

    auto enumerate_codes(int n, bool connected_only) -> vector<uint64_t>
    {
        if (n <= 1)
            return { 0 };

        auto parents = enumerate_codes(n - 1, connected_only);
        std::unordered_set<uint64_t> seen;
        seen.reserve(parents.size() * 32);

        int last = n - 1;
        for (auto parent : parents) {
            Rows rows = rows_from_code(n - 1, parent);
            for (uint32_t subset = connected_only ? 1u : 0u ; subset < (1u << last) ; ++subset) {
                Rows extended = rows;
                extended[last] = subset;
                for (int v = 0 ; v < last ; ++v)
                    if ((subset >> v) & 1u)
                        extended[v] |= 1u << last;
                seen.insert(canonical_code_of(n, extended));
            }
        }

        vector<uint64_t> result(seen.begin(), seen.end());
        std::sort(result.begin(), result.end());
        return result;
    }
}

auto hadwiger::canonical_form(const Graph & g) -> CanonicalForm
{
    Rows rows = rows_of(g);
    int n = g.order();
    Search s{ n, rows };
    Partition p;
    for (int i = 0 ; i < n ; ++i) {
        p.verts[i] = i;
        p.cell_end[i] = n;
    }
    if (n > 0)
        s.search(p);
    return { s.best_code, vector<int>(s.best_labelling.begin(), s.best_labelling.begin() + n) };
}

auto hadwiger::graph_from_canonical_code(int n, uint64_t code) -> Graph
{
    if (n < 0 || n > max_n)
        throw InvalidArgument("canonical code order out of range");
    Rows rows = rows_from_code(n, code);
    Graph g(n);
    for (int v = 0 ; v < n ; ++v)
        for (int w = v + 1 ; w < n ; ++w)
            if ((rows[v] >> w) & 1u)
                g.add_edge(v, w);
    return g;
}

auto hadwiger::canonical_graph(const Graph & g) -> Graph
{
    return graph_from_canonical_code(g.order(), canonical_form(g).code);
}

auto hadwiger::enumerate_graphs(int n, bool connected_only) -> vector<Graph>
{
    if (n < 0 || n > 10)
        throw LimitExceeded("exhaustive enumeration supports 0 <= n <= 10, got " + to_string(n));
    vector<Graph> result;
    for (auto code : enumerate_codes(n, connected_only))
        result.push_back(graph_from_canonical_code(n, code));
    return result;
}

auto hadwiger::enumerate_graphs_up_to(int n_max, bool connected_only) -> vector<Graph>
{
    if (n_max > 10)
        throw LimitExceeded("exhaustive enumeration supports 0 <= n <= 10, got " + to_string(n_max));
    vector<Graph> result;
    for (int n = 1 ; n <= n_max ; ++n) {
        auto level = enumerate_graphs(n, connected_only);
        result.insert(result.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
    }
    return result;
}

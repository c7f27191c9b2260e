#include <hadwiger/errors.hh>
#include <hadwiger/exact.hh>

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

using namespace hadwiger;

using std::optional;
using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace
{
    using Masks = vector<uint64_t>;

    auto bit(int v) -> uint64_t { return uint64_t{1} << v; }
    auto lowest(uint64_t m) -> int { return std::countr_zero(m); }

    void check_limit(const Graph & g, int limit, const char * what)
    {
        if (g.order() > limit)
            throw LimitExceeded(string(what) + " limited to " + to_string(limit) + " vertices, got " + to_string(g.order()));
    }

    auto set_from_mask(int n, uint64_t mask) -> VertexSet
    {
        VertexSet result(n);
        for ( ; mask ; mask &= mask - 1)
            result.insert(lowest(mask));
        return result;
    }

    auto mask_connected(const Masks & adj, uint64_t set) -> bool
    {
        if (! set)
            return true;
        uint64_t seen = set & -set, frontier = seen;
        while (frontier) {
            uint64_t next = 0;
            for (auto f = frontier ; f ; f &= f - 1)
                next |= adj[lowest(f)];
            next &= set & ~seen;
            seen |= next;
            frontier = next;
        }
        return seen == set;
    }

    auto mask_neighbourhood(const Masks & adj, uint64_t set) -> uint64_t
    {
        uint64_t result = 0;
        for (auto s = set ; s ; s &= s - 1)
            result |= adj[lowest(s)];
        return result & ~set;
    }

    /// Maximum clique with greedy colouring bounds, in the style of the
    /// bitset MCQ family.
    class CliqueSearch
    {
        private:
            const Masks & _adj;
            uint64_t _best = 0;
            int _best_size = 0;

            void expand(uint64_t current, int size, uint64_t candidates)
            {
                int order[64], bound[64], count = 0;

                uint64_t uncoloured = candidates;
                for (int colour = 1 ; uncoloured ; ++colour) {
                    uint64_t available = uncoloured;
                    while (available) {
                        int v = lowest(available);
                        available &= ~_adj[v] & ~bit(v);
                        uncoloured &= ~bit(v);
                        order[count] = v;
                        bound[count] = colour;
                        ++count;
                    }
                }

                for (int i = count - 1 ; i >= 0 ; --i) {
                    if (size + bound[i] <= _best_size)
                        return;
                    int v = order[i];
                    uint64_t next = candidates & _adj[v];
                    if (! next) {
                        if (size + 1 > _best_size) {
                            _best_size = size + 1;
                            _best = current | bit(v);
                        }
                    }
                    else
                        expand(current | bit(v), size + 1, next);
                    candidates &= ~bit(v);
                }
            }

        public:
            explicit CliqueSearch(const Masks & adj) : _adj(adj) { }

            auto run(int n) -> uint64_t
            {
                uint64_t all = n == 64 ? ~uint64_t{0} : bit(n) - 1;
                if (all)
                    expand(0, 0, all);
                return _best;
            }
    };

    auto max_clique_mask(const Masks & adj) -> uint64_t
    {
        return CliqueSearch(adj).run(static_cast<int>(adj.size()));
    }

    class ColouringSearch
    {
        private:
            const Masks & _adj;
            int _n;
            int _k;
            vector<int> _colours;

            auto recurse(int coloured, int max_used) -> bool
            {
                if (coloured == _n)
                    return true;

                int chosen = -1, chosen_saturation = -1, chosen_degree = -1;
                for (int v = 0 ; v < _n ; ++v) {
                    if (_colours[v] != -1)
                        continue;
                    unsigned seen = 0;
                    int uncoloured_degree = 0;
                    for (auto m = _adj[v] ; m ; m &= m - 1) {
                        int w = lowest(m);
                        if (_colours[w] == -1)
                            ++uncoloured_degree;
                        else
                            seen |= 1u << _colours[w];
                    }
                    int saturation = std::popcount(seen);
                    if (saturation >= _k)
                        return false;
                    if (saturation > chosen_saturation || (saturation == chosen_saturation && uncoloured_degree > chosen_degree)) {
                        chosen = v;
                        chosen_saturation = saturation;
                        chosen_degree = uncoloured_degree;
                    }
                }

                unsigned forbidden = 0;
                for (auto m = _adj[chosen] ; m ; m &= m - 1)
                    if (_colours[lowest(m)] != -1)
                        forbidden |= 1u << _colours[lowest(m)];

                int top = std::min(_k - 1, max_used + 1);
                for (int c = 0 ; c <= top ; ++c) {
                    if (forbidden & (1u << c))
                        continue;
                    _colours[chosen] = c;
                    if (recurse(coloured + 1, std::max(max_used, c)))
                        return true;
                }
                _colours[chosen] = -1;
                return false;
            }

        public:
            ColouringSearch(const Masks & adj, int k) :
                _adj(adj), _n(static_cast<int>(adj.size())), _k(k), _colours(adj.size(), -1)
            {
            }

            auto run(uint64_t clique) -> optional<vector<int>>
            {
                int next = 0, coloured = 0;
                for (auto m = clique ; m ; m &= m - 1) {
                    _colours[lowest(m)] = next++;
                    ++coloured;
                }
                if (recurse(coloured, next - 1))
                    return _colours;
                return std::nullopt;
            }
    };

    /// Partition-based K_t search inside one connected graph given as masks.
    class MinorSearch
    {
        private:
            const Masks & _adj;
            int _t;
            vector<uint64_t> _sets;
            vector<uint64_t> _neighbourhoods;

            auto grow(uint64_t part, uint64_t candidates, uint64_t banned, uint64_t unassigned) -> bool
            {
                int after = _t - static_cast<int>(_sets.size()) - 1;
                uint64_t rest = unassigned & ~part;

                if (std::popcount(rest) < after)
                    return false;
                for (auto n : _neighbourhoods)
                    if (std::popcount(n & rest) < after)
                        return false;

                if (try_part(part, rest, after))
                    return true;

                while (candidates) {
                    int v = lowest(candidates);
                    candidates &= ~bit(v);
                    uint64_t child_candidates = (candidates | (_adj[v] & unassigned)) & ~part & ~bit(v) & ~banned;
                    if (grow(part | bit(v), child_candidates, banned, unassigned))
                        return true;
                    banned |= bit(v);
                }
                return false;
            }

            auto try_part(uint64_t part, uint64_t rest, int after) -> bool
            {
                for (auto n : _neighbourhoods)
                    if (! (n & part))
                        return false;
                uint64_t neighbourhood = mask_neighbourhood(_adj, part);
                if (std::popcount(neighbourhood & rest) < after)
                    return false;

                _sets.push_back(part);
                _neighbourhoods.push_back(neighbourhood);
                if (search(rest))
                    return true;
                _sets.pop_back();
                _neighbourhoods.pop_back();
                return false;
            }

        public:
            MinorSearch(const Masks & adj, int t) : _adj(adj), _t(t) { }

            auto search(uint64_t unassigned) -> bool
            {
                int remaining = _t - static_cast<int>(_sets.size());
                if (remaining == 0)
                    return unassigned == 0;
                if (! unassigned)
                    return false;

                if (remaining == 1) {
                    for (auto n : _neighbourhoods)
                        if (! (n & unassigned))
                            return false;
                    if (! mask_connected(_adj, unassigned))
                        return false;
                    _sets.push_back(unassigned);
                    _neighbourhoods.push_back(mask_neighbourhood(_adj, unassigned));
                    return true;
                }

                int root = lowest(unassigned);
                return grow(bit(root), _adj[root] & unassigned, 0, unassigned);
            }

            auto sets() const -> const vector<uint64_t> & { return _sets; }
    };

    /// Searches one component, relabelled so that higher-degree vertices
    /// come first.
    auto clique_minor_in_component(const Graph & g, const VertexSet & component, int t) -> optional<MinorEmbedding>
    {
        auto members = component.to_vector();
        std::stable_sort(members.begin(), members.end(),
                [&] (int a, int b) { return (g.neighbours(a) & component).size() > (g.neighbours(b) & component).size(); });

        vector<int> local(static_cast<std::size_t>(g.order()), -1);
        for (std::size_t i = 0 ; i < members.size() ; ++i)
            local[members[i]] = static_cast<int>(i);

        Masks adj(members.size(), 0);
        for (std::size_t i = 0 ; i < members.size() ; ++i)
            (g.neighbours(members[i]) & component).for_each([&] (int w) { adj[i] |= bit(local[w]); });

        int n = static_cast<int>(members.size());
        MinorSearch search(adj, t);
        if (! search.search(n == 64 ? ~uint64_t{0} : bit(n) - 1))
            return std::nullopt;

        MinorEmbedding result;
        for (auto part : search.sets()) {
            VertexSet set(g.order());
            for ( ; part ; part &= part - 1)
                set.insert(members[lowest(part)]);
            result.branch_sets.push_back(std::move(set));
        }
        std::sort(result.branch_sets.begin(), result.branch_sets.end(),
                [] (const VertexSet & a, const VertexSet & b) { return a.first() < b.first(); });
        return result;
    }
}

auto hadwiger::independence_number_bruteforce(const Graph & g, const Limits & limits) -> SetResult
{
    check_limit(g, limits.alpha_bruteforce, "brute-force independence number");
    check_limit(g, 30, "brute-force independence number");
    auto adj = adjacency_masks(g);
    int n = g.order();

    uint64_t best = 0;
    int best_size = 0;
    for (uint64_t mask = 0 ; mask < bit(n) ; ++mask) {
        int size = std::popcount(mask);
        if (size <= best_size)
            continue;
        bool independent = true;
        for (auto m = mask ; m && independent ; m &= m - 1)
            if (adj[lowest(m)] & mask)
                independent = false;
        if (independent) {
            best = mask;
            best_size = size;
        }
    }
    return { best_size, set_from_mask(n, best) };
}

auto hadwiger::independence_number(const Graph & g, const Limits & limits) -> SetResult
{
    check_limit(g, limits.alpha, "independence number");
    auto witness = max_clique_mask(adjacency_masks(g.complement()));
    return { std::popcount(witness), set_from_mask(g.order(), witness) };
}

auto hadwiger::clique_number(const Graph & g, const Limits & limits) -> SetResult
{
    check_limit(g, limits.alpha, "clique number");
    auto witness = max_clique_mask(adjacency_masks(g));
    return { std::popcount(witness), set_from_mask(g.order(), witness) };
}

auto hadwiger::is_proper_colouring(const Graph & g, const vector<int> & colours, int k) -> bool
{
    if (static_cast<int>(colours.size()) != g.order())
        return false;
    for (int c : colours)
        if (c < 0 || c >= k)
            return false;
    for (auto [u, v] : g.edges())
        if (colours[u] == colours[v])
            return false;
    return true;
}

auto hadwiger::chromatic_number(const Graph & g, const Limits & limits) -> ColouringResult
{
    check_limit(g, limits.chi, "chromatic number");
    check_limit(g, 32, "chromatic number");
    if (g.order() == 0)
        return { 0, {} };

    auto adj = adjacency_masks(g);
    auto clique = max_clique_mask(adj);
    for (int k = std::popcount(clique) ; ; ++k) {
        ColouringSearch search(adj, k);
        if (auto colours = search.run(clique))
            return { k, std::move(*colours) };
    }
}

auto hadwiger::degeneracy_order(const Graph & g) -> DegeneracyResult
{
    int n = g.order();
    vector<int> degree(static_cast<std::size_t>(n));
    for (int v = 0 ; v < n ; ++v)
        degree[v] = g.degree(v);

    DegeneracyResult result;
    VertexSet remaining = g.vertices();
    for (int step = 0 ; step < n ; ++step) {
        int chosen = -1;
        remaining.for_each([&] (int v) { if (chosen == -1 || degree[v] < degree[chosen]) chosen = v; });
        result.degeneracy = std::max(result.degeneracy, degree[chosen]);
        result.order.push_back(chosen);
        remaining.erase(chosen);
        (g.neighbours(chosen) & remaining).for_each([&] (int w) { --degree[w]; });
    }
    return result;
}

auto hadwiger::verify_minor_embedding(const Graph & g, const MinorEmbedding & m) -> bool
{
    VertexSet used(g.order());
    for (auto & set : m.branch_sets) {
        if (set.universe() != g.order() || set.empty() || set.intersects(used) || ! is_connected_set(g, set))
            return false;
        used |= set;
    }

    for (std::size_t i = 0 ; i < m.branch_sets.size() ; ++i) {
        VertexSet neighbourhood(g.order());
        m.branch_sets[i].for_each([&] (int v) { neighbourhood |= g.neighbours(v); });
        for (std::size_t j = i + 1 ; j < m.branch_sets.size() ; ++j)
            if (! neighbourhood.intersects(m.branch_sets[j]))
                return false;
    }
    return true;
}

auto hadwiger::has_clique_minor(const Graph & g, int t, const Limits & limits) -> optional<MinorEmbedding>
{
    if (t < 1)
        throw InvalidArgument("clique minor order must be at least 1, got " + to_string(t));
    check_limit(g, limits.minor, "clique minor search");
    check_limit(g, 64, "clique minor search");

    optional<MinorEmbedding> result;
    long needed_edges = static_cast<long>(t) * (t - 1) / 2;

    if (g.order() < t || g.edge_count() < needed_edges)
        return std::nullopt;

    if (t == 1)
        result = MinorEmbedding{ { VertexSet::of(g.order(), { 0 }) } };
    else {
        for (auto & component : components(g)) {
            if (component.size() < t)
                continue;
            long component_edges = 0;
            component.for_each([&] (int v) { component_edges += g.degree(v); });
            if (component_edges / 2 < needed_edges)
                continue;
            if ((result = clique_minor_in_component(g, component, t)))
                break;
        }
    }

    if (result && ! verify_minor_embedding(g, *result))
        throw std::logic_error("clique minor search produced an invalid embedding");
    return result;
}

auto hadwiger::hadwiger_number(const Graph & g, const Limits & limits) -> HadwigerResult
{
    check_limit(g, limits.minor, "Hadwiger number");
    if (g.order() == 0)
        return {};

    auto clique = clique_number(g, limits);
    HadwigerResult result;
    result.eta = clique.value;
    clique.witness.for_each([&] (int v) { result.witness.branch_sets.push_back(VertexSet::of(g.order(), { v })); });

    while (true) {
        auto next = has_clique_minor(g, result.eta + 1, limits);
        if (! next)
            break;
        result.eta += 1;
        result.witness = std::move(*next);
    }
    return result;
}

auto hadwiger::exact_stats(const Graph & g, const Limits & limits) -> ExactStats
{
    ExactStats result;
    result.n = g.order();
    result.alpha = independence_number(g, limits);
    result.omega = clique_number(g, limits);
    result.chi = chromatic_number(g, limits);
    result.eta = hadwiger_number(g, limits);
    return result;
}

#include <hadwiger/dominating.hh>
#include <hadwiger/errors.hh>

#include <algorithm>
#include <string>

using namespace hadwiger;

using std::optional;
using std::to_string;

auto hadwiger::connected_dominating_pair(const Graph & g, optional<int> start) -> DominatingPair
{
    if (g.order() == 0)
        throw PreconditionViolated("connected dominating pair needs a nonempty graph");
    if (! is_connected(g))
        throw PreconditionViolated("connected dominating pair needs a connected graph; decompose into components first");

    int root = start.value_or(0);
    if (root < 0 || root >= g.order())
        throw InvalidArgument("start vertex " + to_string(root) + " out of range");

    DominatingPair result{ VertexSet::of(g.order(), { root }), VertexSet::of(g.order(), { root }) };

    while (true) {
        auto dist = bfs_distances(g, result.d);

        auto v = std::find(dist.begin(), dist.end(), 2);
        if (v == dist.end()) {
            if (std::any_of(dist.begin(), dist.end(), [] (int x) { return x > 2 || x == unreachable; }))
                throw std::logic_error("vertex at distance three or more from a set with no distance-two vertex");
            return result;
        }

        int far = static_cast<int>(v - dist.begin());
        int link = -1;
        g.neighbours(far).for_each([&] (int w) { if (link == -1 && dist[w] == 1) link = w; });

        result.d.insert(far);
        result.d.insert(link);
        result.s.insert(far);
    }
}

auto hadwiger::verify_dominating_pair(const Graph & g, const DominatingPair & p) -> bool
{
    if (p.d.universe() != g.order() || p.s.universe() != g.order())
        return false;
    return p.s.is_subset_of(p.d)
        && ! p.d.empty()
        && is_connected_set(g, p.d)
        && is_dominating(g, p.d)
        && is_independent(g, p.s)
        && p.d.size() == 2 * p.s.size() - 1;
}

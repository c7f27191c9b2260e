#include <hadwiger/errors.hh>
#include <hadwiger/generate.hh>
#include <hadwiger/random.hh>

using namespace hadwiger;

using std::string;
using std::string_view;
using std::to_string;

namespace
{
    void check_size(int n)
    {
        if (n < 0)
            throw InvalidArgument("negative graph size " + to_string(n));
    }
}

auto hadwiger::generator_kind_from_name(string_view name) -> GeneratorKind
{
    if (name == "complete") return GeneratorKind::complete;
    if (name == "cycle") return GeneratorKind::cycle;
    if (name == "path") return GeneratorKind::path;
    if (name == "petersen") return GeneratorKind::petersen;
    if (name == "gnp") return GeneratorKind::gnp;
    throw InvalidArgument("unknown generator family '" + string(name) + "'");
}

auto hadwiger::generator_kind_name(GeneratorKind kind) -> string
{
    switch (kind) {
        case GeneratorKind::complete: return "complete";
        case GeneratorKind::cycle:    return "cycle";
        case GeneratorKind::path:     return "path";
        case GeneratorKind::petersen: return "petersen";
        case GeneratorKind::gnp:      return "gnp";
    }
    return "unknown";
}

auto hadwiger::complete_graph(int n) -> Graph
{
    check_size(n);
    Graph g(n);
    for (int u = 0 ; u < n ; ++u)
        for (int v = u + 1 ; v < n ; ++v)
            g.add_edge(u, v);
    return g;
}

auto hadwiger::cycle_graph(int n) -> Graph
{
    check_size(n);
    if (n < 3)
        throw InvalidArgument("a simple cycle needs at least 3 vertices, got " + to_string(n));
    Graph g(n);
    for (int v = 0 ; v < n ; ++v)
        g.add_edge(v, (v + 1) % n);
    return g;
}

auto hadwiger::path_graph(int n) -> Graph
{
    check_size(n);
    Graph g(n);
    for (int v = 0 ; v + 1 < n ; ++v)
        g.add_edge(v, v + 1);
    return g;
}

auto hadwiger::petersen_graph() -> Graph
{
    Graph g(10);
    for (int i = 0 ; i < 5 ; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    return g;
}

auto hadwiger::gnp_graph(int n, double probability, std::uint64_t seed) -> Graph
{
    check_size(n);
    if (! (probability >= 0.0 && probability <= 1.0))
        throw InvalidArgument("edge probability must lie in [0,1]");
    SeededRng rng(seed);
    Graph g(n);
    for (int u = 0 ; u < n ; ++u)
        for (int v = u + 1 ; v < n ; ++v)
            if (rng.bernoulli(probability))
                g.add_edge(u, v);
    return g;
}

auto hadwiger::generate(const GeneratorParams & params) -> Graph
{
    switch (params.kind) {
        case GeneratorKind::complete: return complete_graph(params.n);
        case GeneratorKind::cycle:    return cycle_graph(params.n);
        case GeneratorKind::path:     return path_graph(params.n);
        case GeneratorKind::petersen: return petersen_graph();
        case GeneratorKind::gnp:
            if (! params.seed)
                throw InvalidArgument("random graphs need an explicit seed");
            return gnp_graph(params.n, params.probability, *params.seed);
    }
    throw InvalidArgument("unknown generator kind");
}

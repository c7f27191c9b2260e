#include <hadwiger/enumerate.hh>
#include <hadwiger/errors.hh>
#include <hadwiger/graph6.hh>
#include <hadwiger/random.hh>
#include <hadwiger/verify.hh>

#include <algorithm>
#include <map>
#include <tuple>

using namespace hadwiger;

using std::string;
using std::vector;

namespace
{
    struct Evaluation
    {
        int alpha = 0;
        int eta = 0;
        long long slack = 0;

        auto score() const -> std::pair<long long, long long>
        {
            if (eta >= 5)
                return { 0, slack };
            return { 1, 5 - eta };
        }
    };

    auto evaluate(const Graph & g, const Limits & limits) -> Evaluation
    {
        GraphInvariants values;
        values.n = g.order();
        values.alpha = independence_number(g, limits).value;
        values.eta = hadwiger_number(g, limits).eta;
        return { values.alpha, values.eta, evaluate_check(Check::theorem1, values).slack };
    }

    auto start_graph(const SearchParams & params, SeededRng & rng) -> Graph
    {
        int n = params.n_min + static_cast<int>(rng.below(static_cast<std::uint64_t>(params.n_max - params.n_min + 1)));
        GeneratorParams spec{ params.family, n, params.probability, {} };
        if (params.family == GeneratorKind::gnp)
            spec.seed = rng.next_u64();
        return generate(spec);
    }

    auto canonical_text(const Graph & g) -> string
    {
        if (g.order() <= canonical_max_order)
            return write_graph6(canonical_graph(g));
        return write_graph6(g);
    }
}

auto hadwiger::tightness_search(const SearchParams & params, const Limits & limits) -> vector<SearchEntry>
{
    if (params.budget < 0 || params.top < 0 || params.restart_interval < 1)
        throw InvalidArgument("search budget, top and restart interval must be non-negative (interval positive)");
    if (params.n_min < 0 || params.n_max < params.n_min || params.n_max > graph6_max_order)
        throw InvalidArgument("search order range is empty or out of range");

    SeededRng rng(params.seed);
    std::map<string, SearchEntry> seen;

    Graph current;
    Evaluation current_eval;

    auto record = [&] (const Graph & g, const Evaluation & e) {
        if (e.eta < 5)
            return;
        auto key = canonical_text(g);
        seen.try_emplace(key, SearchEntry{ key, g.order(), e.alpha, e.eta, e.slack });
    };

    for (long iteration = 0 ; iteration < params.budget ; ++iteration) {
        if (iteration % params.restart_interval == 0) {
            current = start_graph(params, rng);
            current_eval = evaluate(current, limits);
            record(current, current_eval);
            continue;
        }

        int n = current.order();
        if (n < 2)
            continue;
        int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
        if (v >= u)
            ++v;

        Graph proposal = current;
        if (proposal.adjacent(u, v))
            proposal.remove_edge(u, v);
        else
            proposal.add_edge(u, v);

        auto proposal_eval = evaluate(proposal, limits);
        if (proposal_eval.score() <= current_eval.score()) {
            current = std::move(proposal);
            current_eval = proposal_eval;
            record(current, current_eval);
        }
    }

    vector<SearchEntry> ranked;
    for (auto & [key, entry] : seen)
        ranked.push_back(entry);
    std::sort(ranked.begin(), ranked.end(), [] (const SearchEntry & a, const SearchEntry & b) {
        return std::tie(a.slack, a.n, a.g6) < std::tie(b.slack, b.n, b.g6);
    });
    if (ranked.size() > static_cast<std::size_t>(params.top))
        ranked.resize(static_cast<std::size_t>(params.top));
    return ranked;
}

#include <hadwiger/dominating.hh>
#include <hadwiger/enumerate.hh>
#include <hadwiger/errors.hh>
#include <hadwiger/exact.hh>
#include <hadwiger/generate.hh>
#include <hadwiger/graph6.hh>
#include <hadwiger/hadwiger.h>
#include <hadwiger/peeling.hh>
#include <hadwiger/verify.hh>

#include <json.hpp>

#include <memory>
#include <string>
#include <vector>

using namespace hadwiger;

using std::string;
using std::vector;

struct hw_graph
{
    Graph graph;
    string graph6;
    bool has_graph6 = false;

    explicit hw_graph(Graph g) : graph(std::move(g))
    {
        if (graph.order() <= graph6_max_order) {
            graph6 = write_graph6(graph);
            has_graph6 = true;
        }
    }
};

struct hw_graph_list
{
    vector<hw_graph> graphs;
};

struct hw_pair
{
    vector<int> d, s;
};

struct hw_stats
{
    ExactStats stats;
    vector<int> alpha_witness, omega_witness;
    vector<vector<int>> branch_sets;
    string json;
};

struct hw_peel
{
    PeelReport report;
    vector<int> set;
    string bound_text;
    string certificate;
};

struct hw_corpus
{
    CorpusResult result;
    string jsonl, csv;
};

struct hw_search
{
    vector<SearchEntry> entries;
};

namespace
{
    thread_local string last_error;
    thread_local long last_offset = -1;

    void clear_error()
    {
        last_error.clear();
        last_offset = -1;
    }

    auto fail(hw_status status, const string & message) -> hw_status
    {
        last_error = message;
        return status;
    }

    template <typename F_>
    auto guarded(F_ && f) -> hw_status
    {
        clear_error();
        try {
            f();
            return HW_OK;
        }
        catch (const ParseError & e) {
            last_offset = static_cast<long>(e.offset());
            return fail(HW_ERR_PARSE, e.what());
        }
        catch (const LimitExceeded & e) {
            return fail(HW_ERR_LIMIT, e.what());
        }
        catch (const PreconditionViolated & e) {
            return fail(HW_ERR_PRECONDITION, e.what());
        }
        catch (const BoundViolated & e) {
            return fail(HW_ERR_BOUND, e.what());
        }
        catch (const InvalidArgument & e) {
            return fail(HW_ERR_USAGE, e.what());
        }
        catch (const std::bad_alloc &) {
            return fail(HW_ERR_INTERNAL, "out of memory");
        }
        catch (const std::exception & e) {
            return fail(HW_ERR_INTERNAL, e.what());
        }
    }

    auto require(const void * p, const char * what) -> void
    {
        if (! p)
            throw InvalidArgument(string("null ") + what);
    }

    auto to_limits(const hw_limits * limits) -> Limits
    {
        if (! limits)
            return {};
        if (limits->alpha_bruteforce < 0 || limits->alpha < 0 || limits->chi < 0 || limits->minor < 0)
            throw InvalidArgument("oracle limits must be non-negative");
        return { limits->alpha_bruteforce, limits->alpha, limits->chi, limits->minor };
    }

    auto to_kind(hw_generator kind) -> GeneratorKind
    {
        switch (kind) {
            case HW_GEN_COMPLETE: return GeneratorKind::complete;
            case HW_GEN_CYCLE:    return GeneratorKind::cycle;
            case HW_GEN_PATH:     return GeneratorKind::path;
            case HW_GEN_PETERSEN: return GeneratorKind::petersen;
            case HW_GEN_GNP:      return GeneratorKind::gnp;
        }
        throw InvalidArgument("unknown generator kind");
    }

    auto to_set(int n, const int * members, size_t count) -> VertexSet
    {
        if (count && ! members)
            throw InvalidArgument("null vertex array");
        return VertexSet::from(n, std::span<const int>(members, count));
    }

    auto expose(const vector<int> & v, const int ** out) -> size_t
    {
        if (out)
            *out = v.data();
        return v.size();
    }

    auto to_params(const hw_peel_params * params) -> std::pair<BoundParams, BaseSolver>
    {
        require(params, "peel parameters");
        if (params->p_den == 0)
            throw InvalidArgument("zero denominator for p");
        auto bound = BoundParams::make(params->t, Rational(params->p_num, params->p_den));
        if (params->base != HW_BASE_T3 && params->base != HW_BASE_ORACLE)
            throw InvalidArgument("unknown base solver");
        return { bound, params->base == HW_BASE_T3 ? BaseSolver::t3 : BaseSolver::oracle };
    }
}

extern "C" {

HW_API const char * hw_version(void)
{
    return "1.0.0";
}

HW_API const char * hw_status_name(hw_status status)
{
    switch (status) {
        case HW_OK:               return "ok";
        case HW_ERR_USAGE:        return "usage";
        case HW_ERR_PARSE:        return "parse";
        case HW_ERR_LIMIT:        return "limit";
        case HW_ERR_BOUND:        return "bound-violation";
        case HW_ERR_SOLVER_BUG:   return "solver-bug";
        case HW_ERR_PRECONDITION: return "precondition";
        case HW_ERR_INTERNAL:     return "internal";
    }
    return "unknown";
}

HW_API const char * hw_last_error(void)
{
    return last_error.c_str();
}

HW_API long hw_last_error_offset(void)
{
    return last_offset;
}

HW_API hw_limits hw_default_limits(void)
{
    Limits d;
    return { d.alpha_bruteforce, d.alpha, d.chi, d.minor };
}

HW_API hw_status hw_graph_from_edges(int n, const int * edges, size_t edge_count, hw_graph ** out)
{
    return guarded([&] {
        require(out, "output handle");
        if (edge_count && ! edges)
            throw InvalidArgument("null edge array");
        Graph g(n);
        for (size_t i = 0 ; i < edge_count ; ++i)
            g.add_edge(edges[2 * i], edges[2 * i + 1]);
        *out = new hw_graph(std::move(g));
    });
}

HW_API hw_status hw_graph_parse_graph6(const char * text, hw_graph ** out)
{
    return guarded([&] {
        require(text, "graph6 text");
        require(out, "output handle");
        *out = new hw_graph(parse_graph6(text));
    });
}

HW_API hw_status hw_generator_from_name(const char * name, hw_generator * out)
{
    return guarded([&] {
        require(name, "generator name");
        require(out, "output");
        *out = static_cast<hw_generator>(static_cast<int>(generator_kind_from_name(name)));
    });
}

HW_API hw_status hw_graph_generate(hw_generator kind, int n, double probability, uint64_t seed, hw_graph ** out)
{
    return guarded([&] {
        require(out, "output handle");
        GeneratorParams params{ to_kind(kind), n, probability, seed };
        *out = new hw_graph(generate(params));
    });
}

HW_API void hw_graph_free(hw_graph * g)
{
    delete g;
}

HW_API int hw_graph_order(const hw_graph * g)
{
    return g ? g->graph.order() : -1;
}

HW_API long hw_graph_edge_count(const hw_graph * g)
{
    return g ? g->graph.edge_count() : -1;
}

HW_API int hw_graph_adjacent(const hw_graph * g, int u, int v)
{
    if (! g || u < 0 || v < 0 || u >= g->graph.order() || v >= g->graph.order())
        return 0;
    return g->graph.adjacent(u, v) ? 1 : 0;
}

HW_API int hw_graph_is_connected(const hw_graph * g)
{
    return g && is_connected(g->graph) ? 1 : 0;
}

HW_API const char * hw_graph_graph6(const hw_graph * g)
{
    return g && g->has_graph6 ? g->graph6.c_str() : nullptr;
}

HW_API hw_status hw_graph_delete_vertices(const hw_graph * g, const int * vertices, size_t count, hw_graph ** out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "output handle");
        *out = new hw_graph(delete_vertices(g->graph, to_set(g->graph.order(), vertices, count)).graph);
    });
}

HW_API hw_status hw_graph_contract_edge(const hw_graph * g, int u, int v, hw_graph ** out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "output handle");
        *out = new hw_graph(contract_edge(g->graph, u, v));
    });
}

HW_API hw_status hw_enumerate_graphs(int n_max, int connected_only, hw_graph_list ** out)
{
    return guarded([&] {
        require(out, "output handle");
        auto list = std::make_unique<hw_graph_list>();
        for (auto & g : enumerate_graphs_up_to(n_max, connected_only != 0))
            list->graphs.emplace_back(std::move(g));
        *out = list.release();
    });
}

HW_API size_t hw_graph_list_size(const hw_graph_list * list)
{
    return list ? list->graphs.size() : 0;
}

HW_API const hw_graph * hw_graph_list_at(const hw_graph_list * list, size_t index)
{
    if (! list || index >= list->graphs.size())
        return nullptr;
    return &list->graphs[index];
}

HW_API void hw_graph_list_free(hw_graph_list * list)
{
    delete list;
}

HW_API hw_status hw_dominating_pair(const hw_graph * g, int start, hw_pair ** out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "output handle");
        auto pair = connected_dominating_pair(g->graph, start < 0 ? std::nullopt : std::optional<int>(start));
        *out = new hw_pair{ pair.d.to_vector(), pair.s.to_vector() };
    });
}

HW_API size_t hw_pair_d(const hw_pair * p, const int ** members)
{
    return p ? expose(p->d, members) : 0;
}

HW_API size_t hw_pair_s(const hw_pair * p, const int ** members)
{
    return p ? expose(p->s, members) : 0;
}

HW_API void hw_pair_free(hw_pair * p)
{
    delete p;
}

HW_API hw_status hw_verify_dominating_pair(const hw_graph * g, const int * d, size_t d_count,
        const int * s, size_t s_count, int * valid)
{
    return guarded([&] {
        require(g, "graph");
        require(valid, "output");
        int n = g->graph.order();
        *valid = verify_dominating_pair(g->graph, { to_set(n, d, d_count), to_set(n, s, s_count) }) ? 1 : 0;
    });
}

HW_API hw_status hw_compute_stats(const hw_graph * g, const hw_limits * limits, hw_stats ** out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "output handle");
        auto result = std::make_unique<hw_stats>();
        result->stats = exact_stats(g->graph, to_limits(limits));
        auto & s = result->stats;
        result->alpha_witness = s.alpha.witness.to_vector();
        result->omega_witness = s.omega.witness.to_vector();
        nlohmann::json branch_sets = nlohmann::json::array();
        for (auto & b : s.eta.witness.branch_sets) {
            result->branch_sets.push_back(b.to_vector());
            branch_sets.push_back(result->branch_sets.back());
        }
        nlohmann::json doc = {
            { "n", s.n },
            { "alpha", s.alpha.value }, { "alpha_witness", result->alpha_witness },
            { "omega", s.omega.value }, { "omega_witness", result->omega_witness },
            { "chi", s.chi.chi }, { "colouring", s.chi.colours },
            { "eta", s.eta.eta }, { "branch_sets", branch_sets }
        };
        if (g->has_graph6)
            doc["g6"] = g->graph6;
        result->json = doc.dump();
        *out = result.release();
    });
}

HW_API void hw_stats_free(hw_stats * s)
{
    delete s;
}

HW_API int hw_stats_alpha(const hw_stats * s) { return s ? s->stats.alpha.value : -1; }
HW_API int hw_stats_omega(const hw_stats * s) { return s ? s->stats.omega.value : -1; }
HW_API int hw_stats_chi(const hw_stats * s) { return s ? s->stats.chi.chi : -1; }
HW_API int hw_stats_eta(const hw_stats * s) { return s ? s->stats.eta.eta : -1; }

HW_API size_t hw_stats_alpha_witness(const hw_stats * s, const int ** members)
{
    return s ? expose(s->alpha_witness, members) : 0;
}

HW_API size_t hw_stats_omega_witness(const hw_stats * s, const int ** members)
{
    return s ? expose(s->omega_witness, members) : 0;
}

HW_API size_t hw_stats_colouring(const hw_stats * s, const int ** colours)
{
    return s ? expose(s->stats.chi.colours, colours) : 0;
}

HW_API size_t hw_stats_branch_set_count(const hw_stats * s)
{
    return s ? s->branch_sets.size() : 0;
}

HW_API size_t hw_stats_branch_set(const hw_stats * s, size_t index, const int ** members)
{
    if (! s || index >= s->branch_sets.size())
        return 0;
    return expose(s->branch_sets[index], members);
}

HW_API const char * hw_stats_json(const hw_stats * s)
{
    return s ? s->json.c_str() : nullptr;
}

HW_API hw_status hw_independence_number(const hw_graph * g, const hw_limits * limits, int * alpha)
{
    return guarded([&] {
        require(g, "graph");
        require(alpha, "output");
        *alpha = independence_number(g->graph, to_limits(limits)).value;
    });
}

HW_API hw_status hw_hadwiger_number(const hw_graph * g, const hw_limits * limits, int * eta)
{
    return guarded([&] {
        require(g, "graph");
        require(eta, "output");
        *eta = hadwiger_number(g->graph, to_limits(limits)).eta;
    });
}

HW_API hw_status hw_has_clique_minor(const hw_graph * g, int t, const hw_limits * limits, int * found)
{
    return guarded([&] {
        require(g, "graph");
        require(found, "output");
        *found = has_clique_minor(g->graph, t, to_limits(limits)) ? 1 : 0;
    });
}

HW_API hw_status hw_parse_rational(const char * text, long long * num, long long * den)
{
    return guarded([&] {
        require(text, "text");
        require(num, "output");
        require(den, "output");
        auto r = parse_rational(text);
        *num = r.numerator();
        *den = r.denominator();
    });
}

HW_API hw_status hw_guaranteed_bound(long n, int eta, int t, long long p_num, long long p_den,
        long long * num, long long * den, long long * ceiling)
{
    return guarded([&] {
        if (p_den == 0)
            throw InvalidArgument("zero denominator for p");
        auto r = guaranteed_bound(n, eta, BoundParams::make(t, Rational(p_num, p_den)));
        if (num)
            *num = r.numerator();
        if (den)
            *den = r.denominator();
        if (ceiling)
            *ceiling = ceil_rational(r);
    });
}

HW_API hw_status hw_peel_run(const hw_graph * g, const hw_peel_params * params, const hw_limits * limits, hw_peel ** out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "output handle");
        auto [bound, base] = to_params(params);
        auto result = std::make_unique<hw_peel>();
        result->report = peel_with_bound(g->graph, bound, base, to_limits(limits));
        result->set = result->report.result.set.to_vector();
        if (result->report.bound)
            result->bound_text = rational_to_string(*result->report.bound);
        result->certificate = certificate_json(g->graph, result->report);
        *out = result.release();
    });
}

HW_API void hw_peel_free(hw_peel * p)
{
    delete p;
}

HW_API size_t hw_peel_set(const hw_peel * p, const int ** members)
{
    return p ? expose(p->set, members) : 0;
}

HW_API int hw_peel_level_count(const hw_peel * p)
{
    return p ? static_cast<int>(p->report.result.certificate.levels.size()) : -1;
}

HW_API int hw_peel_chosen(const hw_peel * p)
{
    return p ? p->report.result.certificate.chosen : -1;
}

HW_API int hw_peel_eta(const hw_peel * p)
{
    return p && p->report.eta ? *p->report.eta : -1;
}

HW_API int hw_peel_has_bound(const hw_peel * p)
{
    return p && p->report.bound ? 1 : 0;
}

HW_API long long hw_peel_bound_ceiling(const hw_peel * p)
{
    return p && p->report.bound_ceiling ? *p->report.bound_ceiling : 0;
}

HW_API const char * hw_peel_bound_text(const hw_peel * p)
{
    return p ? p->bound_text.c_str() : nullptr;
}

HW_API int hw_peel_meets_bound(const hw_peel * p)
{
    return p && p->report.meets_bound() ? 1 : 0;
}

HW_API int hw_peel_certificate_valid(const hw_graph * g, const hw_peel * p)
{
    if (! g || ! p)
        return 0;
    try {
        return verify_peeling_certificate(g->graph, p->report.result) ? 1 : 0;
    }
    catch (...) {
        return 0;
    }
}

HW_API const char * hw_peel_certificate_json(const hw_peel * p)
{
    return p ? p->certificate.c_str() : nullptr;
}

HW_API const char * hw_check_name(int index)
{
    static const auto names = [] {
        vector<string> result;
        for (int i = 0 ; i < check_count ; ++i)
            result.push_back(check_name(static_cast<Check>(i)));
        return result;
    }();
    if (index < 0 || index >= check_count)
        return nullptr;
    return names[static_cast<size_t>(index)].c_str();
}

HW_API hw_status hw_parse_checks(const char * list, unsigned * mask)
{
    return guarded([&] {
        require(list, "check list");
        require(mask, "output");
        *mask = parse_checks(list);
    });
}

HW_API hw_corpus_spec hw_default_corpus_spec(void)
{
    hw_corpus_spec spec{};
    spec.source = HW_CORPUS_FILE;
    spec.path = nullptr;
    spec.generator = HW_GEN_GNP;
    spec.n_min = 1;
    spec.n_max = 1;
    spec.count_per_n = 1;
    spec.probability = 0.5;
    spec.seed = 0;
    spec.exhaustive_n_max = 0;
    spec.connected_only = 0;
    spec.eta_min = -1;
    spec.eta_max = -1;
    return spec;
}

HW_API hw_status hw_corpus_run(const hw_corpus_spec * spec, unsigned checks, const hw_limits * limits, int jobs, hw_corpus ** out)
{
    return guarded([&] {
        require(spec, "corpus spec");
        require(out, "output handle");
        CorpusSpec s;
        switch (spec->source) {
            case HW_CORPUS_FILE:
                require(spec->path, "corpus path");
                s.source = CorpusSource::file;
                s.path = spec->path;
                break;
            case HW_CORPUS_GENERATOR:
                s.source = CorpusSource::generator;
                s.generator = GeneratorParams{ to_kind(spec->generator), 0, spec->probability, spec->seed };
                s.n_min = spec->n_min;
                s.n_max = spec->n_max;
                s.count_per_n = spec->count_per_n;
                break;
            case HW_CORPUS_EXHAUSTIVE:
                s.source = CorpusSource::exhaustive;
                s.exhaustive_n_max = spec->exhaustive_n_max;
                break;
            default:
                throw InvalidArgument("unknown corpus source");
        }
        s.connected_only = spec->connected_only != 0;
        if (spec->eta_min >= 0)
            s.eta_min = spec->eta_min;
        if (spec->eta_max >= 0)
            s.eta_max = spec->eta_max;
        if (checks & ~all_checks)
            throw InvalidArgument("unknown check bits");

        auto result = std::make_unique<hw_corpus>();
        result->result = corpus_run(s, checks, to_limits(limits), jobs);
        result->jsonl = corpus_jsonl(result->result);
        result->csv = summary_csv(result->result);
        *out = result.release();
    });
}

HW_API void hw_corpus_free(hw_corpus * c)
{
    delete c;
}

HW_API size_t hw_corpus_report_count(const hw_corpus * c) { return c ? c->result.reports.size() : 0; }
HW_API long hw_corpus_skipped(const hw_corpus * c) { return c ? c->result.skipped : 0; }
HW_API long hw_corpus_filtered(const hw_corpus * c) { return c ? c->result.filtered : 0; }
HW_API int hw_corpus_solver_bug(const hw_corpus * c) { return c && c->result.solver_bug ? 1 : 0; }
HW_API int hw_corpus_conjecture_failure(const hw_corpus * c) { return c && c->result.conjecture_failure ? 1 : 0; }
HW_API size_t hw_corpus_failure_count(const hw_corpus * c) { return c ? c->result.failures.size() : 0; }

HW_API const char * hw_corpus_failure(const hw_corpus * c, size_t index)
{
    if (! c || index >= c->result.failures.size())
        return nullptr;
    return c->result.failures[index].c_str();
}

HW_API const char * hw_corpus_jsonl(const hw_corpus * c)
{
    return c ? c->jsonl.c_str() : nullptr;
}

HW_API const char * hw_corpus_summary_csv(const hw_corpus * c)
{
    return c ? c->csv.c_str() : nullptr;
}

HW_API size_t hw_corpus_summary_count(const hw_corpus * c)
{
    return c ? c->result.summary.size() : 0;
}

HW_API hw_status hw_corpus_summary(const hw_corpus * c, size_t index, hw_check_summary * out)
{
    return guarded([&] {
        require(c, "corpus");
        require(out, "output");
        if (index >= c->result.summary.size())
            throw InvalidArgument("summary index out of range");
        auto & s = c->result.summary[index];
        *out = { s.name.c_str(), s.applicable_count, s.pass_count, s.fail_count,
            s.min_slack ? 1 : 0, s.min_slack.value_or(0), s.argmin_g6.c_str() };
    });
}

HW_API hw_search_params hw_default_search_params(void)
{
    SearchParams d;
    return { HW_GEN_GNP, d.n_min, d.n_max, d.probability, d.budget, d.seed, d.top, d.restart_interval };
}

HW_API hw_status hw_search_run(const hw_search_params * params, const hw_limits * limits, hw_search ** out)
{
    return guarded([&] {
        require(params, "search parameters");
        require(out, "output handle");
        SearchParams p{ to_kind(params->family), params->n_min, params->n_max, params->probability,
            params->budget, params->seed, params->top, params->restart_interval };
        auto result = std::make_unique<hw_search>();
        result->entries = tightness_search(p, to_limits(limits));
        *out = result.release();
    });
}

HW_API void hw_search_free(hw_search * s)
{
    delete s;
}

HW_API size_t hw_search_count(const hw_search * s)
{
    return s ? s->entries.size() : 0;
}

HW_API hw_status hw_search_entry(const hw_search * s, size_t index, const char ** g6, long long * slack,
        int * n, int * alpha, int * eta)
{
    return guarded([&] {
        require(s, "search result");
        if (index >= s->entries.size())
            throw InvalidArgument("search entry index out of range");
        auto & e = s->entries[index];
        if (g6) *g6 = e.g6.c_str();
        if (slack) *slack = e.slack;
        if (n) *n = e.n;
        if (alpha) *alpha = e.alpha;
        if (eta) *eta = e.eta;
    });
}

}

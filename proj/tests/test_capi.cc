#include <hadwiger/hadwiger.h>

#include <doctest.h>

#include <string>
#include <vector>

namespace
{
    auto parse(const char * text) -> hw_graph *
    {
        hw_graph * g = nullptr;
        REQUIRE(hw_graph_parse_graph6(text, &g) == HW_OK);
        return g;
    }

    auto members(const int * p, size_t count) -> std::vector<int>
    {
        return { p, p + count };
    }
}

TEST_CASE("graphs through the C interface")
{
    int edges[] = { 0, 1, 1, 2, 2, 3 };
    hw_graph * g = nullptr;
    REQUIRE(hw_graph_from_edges(4, edges, 3, &g) == HW_OK);
    CHECK(hw_graph_order(g) == 4);
    CHECK(hw_graph_edge_count(g) == 3);
    CHECK(hw_graph_adjacent(g, 1, 2) == 1);
    CHECK(hw_graph_adjacent(g, 0, 2) == 0);
    CHECK(hw_graph_is_connected(g) == 1);

    hw_graph * c = nullptr;
    REQUIRE(hw_graph_contract_edge(g, 0, 1, &c) == HW_OK);
    CHECK(hw_graph_order(c) == 3);
    CHECK(hw_graph_contract_edge(g, 0, 2, &c) == HW_ERR_USAGE);

    int gone[] = { 1 };
    hw_graph * d = nullptr;
    REQUIRE(hw_graph_delete_vertices(g, gone, 1, &d) == HW_OK);
    CHECK(hw_graph_is_connected(d) == 0);

    hw_graph_free(g);
    hw_graph_free(c);
    hw_graph_free(d);
    hw_graph_free(nullptr);

    int loop[] = { 0, 0 };
    CHECK(hw_graph_from_edges(2, loop, 1, &g) == HW_ERR_USAGE);
    CHECK(std::string(hw_last_error()).size() > 0);
}

TEST_CASE("parse errors report offsets")
{
    hw_graph * g = nullptr;
    CHECK(hw_graph_parse_graph6("D~", &g) == HW_ERR_PARSE);
    CHECK(g == nullptr);
    CHECK(hw_last_error_offset() == 2);
    g = parse("D~{");
    CHECK(std::string(hw_graph_graph6(g)) == "D~{");
    CHECK(hw_last_error_offset() == -1);
    hw_graph_free(g);
    CHECK(std::string(hw_status_name(HW_ERR_SOLVER_BUG)).size() > 0);
}

TEST_CASE("generators and enumeration")
{
    hw_generator kind;
    REQUIRE(hw_generator_from_name("petersen", &kind) == HW_OK);
    hw_graph * p = nullptr;
    REQUIRE(hw_graph_generate(kind, 0, 0.0, 0, &p) == HW_OK);
    CHECK(hw_graph_edge_count(p) == 15);
    CHECK(hw_generator_from_name("star", &kind) == HW_ERR_USAGE);

    hw_graph * a = nullptr;
    hw_graph * b = nullptr;
    REQUIRE(hw_graph_generate(HW_GEN_GNP, 12, 0.5, 42, &a) == HW_OK);
    REQUIRE(hw_graph_generate(HW_GEN_GNP, 12, 0.5, 42, &b) == HW_OK);
    CHECK(std::string(hw_graph_graph6(a)) == hw_graph_graph6(b));
    CHECK(hw_graph_generate(HW_GEN_GNP, 12, 1.5, 42, &b) == HW_ERR_USAGE);

    hw_graph_list * list = nullptr;
    REQUIRE(hw_enumerate_graphs(5, 1, &list) == HW_OK);
    CHECK(hw_graph_list_size(list) == 1 + 1 + 2 + 6 + 21);
    CHECK(hw_graph_order(hw_graph_list_at(list, 0)) == 1);
    CHECK(hw_enumerate_graphs(11, 1, &list) == HW_ERR_LIMIT);

    hw_graph_list_free(list);
    hw_graph_free(p);
    hw_graph_free(a);
    hw_graph_free(b);
}

TEST_CASE("dominating pairs")
{
    int edges[] = { 0, 1, 1, 2, 2, 3, 3, 4 };
    hw_graph * g = nullptr;
    REQUIRE(hw_graph_from_edges(5, edges, 4, &g) == HW_OK);
    hw_pair * pair = nullptr;
    REQUIRE(hw_dominating_pair(g, -1, &pair) == HW_OK);
    const int * d = nullptr;
    const int * s = nullptr;
    size_t nd = hw_pair_d(pair, &d);
    size_t ns = hw_pair_s(pair, &s);
    CHECK(members(d, nd) == std::vector<int>{ 0, 1, 2, 3, 4 });
    CHECK(members(s, ns) == std::vector<int>{ 0, 2, 4 });
    int valid = 0;
    REQUIRE(hw_verify_dominating_pair(g, d, nd, s, ns, &valid) == HW_OK);
    CHECK(valid == 1);
    int bad_d[] = { 0, 1, 2 };
    int bad_s[] = { 0, 2 };
    REQUIRE(hw_verify_dominating_pair(g, bad_d, 3, bad_s, 2, &valid) == HW_OK);
    CHECK(valid == 0);
    hw_pair_free(pair);

    hw_graph * empty = parse("A?");
    CHECK(hw_dominating_pair(empty, 0, &pair) == HW_ERR_PRECONDITION);
    hw_graph_free(empty);
    hw_graph_free(g);
}

TEST_CASE("exact invariants")
{
    hw_graph * p = nullptr;
    REQUIRE(hw_graph_generate(HW_GEN_PETERSEN, 0, 0.0, 0, &p) == HW_OK);
    hw_limits limits = hw_default_limits();
    hw_stats * stats = nullptr;
    REQUIRE(hw_compute_stats(p, &limits, &stats) == HW_OK);
    CHECK(hw_stats_alpha(stats) == 4);
    CHECK(hw_stats_omega(stats) == 2);
    CHECK(hw_stats_chi(stats) == 3);
    CHECK(hw_stats_eta(stats) == 5);
    const int * m = nullptr;
    CHECK(hw_stats_alpha_witness(stats, &m) == 4);
    CHECK(hw_stats_colouring(stats, &m) == 10);
    CHECK(hw_stats_branch_set_count(stats) == 5);
    CHECK(std::string(hw_stats_json(stats)).find("\"eta\":5") != std::string::npos);
    hw_stats_free(stats);

    int value = 0;
    REQUIRE(hw_independence_number(p, &limits, &value) == HW_OK);
    CHECK(value == 4);
    REQUIRE(hw_hadwiger_number(p, &limits, &value) == HW_OK);
    CHECK(value == 5);
    REQUIRE(hw_has_clique_minor(p, 6, &limits, &value) == HW_OK);
    CHECK(value == 0);

    limits.minor = 8;
    CHECK(hw_hadwiger_number(p, &limits, &value) == HW_ERR_LIMIT);
    hw_graph_free(p);
}

TEST_CASE("peeling")
{
    long long num = 0, den = 0, ceiling = 0;
    REQUIRE(hw_guaranteed_bound(7, 4, 3, 3, 1, &num, &den, &ceiling) == HW_OK);
    CHECK(num == 8);
    CHECK(den == 5);
    CHECK(ceiling == 2);
    CHECK(hw_guaranteed_bound(7, 2, 3, 3, 1, &num, &den, &ceiling) == HW_ERR_USAGE);
    REQUIRE(hw_parse_rational("7/2", &num, &den) == HW_OK);
    CHECK(num == 7);
    CHECK(den == 2);

    hw_graph * k5 = parse("D~{");
    hw_limits limits = hw_default_limits();
    hw_peel_params params{ 5, 5, 1, HW_BASE_ORACLE };
    hw_peel * peel = nullptr;
    REQUIRE(hw_peel_run(k5, &params, &limits, &peel) == HW_OK);
    const int * set = nullptr;
    CHECK(hw_peel_set(peel, &set) == 1);
    CHECK(hw_peel_eta(peel) == 5);
    CHECK(hw_peel_has_bound(peel) == 1);
    CHECK(hw_peel_bound_ceiling(peel) == 1);
    CHECK(hw_peel_meets_bound(peel) == 1);
    CHECK(hw_peel_certificate_valid(k5, peel) == 1);
    CHECK(hw_peel_chosen(peel) == -1);
    CHECK(std::string(hw_peel_certificate_json(peel)).find("\"base\":\"oracle\"") != std::string::npos);
    hw_peel_free(peel);

    params = { 3, 3, 1, HW_BASE_T3 };
    REQUIRE(hw_peel_run(k5, &params, &limits, &peel) == HW_OK);
    CHECK(hw_peel_level_count(peel) == 2);
    CHECK(hw_peel_meets_bound(peel) == 1);
    hw_peel_free(peel);

    params = { 3, 2, 1, HW_BASE_T3 };
    CHECK(hw_peel_run(k5, &params, &limits, &peel) == HW_ERR_USAGE);
    hw_graph_free(k5);
}

TEST_CASE("corpus runs")
{
    unsigned mask = 0;
    REQUIRE(hw_parse_checks("theorem1", &mask) == HW_OK);
    CHECK(hw_parse_checks("bogus", &mask) == HW_ERR_USAGE);
    CHECK(std::string(hw_check_name(6)) == "theorem1");
    CHECK(hw_check_name(HW_CHECK_COUNT) == nullptr);

    hw_corpus_spec spec = hw_default_corpus_spec();
    spec.source = HW_CORPUS_GENERATOR;
    spec.generator = HW_GEN_COMPLETE;
    spec.n_min = 5;
    spec.n_max = 8;
    hw_limits limits = hw_default_limits();
    hw_corpus * corpus = nullptr;
    REQUIRE(hw_corpus_run(&spec, mask, &limits, 2, &corpus) == HW_OK);
    CHECK(hw_corpus_report_count(corpus) == 4);
    CHECK(hw_corpus_solver_bug(corpus) == 0);
    CHECK(hw_corpus_summary_count(corpus) == 1);
    hw_check_summary s;
    REQUIRE(hw_corpus_summary(corpus, 0, &s) == HW_OK);
    CHECK(std::string(s.name) == "theorem1");
    CHECK(s.applicable_count == 4);
    CHECK(s.has_min_slack == 1);
    CHECK(s.min_slack == 0);
    CHECK(std::string(s.argmin_g6) == "D~{");
    CHECK(std::string(hw_corpus_summary_csv(corpus)) == "inequality,applicable_count,pass_count,min_slack,argmin_g6\ntheorem1,4,4,0,D~{\n");
    hw_corpus_free(corpus);

    spec.generator = HW_GEN_GNP;
    spec.seed = 0;
    REQUIRE(hw_corpus_run(&spec, mask, &limits, 1, &corpus) == HW_OK);
    hw_corpus_free(corpus);
}

TEST_CASE("tightness search")
{
    hw_search_params params = hw_default_search_params();
    hw_limits limits = hw_default_limits();
    hw_search * search = nullptr;
    REQUIRE(hw_search_run(&params, &limits, &search) == HW_OK);
    CHECK(hw_search_count(search) == 0);
    hw_search_free(search);

    params.family = HW_GEN_COMPLETE;
    params.n_min = 5;
    params.n_max = 9;
    params.budget = 10;
    params.seed = 1;
    REQUIRE(hw_search_run(&params, &limits, &search) == HW_OK);
    REQUIRE(hw_search_count(search) >= 1);
    const char * g6 = nullptr;
    long long slack = -1;
    int n = 0, alpha = 0, eta = 0;
    REQUIRE(hw_search_entry(search, 0, &g6, &slack, &n, &alpha, &eta) == HW_OK);
    CHECK(slack == 0);
    CHECK(alpha == 1);
    CHECK(eta == n);
    CHECK(hw_search_entry(search, 99, &g6, &slack, &n, &alpha, &eta) == HW_ERR_USAGE);
    hw_search_free(search);
}

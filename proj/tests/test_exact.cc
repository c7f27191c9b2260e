#include "support.hh"

#include <hadwiger/dominating.hh>
#include <hadwiger/enumerate.hh>
#include <hadwiger/errors.hh>
#include <hadwiger/exact.hh>
#include <hadwiger/generate.hh>
#include <hadwiger/random.hh>

#include <doctest.h>

using namespace hadwiger;
using test::make_graph;
using test::set_of;

namespace
{
    auto random_small_graphs(std::uint64_t seed, int count, int max_n) -> std::vector<Graph>
    {
        std::vector<Graph> result;
        SeededRng rng(seed);
        for (int i = 0 ; i < count ; ++i) {
            int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n)));
            result.push_back(gnp_graph(n, 0.1 + 0.8 * rng.unit(), rng.next_u64()));
        }
        return result;
    }

    auto path_of_trees() -> Graph
    {
        return make_graph(7, { { 0, 1 }, { 0, 2 }, { 2, 3 }, { 2, 4 }, { 4, 5 }, { 5, 6 } });
    }
}

TEST_CASE("independence and clique numbers")
{
    CHECK(independence_number(cycle_graph(5)).value == 2);
    CHECK(independence_number(complete_graph(5)).value == 1);
    CHECK(independence_number_bruteforce(petersen_graph()).value == 4);
    CHECK(independence_number(petersen_graph()).value == 4);
    CHECK(clique_number(complete_graph(5)).value == 5);
    CHECK(clique_number(petersen_graph()).value == 2);
    CHECK(clique_number(cycle_graph(6)).value == 2);
    CHECK(independence_number(Graph(0)).value == 0);
    CHECK(clique_number(Graph(0)).value == 0);
    CHECK(test::alpha_oracle(petersen_graph()) == 4);
    CHECK(test::omega_oracle(petersen_graph()) == 2);
}

TEST_CASE("both independence solvers agree with the recursive oracle")
{
    for (auto & g : random_small_graphs(5, 300, 14)) {
        auto brute = independence_number_bruteforce(g);
        auto bb = independence_number(g);
        int expected = test::alpha_oracle(g);
        CHECK(brute.value == expected);
        CHECK(bb.value == expected);
        CHECK(is_independent(g, bb.witness));
        CHECK(bb.witness.size() == bb.value);
        CHECK(is_independent(g, brute.witness));
        CHECK(brute.witness.size() == brute.value);

        auto clique = clique_number(g);
        CHECK(clique.value == test::omega_oracle(g));
        CHECK(is_clique(g, clique.witness));
        CHECK(clique.witness.size() == clique.value);
    }
}

TEST_CASE("solver limits")
{
    Limits small;
    small.alpha_bruteforce = 5;
    small.alpha = 5;
    small.chi = 5;
    small.minor = 5;
    CHECK_THROWS_AS(independence_number_bruteforce(Graph(6), small), LimitExceeded);
    CHECK_THROWS_AS(independence_number(Graph(6), small), LimitExceeded);
    CHECK_THROWS_AS(chromatic_number(Graph(6), small), LimitExceeded);
    CHECK_THROWS_AS(hadwiger_number(Graph(6), small), LimitExceeded);
    CHECK_THROWS_AS(has_clique_minor(Graph(6), 2, small), LimitExceeded);
    CHECK_THROWS_AS(has_clique_minor(Graph(3), 0), InvalidArgument);
}

TEST_CASE("chromatic number")
{
    CHECK(chromatic_number(cycle_graph(5)).chi == 3);
    CHECK(chromatic_number(petersen_graph()).chi == 3);
    CHECK(chromatic_number(complete_graph(5)).chi == 5);
    CHECK(chromatic_number(Graph(0)).chi == 0);
    CHECK(chromatic_number(Graph(3)).chi == 1);
    CHECK(test::chi_oracle(petersen_graph()) == 3);

    for (auto & g : random_small_graphs(6, 200, 10)) {
        auto c = chromatic_number(g);
        CHECK(c.chi == test::chi_oracle(g));
        CHECK(is_proper_colouring(g, c.colours, c.chi));
    }
    CHECK(! is_proper_colouring(cycle_graph(5), { 0, 1, 0, 1, 0 }, 2));
    CHECK(! is_proper_colouring(cycle_graph(5), { 0, 1, 0, 1, 2 }, 2));
    CHECK(is_proper_colouring(cycle_graph(5), { 0, 1, 0, 1, 2 }, 3));
}

TEST_CASE("degeneracy order")
{
    auto tree = degeneracy_order(path_of_trees());
    CHECK(tree.degeneracy == 1);
    CHECK(degeneracy_order(cycle_graph(6)).degeneracy == 2);
    CHECK(degeneracy_order(complete_graph(5)).degeneracy == 4);
    CHECK(degeneracy_order(petersen_graph()).degeneracy == 3);
    CHECK(degeneracy_order(path_graph(4)).order == std::vector<int>{ 0, 1, 2, 3 });

    for (auto & g : random_small_graphs(7, 100, 16)) {
        auto d = degeneracy_order(g);
        REQUIRE(d.order.size() == static_cast<std::size_t>(g.order()));
        VertexSet later = g.vertices();
        int worst = 0;
        for (int v : d.order) {
            later.erase(v);
            worst = std::max(worst, (g.neighbours(v) & later).size());
        }
        CHECK(worst == d.degeneracy);
    }
}

TEST_CASE("minor embedding verifier")
{
    MinorEmbedding singletons{ { set_of(5, { 0 }), set_of(5, { 1 }), set_of(5, { 2 }), set_of(5, { 3 }), set_of(5, { 4 }) } };
    CHECK(verify_minor_embedding(complete_graph(5), singletons));
    CHECK(! verify_minor_embedding(cycle_graph(6), { { set_of(6, { 0 }), set_of(6, { 2 }), set_of(6, { 4 }) } }));
    CHECK(verify_minor_embedding(cycle_graph(6), { { set_of(6, { 0, 1 }), set_of(6, { 2, 3 }), set_of(6, { 4, 5 }) } }));
    CHECK(! verify_minor_embedding(cycle_graph(6), { { set_of(6, { 0, 2 }), set_of(6, { 3 }), set_of(6, { 4, 5 }) } }));
    CHECK(! verify_minor_embedding(cycle_graph(6), { { set_of(6, { 0, 1 }), set_of(6, { 1, 2, 3 }), set_of(6, { 4, 5 }) } }));
    CHECK(! verify_minor_embedding(cycle_graph(6), { { set_of(6, { 0, 1 }), VertexSet(6), set_of(6, { 4, 5 }) } }));
}

TEST_CASE("clique minors of the fixtures")
{
    auto k5 = has_clique_minor(complete_graph(5), 5);
    REQUIRE(k5);
    CHECK(k5->arity() == 5);
    for (int i = 0 ; i < 5 ; ++i)
        CHECK(k5->branch_sets[i] == set_of(5, { i }));

    auto p = petersen_graph();
    auto k5p = has_clique_minor(p, 5);
    REQUIRE(k5p);
    CHECK(verify_minor_embedding(p, *k5p));
    CHECK(! has_clique_minor(p, 6));

    // contracting the spokes gives K5
    MinorEmbedding spokes;
    for (int i = 0 ; i < 5 ; ++i)
        spokes.branch_sets.push_back(set_of(10, { i, i + 5 }));
    CHECK(verify_minor_embedding(p, spokes));

    auto c6 = hadwiger_number(cycle_graph(6));
    CHECK(c6.eta == 3);
    CHECK(verify_minor_embedding(cycle_graph(6), c6.witness));
    CHECK(hadwiger_number(complete_graph(5)).eta == 5);
    CHECK(hadwiger_number(p).eta == 5);
    CHECK(hadwiger_number(Graph(0)).eta == 0);
    CHECK(hadwiger_number(Graph(4)).eta == 1);
    CHECK(hadwiger_number(path_graph(4)).eta == 2);
    CHECK(hadwiger_number(test::wheel(6)).eta == 4);

    test::EtaOracle oracle;
    CHECK(oracle(p) == 5);
    CHECK(oracle(cycle_graph(6)) == 3);
}

TEST_CASE("hadwiger number agrees with the minor-recursion oracle")
{
    test::EtaOracle oracle;
    for (auto & g : enumerate_graphs_up_to(6, false)) {
        auto h = hadwiger_number(g);
        CHECK(h.eta == oracle(g));
        CHECK(h.witness.arity() == h.eta);
        CHECK(verify_minor_embedding(g, h.witness));
    }
    for (auto & g : random_small_graphs(8, 150, 9)) {
        auto h = hadwiger_number(g);
        CHECK(h.eta == oracle(g));
        CHECK(verify_minor_embedding(g, h.witness));
    }
}

TEST_CASE("invariant relations")
{
    for (auto & g : random_small_graphs(9, 150, 12)) {
        auto s = exact_stats(g);
        int n = g.order();
        CHECK(s.n == n);
        CHECK(s.omega.value <= s.eta.eta);
        CHECK(s.eta.eta <= n);
        CHECK(s.omega.value <= s.chi.chi);
        CHECK(s.alpha.value * s.chi.chi >= n);
        CHECK(s.alpha.value >= 1);
        CHECK(verify_minor_embedding(g, s.eta.witness));
        CHECK(is_proper_colouring(g, s.chi.colours, s.chi.chi));
    }
}

TEST_CASE("minors never have a larger hadwiger number")
{
    for (auto & g : random_small_graphs(10, 60, 11)) {
        int eta = hadwiger_number(g).eta;
        auto edges = g.edges();
        for (std::size_t i = 0 ; i < edges.size() ; i += 3) {
            auto [u, v] = edges[i];
            CHECK(hadwiger_number(contract_edge(g, u, v)).eta <= eta);
            Graph h = g;
            h.remove_edge(u, v);
            CHECK(hadwiger_number(h).eta <= eta);
        }
    }
}

TEST_CASE("removing a connected dominating set lowers the hadwiger number")
{
    SeededRng rng(12);
    int checked = 0;
    while (checked < 150) {
        int n = 2 + static_cast<int>(rng.below(11));
        auto g = gnp_graph(n, 0.2 + 0.6 * rng.unit(), rng.next_u64());
        if (! is_connected(g))
            continue;
        ++checked;
        auto p = connected_dominating_pair(g);
        auto rest = delete_vertices(g, p.d).graph;
        CHECK(hadwiger_number(rest).eta <= hadwiger_number(g).eta - 1);
    }
}

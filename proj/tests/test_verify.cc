#include "support.hh"

#include <hadwiger/enumerate.hh>
#include <hadwiger/errors.hh>
#include <hadwiger/generate.hh>
#include <hadwiger/graph6.hh>
#include <hadwiger/peeling.hh>
#include <hadwiger/verify.hh>

#include <json.hpp>

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace hadwiger;

namespace
{
    auto record(const BoundReport & report, Check c) -> InequalityRecord
    {
        for (auto & r : report.checks)
            if (r.name == check_name(c))
                return r;
        FAIL("check missing from report");
        return {};
    }

    auto graphs_spec(std::vector<Graph> graphs) -> CorpusSpec
    {
        CorpusSpec spec;
        spec.source = CorpusSource::graphs;
        spec.graphs = std::move(graphs);
        return spec;
    }

    auto temp_file(const std::string & name, const std::string & contents) -> std::string
    {
        auto path = std::filesystem::temp_directory_path() / ("hadwiger_test_" + name);
        std::ofstream(path) << contents;
        return path.string();
    }
}

TEST_CASE("check names")
{
    CHECK(check_name(Check::theorem1) == "theorem1");
    CHECK(check_from_name("ks") == Check::ks);
    CHECK(parse_checks("all") == all_checks);
    CHECK(parse_checks("theorem1,ks") == ((1u << static_cast<int>(Check::theorem1)) | (1u << static_cast<int>(Check::ks))));
    CHECK_THROWS_AS(parse_checks("nope"), InvalidArgument);
    CHECK_THROWS_AS(parse_checks(""), InvalidArgument);
}

TEST_CASE("theorem1 fixtures")
{
    auto k5 = check_theorem1(complete_graph(5));
    CHECK(k5.applicable);
    CHECK(k5.lhs == 5);
    CHECK(k5.rhs == 5);
    CHECK(k5.slack == 0);

    auto k6 = check_theorem1(complete_graph(6));
    CHECK(k6.lhs == 7);
    CHECK(k6.slack == 0);

    auto p = check_theorem1(petersen_graph());
    CHECK(p.lhs == 35);
    CHECK(p.rhs == 15);
    CHECK(p.slack == 20);
    CHECK(p.pass);

    CHECK(! check_theorem1(cycle_graph(6)).applicable);
}

TEST_CASE("inequality report fixtures")
{
    auto k5 = check_inequalities(complete_graph(5));
    CHECK(k5.g6 == "D~{");
    auto weak = record(k5, Check::weak_hadwiger);
    CHECK(weak.lhs == 5);
    CHECK(weak.rhs == 5);
    CHECK(weak.pass);
    CHECK(! record(k5, Check::kpt_omega).applicable);
    CHECK(! record(k5, Check::kpt_alpha3).applicable);
    CHECK(! record(k5, Check::ks).applicable);

    auto c6 = check_inequalities(cycle_graph(6));
    CHECK(c6.values.alpha == 3);
    CHECK(c6.values.eta == 3);
    CHECK(c6.values.omega == 2);
    auto kpt = record(c6, Check::kpt_omega);
    CHECK(kpt.lhs == 15);
    CHECK(kpt.rhs == 8);
    auto ks = record(c6, Check::ks);
    CHECK(ks.applicable);
    CHECK(ks.lhs == 12);
    CHECK(ks.rhs == 6);
    auto t3 = record(c6, Check::t3_peeling);
    CHECK(t3.applicable);
    CHECK(t3.slack == 6);
    CHECK(! record(c6, Check::theorem1).applicable);

    auto p = check_inequalities(petersen_graph());
    for (auto & r : p.checks) {
        CAPTURE(r.name);
        CHECK(r.applicable);
        CHECK(r.pass);
        CHECK(r.pass == (r.lhs >= r.rhs));
        CHECK(r.slack == r.lhs - r.rhs);
    }
}

TEST_CASE("evaluate_check applicability")
{
    GraphInvariants v{ 7, 2, 3, 3, 4 };
    CHECK(evaluate_check(Check::kpt_alpha3, v).applicable == false);
    CHECK(evaluate_check(Check::t3_peeling, v).applicable);
    CHECK(evaluate_check(Check::theorem1, v).applicable == false);
    CHECK(evaluate_check(Check::weak_hadwiger, v).proven);
    CHECK(evaluate_check(Check::weak_hadwiger, GraphInvariants{ 7, 1, 6, 6, 6 }).proven == false);
    CHECK(evaluate_check(Check::duchet_meyniel, v).proven);
}

TEST_CASE("report json")
{
    auto doc = nlohmann::json::parse(report_json(check_inequalities(cycle_graph(6))));
    CHECK(doc["g6"] == write_graph6(cycle_graph(6)));
    CHECK(doc["n"] == 6);
    CHECK(doc["alpha"] == 3);
    CHECK(doc["omega"] == 2);
    CHECK(doc["chi"] == 2);
    CHECK(doc["eta"] == 3);
    CHECK(doc["checks"].size() == check_count);
    CHECK(doc["checks"][0]["name"] == "weak_hadwiger");
}

TEST_CASE("complete graphs are tight for theorem1")
{
    auto result = corpus_run(graphs_spec({ complete_graph(5), complete_graph(6), complete_graph(7) }),
            1u << static_cast<int>(Check::theorem1));
    REQUIRE(result.summary.size() == 1);
    CHECK(result.summary[0].applicable_count == 3);
    CHECK(result.summary[0].pass_count == 3);
    CHECK(result.summary[0].min_slack == 0);
    CHECK(result.summary[0].argmin_g6 == "D~{");
    for (auto & r : result.reports)
        CHECK(r.checks[0].slack == 0);
    CHECK(result.reports[2].checks[0].lhs == 9);
    CHECK(! result.solver_bug);
}

TEST_CASE("empty corpus")
{
    auto path = temp_file("empty.g6", "");
    CorpusSpec spec;
    spec.source = CorpusSource::file;
    spec.path = path;
    auto result = corpus_run(spec);
    CHECK(result.reports.empty());
    CHECK(result.summary.size() == check_count);
    for (auto & s : result.summary) {
        CHECK(s.applicable_count == 0);
        CHECK(! s.min_slack);
    }
    CHECK(summary_csv(result).starts_with("inequality,applicable_count,pass_count,min_slack,argmin_g6\n"));
    CHECK(summary_csv(result).find("theorem1,0,0,,\n") != std::string::npos);
    CHECK(corpus_jsonl(result).empty());
}

TEST_CASE("file corpus errors name the line")
{
    auto path = temp_file("bad.g6", "# ok\nD~{\nD~\n");
    CorpusSpec spec;
    spec.source = CorpusSource::file;
    spec.path = path;
    CHECK_THROWS_WITH_AS(corpus_run(spec), doctest::Contains("line 3"), ParseError);
    spec.path = path + ".missing";
    CHECK_THROWS_AS(corpus_run(spec), InvalidArgument);
}

TEST_CASE("exhaustive corpus up to seven vertices")
{
    CorpusSpec spec;
    spec.source = CorpusSource::exhaustive;
    spec.exhaustive_n_max = 7;
    spec.connected_only = true;
    auto result = corpus_run(spec);
    CHECK(result.reports.size() == 1 + 1 + 2 + 6 + 21 + 112 + 853);
    CHECK(! result.solver_bug);
    CHECK(! result.conjecture_failure);
    CHECK(result.failures.empty());
    for (auto & s : result.summary)
        CHECK(s.fail_count == 0);
}

TEST_CASE("corpus runs are deterministic across worker counts")
{
    CorpusSpec spec;
    spec.source = CorpusSource::generator;
    spec.generator = { GeneratorKind::gnp, 0, 0.5, 5 };
    spec.n_min = 6;
    spec.n_max = 10;
    spec.count_per_n = 8;
    auto one = corpus_run(spec, all_checks, {}, 1);
    auto four = corpus_run(spec, all_checks, {}, 4);
    CHECK(one.reports.size() == 40);
    CHECK(corpus_jsonl(one) == corpus_jsonl(four));
    CHECK(summary_csv(one) == summary_csv(four));
}

TEST_CASE("eta filters and limits")
{
    auto spec = graphs_spec({ complete_graph(3), complete_graph(5), complete_graph(7) });
    spec.eta_min = 4;
    spec.eta_max = 6;
    auto result = corpus_run(spec);
    CHECK(result.reports.size() == 1);
    CHECK(result.filtered == 2);

    Limits small;
    small.minor = 4;
    auto limited = corpus_run(graphs_spec({ complete_graph(3), complete_graph(5) }), all_checks, small);
    CHECK(limited.reports.size() == 1);
    CHECK(limited.skipped == 1);
}

TEST_CASE("generator corpus needs a seed for random families")
{
    CorpusSpec spec;
    spec.source = CorpusSource::generator;
    spec.generator = { GeneratorKind::gnp, 0, 0.5, {} };
    CHECK_THROWS_AS(expand_corpus(spec), InvalidArgument);
    spec.generator = { GeneratorKind::complete, 0, 0.0, {} };
    spec.n_min = 5;
    spec.n_max = 9;
    CHECK(expand_corpus(spec).size() == 5);
}

TEST_CASE("tightness search")
{
    SearchParams none;
    CHECK(tightness_search(none).empty());

    SearchParams complete;
    complete.family = GeneratorKind::complete;
    complete.n_min = 5;
    complete.n_max = 9;
    complete.budget = 120;
    complete.seed = 1;
    complete.restart_interval = 10;
    auto ranked = tightness_search(complete);
    REQUIRE(! ranked.empty());
    for (auto & e : ranked) {
        CHECK(e.slack == 0);
        CHECK(e.eta >= 5);
    }

    SearchParams gnp;
    gnp.n_min = gnp.n_max = 9;
    gnp.budget = 150;
    gnp.seed = 7;
    auto a = tightness_search(gnp);
    auto b = tightness_search(gnp);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0 ; i < a.size() ; ++i) {
        CHECK(a[i].g6 == b[i].g6);
        CHECK(a[i].slack == b[i].slack);
        if (i)
            CHECK(a[i - 1].slack <= a[i].slack);
        auto g = parse_graph6(a[i].g6);
        auto r = check_theorem1(g);
        CHECK(r.slack == a[i].slack);
    }
}

TEST_CASE("theorem1 bound dominates the earlier bounds on the grid")
{
    using R = Rational;
    for (int eta = 5 ; eta <= 10 ; ++eta) {
        int n_min = static_cast<int>(ceil_rational(R(2 * eta * eta, 5)));
        for (int n = n_min ; n <= 100 ; ++n) {
            R theorem1 = R(2 * n - 5, 4 * eta - 10) + R(1, 2);
            R dm = R(n, 2 * eta) + R(1, 2);
            R kpt = R(n, 2 * eta) + R(3, 4);
            R ks = R(n, 2 * eta) + R(1);
            CAPTURE(eta);
            CAPTURE(n);
            CHECK(theorem1 >= dm);
            CHECK(theorem1 >= kpt);
            CHECK(theorem1 >= ks);
        }
    }
}

TEST_CASE("eta at most six forces alpha above n/7")
{
    for (auto & g : enumerate_graphs_up_to(7, true)) {
        auto v = check_inequalities(g).values;
        if (v.eta <= 6)
            CHECK(7 * v.alpha > v.n);
    }
}

#include <hadwiger/enumerate.hh>
#include <hadwiger/errors.hh>
#include <hadwiger/graph6.hh>
#include <hadwiger/random.hh>
#include <hadwiger/verify.hh>

#include <json.hpp>

#include <atomic>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

using namespace hadwiger;

using std::optional;
using std::string;
using std::to_string;
using std::vector;

using nlohmann::json;

namespace
{
    constexpr const char * names[check_count] = {
        "weak_hadwiger", "duchet_meyniel", "kpt_omega", "kpt_alpha3", "ks", "t3_peeling", "theorem1"
    };
}

auto hadwiger::check_name(Check c) -> string
{
    return names[static_cast<int>(c)];
}

auto hadwiger::check_from_name(const string & name) -> Check
{
    for (int i = 0 ; i < check_count ; ++i)
        if (name == names[i])
            return static_cast<Check>(i);
    throw InvalidArgument("unknown check '" + name + "'");
}

auto hadwiger::parse_checks(const string & list) -> unsigned
{
    if (list == "all")
        return all_checks;
    unsigned result = 0;
    std::stringstream in(list);
    string item;
    while (std::getline(in, item, ','))
        result |= 1u << static_cast<int>(check_from_name(item));
    if (! result)
        throw InvalidArgument("empty check list");
    return result;
}

auto hadwiger::evaluate_check(Check c, const GraphInvariants & v) -> InequalityRecord
{
    long long n = v.n, alpha = v.alpha, omega = v.omega, eta = v.eta;
    InequalityRecord r;
    r.name = check_name(c);
    r.proven = true;
    switch (c) {
        case Check::weak_hadwiger:
            r.applicable = true;
            r.proven = eta <= 5;
            r.lhs = alpha * eta;
            r.rhs = n;
            break;
        case Check::duchet_meyniel:
            r.applicable = true;
            r.lhs = (2 * alpha - 1) * eta;
            r.rhs = n;
            break;
        case Check::kpt_omega:
            // false for complete graphs, so only asserted once alpha >= 2
            r.applicable = alpha >= 2;
            r.lhs = (2 * alpha - 1) * eta;
            r.rhs = n + omega;
            break;
        case Check::kpt_alpha3:
            r.applicable = alpha >= 3;
            r.lhs = (4 * alpha - 3) * eta;
            r.rhs = 2 * n;
            break;
        case Check::ks:
            r.applicable = alpha >= 3;
            r.lhs = (2 * alpha - 2) * eta;
            r.rhs = n;
            break;
        case Check::t3_peeling:
            r.applicable = eta >= 3;
            r.lhs = (2 * eta - 3) * (2 * alpha - 1);
            r.rhs = 2 * n - 3;
            break;
        case Check::theorem1:
            r.applicable = eta >= 5;
            r.lhs = (2 * alpha - 1) * (2 * eta - 5);
            r.rhs = 2 * n - 5;
            break;
    }
    r.pass = r.lhs >= r.rhs;
    r.slack = r.lhs - r.rhs;
    return r;
}

auto hadwiger::invariants_of(const ExactStats & stats) -> GraphInvariants
{
    return { stats.n, stats.alpha.value, stats.omega.value, stats.chi.chi, stats.eta.eta };
}

auto hadwiger::check_theorem1(const Graph & g, const Limits & limits) -> InequalityRecord
{
    GraphInvariants values;
    values.n = g.order();
    values.alpha = independence_number(g, limits).value;
    values.eta = hadwiger_number(g, limits).eta;
    return evaluate_check(Check::theorem1, values);
}

auto hadwiger::check_inequalities(const Graph & g, const Limits & limits, unsigned checks) -> BoundReport
{
    BoundReport report;
    report.g6 = g.order() <= graph6_max_order ? write_graph6(g) : string();
    report.values = invariants_of(exact_stats(g, limits));
    for (int i = 0 ; i < check_count ; ++i)
        if (checks & (1u << i))
            report.checks.push_back(evaluate_check(static_cast<Check>(i), report.values));
    return report;
}

auto hadwiger::report_json(const BoundReport & report) -> string
{
    json checks = json::array();
    for (auto & r : report.checks)
        checks.push_back({
                { "name", r.name }, { "applicable", r.applicable }, { "proven", r.proven },
                { "lhs", r.lhs }, { "rhs", r.rhs }, { "pass", r.pass }, { "slack", r.slack } });

    json doc = {
        { "g6", report.g6 },
        { "n", report.values.n },
        { "alpha", report.values.alpha },
        { "omega", report.values.omega },
        { "chi", report.values.chi },
        { "eta", report.values.eta },
        { "checks", checks }
    };
    return doc.dump();
}

auto hadwiger::expand_corpus(const CorpusSpec & spec) -> vector<Graph>
{
    vector<Graph> result;
    switch (spec.source) {
        case CorpusSource::graphs:
            result = spec.graphs;
            break;

        case CorpusSource::file: {
            std::ifstream in(spec.path);
            if (! in)
                throw InvalidArgument("cannot open graph6 file '" + spec.path + "'");
            for (auto & line : read_graph6_lines(in)) {
                try {
                    result.push_back(parse_graph6(line.text));
                }
                catch (const ParseError & e) {
                    throw ParseError(spec.path + " line " + to_string(line.line_number) + ": " + e.what(), e.offset());
                }
            }
            break;
        }

        case CorpusSource::generator: {
            if (spec.n_min < 0 || spec.n_max < spec.n_min)
                throw InvalidArgument("generator order range is empty or negative");
            if (spec.generator.kind == GeneratorKind::petersen) {
                result.push_back(petersen_graph());
                break;
            }
            optional<SeededRng> master;
            if (spec.generator.kind == GeneratorKind::gnp) {
                if (! spec.generator.seed)
                    throw InvalidArgument("random corpus needs an explicit seed");
                master.emplace(*spec.generator.seed);
            }
            for (int n = spec.n_min ; n <= spec.n_max ; ++n) {
                int copies = master ? spec.count_per_n : 1;
                for (int i = 0 ; i < copies ; ++i) {
                    GeneratorParams params = spec.generator;
                    params.n = n;
                    if (master)
                        params.seed = master->next_u64();
                    result.push_back(generate(params));
                }
            }
            break;
        }

        case CorpusSource::exhaustive:
            result = enumerate_graphs_up_to(spec.exhaustive_n_max, spec.connected_only);
            break;
    }

    if (spec.connected_only)
        std::erase_if(result, [] (const Graph & g) { return ! is_connected(g); });
    return result;
}

auto hadwiger::corpus_run(const CorpusSpec & spec, unsigned checks, const Limits & limits, int jobs) -> CorpusResult
{
    auto graphs = expand_corpus(spec);

    enum class Outcome { reported, skipped, filtered };
    struct Slot { Outcome outcome = Outcome::skipped; BoundReport report; };
    vector<Slot> slots(graphs.size());

    std::atomic<std::size_t> next{ 0 };
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto work = [&] {
        for (std::size_t i = next++ ; i < graphs.size() ; i = next++) {
            try {
                auto report = check_inequalities(graphs[i], limits, checks);
                if ((spec.eta_min && report.values.eta < *spec.eta_min) || (spec.eta_max && report.values.eta > *spec.eta_max))
                    slots[i].outcome = Outcome::filtered;
                else {
                    slots[i].outcome = Outcome::reported;
                    slots[i].report = std::move(report);
                }
            }
            catch (const LimitExceeded &) {
                slots[i].outcome = Outcome::skipped;
            }
            catch (...) {
                std::lock_guard<std::mutex> guard(failure_mutex);
                if (! failure)
                    failure = std::current_exception();
            }
        }
    };

    int workers = std::max(1, jobs);
    if (workers == 1)
        work();
    else {
        vector<std::thread> threads;
        for (int w = 0 ; w < workers ; ++w)
            threads.emplace_back(work);
        for (auto & t : threads)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);

    CorpusResult result;
    for (int i = 0 ; i < check_count ; ++i)
        if (checks & (1u << i))
            {
            CheckSummary summary;
            summary.name = check_name(static_cast<Check>(i));
            result.summary.push_back(summary);
        }

    for (auto & slot : slots) {
        if (slot.outcome == Outcome::skipped) {
            ++result.skipped;
            continue;
        }
        if (slot.outcome == Outcome::filtered) {
            ++result.filtered;
            continue;
        }
        auto & report = slot.report;
        for (std::size_t c = 0 ; c < report.checks.size() ; ++c) {
            auto & record = report.checks[c];
            auto & summary = result.summary[c];
            if (! record.applicable)
                continue;
            ++summary.applicable_count;
            if (record.pass)
                ++summary.pass_count;
            else {
                ++summary.fail_count;
                (record.proven ? result.solver_bug : result.conjecture_failure) = true;
                result.failures.push_back(record.name + " fails on " + report.g6 + ": " + to_string(record.lhs) + " < " + to_string(record.rhs));
            }
            if (! summary.min_slack || record.slack < *summary.min_slack) {
                summary.min_slack = record.slack;
                summary.argmin_g6 = report.g6;
            }
        }
        result.reports.push_back(std::move(report));
    }
    return result;
}

auto hadwiger::corpus_jsonl(const CorpusResult & result) -> string
{
    string out;
    for (auto & report : result.reports) {
        out += report_json(report);
        out += '\n';
    }
    return out;
}

auto hadwiger::summary_csv(const CorpusResult & result) -> string
{
    string out = "inequality,applicable_count,pass_count,min_slack,argmin_g6\n";
    for (auto & s : result.summary)
        out += s.name + "," + to_string(s.applicable_count) + "," + to_string(s.pass_count) + ","
            + (s.min_slack ? to_string(*s.min_slack) : string()) + "," + s.argmin_g6 + "\n";
    return out;
}

// Command-line front end. Talks to the library only through hadwiger.h.

#include <hadwiger/hadwiger.h>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using std::cerr;
using std::cout;
using std::optional;
using std::string;
using std::vector;

namespace
{
    template <typename T_, void (* Free_)(T_ *)>
    struct Deleter
    {
        void operator() (T_ * p) const { Free_(p); }
    };

    using GraphPtr = std::unique_ptr<hw_graph, Deleter<hw_graph, hw_graph_free>>;
    using StatsPtr = std::unique_ptr<hw_stats, Deleter<hw_stats, hw_stats_free>>;
    using PeelPtr = std::unique_ptr<hw_peel, Deleter<hw_peel, hw_peel_free>>;
    using CorpusPtr = std::unique_ptr<hw_corpus, Deleter<hw_corpus, hw_corpus_free>>;
    using SearchPtr = std::unique_ptr<hw_search, Deleter<hw_search, hw_search_free>>;
    using ListPtr = std::unique_ptr<hw_graph_list, Deleter<hw_graph_list, hw_graph_list_free>>;

    /// Failure carrying the exit code it should produce.
    struct Exit
    {
        int code;
        string message;
    };

    void check(hw_status status, const string & context = "")
    {
        if (status != HW_OK) {
            int code = status == HW_ERR_PRECONDITION ? static_cast<int>(HW_ERR_LIMIT) : static_cast<int>(status);
            throw Exit{ code, (context.empty() ? "" : context + ": ") + hw_last_error() };
        }
    }

    struct LimitOptions
    {
        hw_limits limits = hw_default_limits();

        void add_to(CLI::App * app)
        {
            app->add_option("--limit-alpha", limits.alpha, "largest n for the exact independence and clique solvers")->check(CLI::PositiveNumber);
            app->add_option("--limit-alpha-bruteforce", limits.alpha_bruteforce, "largest n for the brute-force independence oracle")->check(CLI::PositiveNumber);
            app->add_option("--limit-chi", limits.chi, "largest n for the chromatic number")->check(CLI::PositiveNumber);
            app->add_option("--limit-minor", limits.minor, "largest n for clique-minor search")->check(CLI::PositiveNumber);
        }
    };

    struct InputOptions
    {
        string path;
        string g6;

        void add_to(CLI::App * app)
        {
            auto in = app->add_option("--in", path, "graph6 file, one graph per line, '#' comments");
            auto text = app->add_option("--g6", g6, "a single graph6 string");
            in->excludes(text);
        }

        struct Loaded
        {
            string label;
            GraphPtr graph;
        };

        auto load() const -> vector<Loaded>
        {
            vector<Loaded> result;
            if (! g6.empty()) {
                hw_graph * g = nullptr;
                check(hw_graph_parse_graph6(g6.c_str(), &g), "--g6");
                result.push_back({ "--g6", GraphPtr(g) });
                return result;
            }
            if (path.empty())
                throw Exit{ HW_ERR_USAGE, "one of --in or --g6 is required" };

            std::ifstream in(path);
            if (! in)
                throw Exit{ HW_ERR_USAGE, "cannot open '" + path + "'" };
            string line;
            for (int number = 1 ; std::getline(in, line) ; ++number) {
                if (! line.empty() && line.back() == '\r')
                    line.pop_back();
                if (line.empty() || line[0] == '#')
                    continue;
                hw_graph * g = nullptr;
                check(hw_graph_parse_graph6(line.c_str(), &g), path + ":" + std::to_string(number));
                result.push_back({ path + ":" + std::to_string(number), GraphPtr(g) });
            }
            return result;
        }
    };

    auto format_set(const int * members, size_t count) -> string
    {
        string out = "{";
        for (size_t i = 0 ; i < count ; ++i) {
            if (i)
                out += ",";
            out += std::to_string(members[i]);
        }
        return out + "}";
    }

    auto graph_name(const hw_graph * g) -> string
    {
        auto text = hw_graph_graph6(g);
        return text ? text : "(n=" + std::to_string(hw_graph_order(g)) + ")";
    }

    void write_file(const string & path, const string & contents)
    {
        std::ofstream out(path, std::ios::binary);
        if (! out)
            throw Exit{ HW_ERR_USAGE, "cannot write '" + path + "'" };
        out << contents;
    }

    auto generator(const string & name) -> hw_generator
    {
        hw_generator kind;
        check(hw_generator_from_name(name.c_str(), &kind), "--family");
        return kind;
    }

    auto run_compute(const InputOptions & input, const LimitOptions & limits, const string & out_path) -> int
    {
        string machine;
        for (auto & [label, graph] : input.load()) {
            hw_stats * raw = nullptr;
            check(hw_compute_stats(graph.get(), &limits.limits, &raw), label);
            StatsPtr stats(raw);

            const int * members = nullptr;
            cout << graph_name(graph.get()) << " n=" << hw_graph_order(graph.get())
                << " alpha=" << hw_stats_alpha(raw) << " omega=" << hw_stats_omega(raw)
                << " chi=" << hw_stats_chi(raw) << " eta=" << hw_stats_eta(raw) << "\n";

            size_t count = hw_stats_alpha_witness(raw, &members);
            cout << "  independent set " << format_set(members, count) << "\n";
            count = hw_stats_omega_witness(raw, &members);
            cout << "  clique " << format_set(members, count) << "\n";
            count = hw_stats_colouring(raw, &members);
            cout << "  colouring [";
            for (size_t i = 0 ; i < count ; ++i)
                cout << (i ? "," : "") << members[i];
            cout << "]\n  branch sets";
            for (size_t b = 0 ; b < hw_stats_branch_set_count(raw) ; ++b) {
                count = hw_stats_branch_set(raw, b, &members);
                cout << " " << format_set(members, count);
            }
            cout << "\n";

            machine += hw_stats_json(raw);
            machine += "\n";
        }
        if (! out_path.empty())
            write_file(out_path, machine);
        return 0;
    }

    auto run_peel(const InputOptions & input, const LimitOptions & limits, int t, const optional<string> & p_text,
            const string & base_name, const string & out_path) -> int
    {
        hw_peel_params params{ t, t, 1, HW_BASE_T3 };
        if (p_text)
            check(hw_parse_rational(p_text->c_str(), &params.p_num, &params.p_den), "--p");
        if (base_name == "oracle")
            params.base = HW_BASE_ORACLE;
        else if (base_name != "t3")
            throw Exit{ HW_ERR_USAGE, "--base must be t3 or oracle" };

        string machine;
        bool violated = false;
        for (auto & [label, graph] : input.load()) {
            hw_peel * raw = nullptr;
            check(hw_peel_run(graph.get(), &params, &limits.limits, &raw), label);
            PeelPtr peel(raw);

            const int * members = nullptr;
            size_t size = hw_peel_set(raw, &members);
            int chosen = hw_peel_chosen(raw);
            cout << graph_name(graph.get()) << " n=" << hw_graph_order(graph.get()) << " size=" << size
                << " levels=" << hw_peel_level_count(raw)
                << " chosen=" << (chosen == -1 ? string("base") : "level" + std::to_string(chosen));
            if (hw_peel_eta(raw) >= 0)
                cout << " eta=" << hw_peel_eta(raw);
            if (hw_peel_has_bound(raw))
                cout << " bound=" << hw_peel_bound_text(raw) << " ceiling=" << hw_peel_bound_ceiling(raw);
            cout << "\n  set " << format_set(members, size) << "\n";

            if (! hw_peel_certificate_valid(graph.get(), raw))
                throw Exit{ HW_ERR_SOLVER_BUG, label + ": peeling certificate failed validation" };
            if (! hw_peel_meets_bound(raw)) {
                cerr << "BOUND VIOLATION: " << label << " returned " << size << " < " << hw_peel_bound_ceiling(raw) << "\n";
                violated = true;
            }
            machine += hw_peel_certificate_json(raw);
            machine += "\n";
        }
        if (! out_path.empty())
            write_file(out_path, machine);
        return violated ? HW_ERR_BOUND : 0;
    }

    struct CorpusOptions
    {
        string path;
        int exhaustive_n = -1;
        string family;
        int n_min = 1, n_max = 1, count = 1;
        double probability = 0.5;
        optional<std::uint64_t> seed;
        bool connected = false;
        int eta_min = -1, eta_max = -1;
    };

    auto run_verify(const CorpusOptions & c, const LimitOptions & limits, const string & checks_text, int jobs,
            const string & out_path, const string & summary_path) -> int
    {
        hw_corpus_spec spec = hw_default_corpus_spec();
        int sources = (! c.path.empty()) + (c.exhaustive_n >= 0) + (! c.family.empty());
        if (sources != 1)
            throw Exit{ HW_ERR_USAGE, "give exactly one of --in, --exhaustive-n or --family" };
        if (! c.path.empty()) {
            spec.source = HW_CORPUS_FILE;
            spec.path = c.path.c_str();
        }
        else if (c.exhaustive_n >= 0) {
            spec.source = HW_CORPUS_EXHAUSTIVE;
            spec.exhaustive_n_max = c.exhaustive_n;
        }
        else {
            spec.source = HW_CORPUS_GENERATOR;
            spec.generator = generator(c.family);
            if (spec.generator == HW_GEN_GNP && ! c.seed)
                throw Exit{ HW_ERR_USAGE, "--seed is required for random families" };
            spec.seed = c.seed.value_or(0);
            spec.n_min = c.n_min;
            spec.n_max = c.n_max;
            spec.count_per_n = c.count;
            spec.probability = c.probability;
        }
        spec.connected_only = c.connected;
        spec.eta_min = c.eta_min;
        spec.eta_max = c.eta_max;

        unsigned checks = 0;
        check(hw_parse_checks(checks_text.c_str(), &checks), "--checks");

        hw_corpus * raw = nullptr;
        check(hw_corpus_run(&spec, checks, &limits.limits, jobs, &raw));
        CorpusPtr corpus(raw);

        cout << "graphs checked: " << hw_corpus_report_count(raw) << ", skipped (limits): " << hw_corpus_skipped(raw)
            << ", filtered: " << hw_corpus_filtered(raw) << "\n";
        cout << "check            applicable   pass   fail  min_slack  argmin\n";
        for (size_t i = 0 ; i < hw_corpus_summary_count(raw) ; ++i) {
            hw_check_summary s;
            check(hw_corpus_summary(raw, i, &s));
            char line[256];
            std::snprintf(line, sizeof(line), "%-16s %10ld %6ld %6ld  %9s  %s\n", s.name, s.applicable_count, s.pass_count,
                    s.fail_count, s.has_min_slack ? std::to_string(s.min_slack).c_str() : "-", s.argmin_g6);
            cout << line;
        }

        if (! out_path.empty())
            write_file(out_path, hw_corpus_jsonl(raw));
        if (! summary_path.empty())
            write_file(summary_path, hw_corpus_summary_csv(raw));

        for (size_t i = 0 ; i < hw_corpus_failure_count(raw) ; ++i)
            cerr << "  " << hw_corpus_failure(raw, i) << "\n";
        if (hw_corpus_solver_bug(raw)) {
            cerr << "SOLVER-BUG: a proven inequality failed; the exact oracles are wrong\n";
            return HW_ERR_SOLVER_BUG;
        }
        if (hw_corpus_conjecture_failure(raw)) {
            cerr << "SOLVER-BUG: alpha * eta >= n failed at eta >= 6; suspect the oracles before the conjecture\n";
            return HW_ERR_SOLVER_BUG;
        }
        return 0;
    }

    auto run_search(const string & family, optional<int> n_min, optional<int> n_max, double probability, long budget,
            optional<std::uint64_t> seed, int top, long restart, const LimitOptions & limits, const string & out_path) -> int
    {
        hw_search_params params = hw_default_search_params();
        params.family = generator(family);
        if (params.family == HW_GEN_COMPLETE) {
            params.n_min = 5;
            params.n_max = 9;
        }
        if (n_min)
            params.n_min = *n_min;
        if (n_max)
            params.n_max = *n_max;
        if (n_min && ! n_max)
            params.n_max = std::max(params.n_max, *n_min);
        params.probability = probability;
        params.budget = budget;
        params.top = top;
        params.restart_interval = restart;
        if (budget > 0 && ! seed)
            throw Exit{ HW_ERR_USAGE, "--seed is required when --budget is positive" };
        params.seed = seed.value_or(0);

        hw_search * raw = nullptr;
        check(hw_search_run(&params, &limits.limits, &raw));
        SearchPtr search(raw);

        string machine;
        cout << "rank slack  n alpha eta g6\n";
        for (size_t i = 0 ; i < hw_search_count(raw) ; ++i) {
            const char * g6 = nullptr;
            long long slack = 0;
            int n = 0, alpha = 0, eta = 0;
            check(hw_search_entry(raw, i, &g6, &slack, &n, &alpha, &eta));
            char line[256];
            std::snprintf(line, sizeof(line), "%4zu %5lld %2d %5d %3d %s\n", i + 1, slack, n, alpha, eta, g6);
            cout << line;
            machine += std::string(g6) + "\t" + std::to_string(slack) + "\t" + std::to_string(n) + "\t"
                + std::to_string(alpha) + "\t" + std::to_string(eta) + "\n";
        }
        if (! out_path.empty())
            write_file(out_path, machine);
        return 0;
    }

    auto emit_graphs(const vector<string> & lines, const string & out_path) -> int
    {
        string text;
        for (auto & l : lines)
            text += l + "\n";
        if (out_path.empty())
            cout << text;
        else
            write_file(out_path, text);
        return 0;
    }

    auto run_generate(const string & family, int n_min, optional<int> n_max, double probability, optional<std::uint64_t> seed,
            int count, const string & out_path) -> int
    {
        auto kind = generator(family);
        if (kind == HW_GEN_GNP && ! seed)
            throw Exit{ HW_ERR_USAGE, "--seed is required for random families" };

        vector<string> lines;
        std::uint64_t next_seed = seed.value_or(0);
        for (int n = n_min ; n <= n_max.value_or(n_min) ; ++n)
            for (int i = 0 ; i < (kind == HW_GEN_GNP ? count : 1) ; ++i) {
                hw_graph * raw = nullptr;
                check(hw_graph_generate(kind, n, probability, next_seed++, &raw));
                GraphPtr g(raw);
                auto text = hw_graph_graph6(raw);
                if (! text)
                    throw Exit{ HW_ERR_USAGE, "graph too large for graph6 output" };
                lines.emplace_back(text);
                if (kind == HW_GEN_PETERSEN)
                    return emit_graphs(lines, out_path);
            }
        return emit_graphs(lines, out_path);
    }

    auto run_enumerate(int n_max, bool connected, const string & out_path) -> int
    {
        hw_graph_list * raw = nullptr;
        check(hw_enumerate_graphs(n_max, connected ? 1 : 0, &raw));
        ListPtr list(raw);
        vector<string> lines;
        for (size_t i = 0 ; i < hw_graph_list_size(raw) ; ++i)
            lines.emplace_back(hw_graph_graph6(hw_graph_list_at(raw, i)));
        return emit_graphs(lines, out_path);
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{ "Independent sets, connected dominating sets and clique minors on small graphs" };
    app.require_subcommand(1);
    app.set_version_flag("--version", string(hw_version()));

    auto compute = app.add_subcommand("compute", "exact alpha, omega, chi and eta with witnesses");
    InputOptions compute_input;
    LimitOptions compute_limits;
    string compute_out;
    compute_input.add_to(compute);
    compute_limits.add_to(compute);
    compute->add_option("--out", compute_out, "write one JSON object per graph");

    auto peel = app.add_subcommand("peel", "peel connected dominating sets down to a base case");
    InputOptions peel_input;
    LimitOptions peel_limits;
    int peel_t = 0;
    optional<string> peel_p;
    string peel_base = "t3", peel_out;
    peel_input.add_to(peel);
    peel_limits.add_to(peel);
    peel->add_option("--t", peel_t, "base-case threshold")->required()->check(CLI::PositiveNumber);
    peel->add_option("--p", peel_p, "base-case ratio p >= t, as an integer or a/b (default: t)");
    peel->add_option("--base", peel_base, "base solver: t3 or oracle")->check(CLI::IsMember({ "t3", "oracle" }));
    peel->add_option("--out", peel_out, "write one certificate JSON object per graph");

    auto verify = app.add_subcommand("verify", "check the inequalities over a corpus");
    CorpusOptions corpus;
    LimitOptions verify_limits;
    string verify_checks = "all", verify_out, verify_summary;
    int verify_jobs = 1;
    verify->add_option("--in", corpus.path, "graph6 corpus file");
    verify->add_option("--exhaustive-n", corpus.exhaustive_n, "all graphs up to isomorphism on 1..N vertices (N <= 10)");
    verify->add_option("--family", corpus.family, "generator family: complete, cycle, path, petersen, gnp");
    verify->add_option("--n-min", corpus.n_min, "smallest generated order");
    verify->add_option("--n-max", corpus.n_max, "largest generated order");
    verify->add_option("--count", corpus.count, "random graphs per order")->check(CLI::PositiveNumber);
    verify->add_option("--p", corpus.probability, "edge probability")->check(CLI::Range(0.0, 1.0));
    verify->add_option("--seed", corpus.seed, "master seed for random families");
    verify->add_flag("--connected", corpus.connected, "keep connected graphs only");
    verify->add_option("--eta-min", corpus.eta_min, "drop graphs with smaller eta");
    verify->add_option("--eta-max", corpus.eta_max, "drop graphs with larger eta");
    verify->add_option("--checks", verify_checks, "'all' or a comma-separated list of check names");
    verify->add_option("--jobs", verify_jobs, "worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--out", verify_out, "JSON-lines report");
    verify->add_option("--summary", verify_summary, "CSV summary");
    verify_limits.add_to(verify);

    auto search = app.add_subcommand("search", "local search for graphs where the eta >= 5 bound is tight");
    string search_family = "gnp", search_out;
    optional<int> search_n, search_n_min, search_n_max;
    double search_p = 0.5;
    long search_budget = 0, search_restart = 50;
    optional<std::uint64_t> search_seed;
    int search_top = 10;
    LimitOptions search_limits;
    search->add_option("--family", search_family, "start family: complete, cycle, path, petersen, gnp");
    search->add_option("--n", search_n, "order of start graphs (sets both bounds)");
    search->add_option("--n-min", search_n_min, "smallest start order");
    search->add_option("--n-max", search_n_max, "largest start order");
    search->add_option("--p", search_p, "edge probability for gnp starts")->check(CLI::Range(0.0, 1.0));
    search->add_option("--budget", search_budget, "iterations")->check(CLI::NonNegativeNumber);
    search->add_option("--seed", search_seed, "seed (required when budget > 0)");
    search->add_option("--top", search_top, "entries to report")->check(CLI::NonNegativeNumber);
    search->add_option("--restart", search_restart, "iterations between restarts")->check(CLI::PositiveNumber);
    search->add_option("--out", search_out, "tab-separated g6, slack, n, alpha, eta");
    search_limits.add_to(search);

    auto gen = app.add_subcommand("generate", "write generated graphs as graph6");
    string gen_family, gen_out;
    int gen_n = 0, gen_count = 1;
    optional<int> gen_n_max;
    double gen_p = 0.5;
    optional<std::uint64_t> gen_seed;
    gen->add_option("--family", gen_family, "complete, cycle, path, petersen, gnp")->required();
    gen->add_option("--n", gen_n, "order (smallest order with --n-max)");
    gen->add_option("--n-max", gen_n_max, "largest order");
    gen->add_option("--p", gen_p, "edge probability")->check(CLI::Range(0.0, 1.0));
    gen->add_option("--seed", gen_seed, "first seed; graph i uses seed + i");
    gen->add_option("--count", gen_count, "random graphs per order")->check(CLI::PositiveNumber);
    gen->add_option("--out", gen_out, "output file (default: standard output)");

    auto enumerate = app.add_subcommand("enumerate", "write all graphs up to isomorphism as graph6");
    int enum_n = 0;
    bool enum_connected = false;
    string enum_out;
    enumerate->add_option("--n-max", enum_n, "largest order (<= 10)")->required();
    enumerate->add_flag("--connected", enum_connected, "connected graphs only");
    enumerate->add_option("--out", enum_out, "output file (default: standard output)");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::CallForVersion & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return HW_ERR_USAGE;
    }

    try {
        if (*compute)
            return run_compute(compute_input, compute_limits, compute_out);
        if (*peel)
            return run_peel(peel_input, peel_limits, peel_t, peel_p, peel_base, peel_out);
        if (*verify)
            return run_verify(corpus, verify_limits, verify_checks, verify_jobs, verify_out, verify_summary);
        if (*search) {
            if (search_n) {
                search_n_min = search_n;
                search_n_max = search_n;
            }
            return run_search(search_family, search_n_min, search_n_max, search_p, search_budget, search_seed, search_top,
                    search_restart, search_limits, search_out);
        }
        if (*gen)
            return run_generate(gen_family, gen_n, gen_n_max, gen_p, gen_seed, gen_count, gen_out);
        if (*enumerate)
            return run_enumerate(enum_n, enum_connected, enum_out);
    }
    catch (const Exit & e) {
        cerr << "error: " << e.message << "\n";
        return e.code;
    }
    return HW_ERR_USAGE;
}

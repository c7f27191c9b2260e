#ifndef HADWIGER_VERIFY_HH
#define HADWIGER_VERIFY_HH 1

#include <hadwiger/exact.hh>
#include <hadwiger/generate.hh>
#include <hadwiger/graph.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hadwiger
{
    /// The inequalities relating n, alpha, omega and eta that the harness
    /// evaluates. Hypotheses:
    ///
    ///   weak_hadwiger   alpha * eta >= n                      always
    ///   duchet_meyniel  (2 alpha - 1) eta >= n                always
    ///   kpt_omega       (2 alpha - 1) eta >= n + omega        alpha >= 2 (complete graphs violate it)
    ///   kpt_alpha3      (4 alpha - 3) eta >= 2n               alpha >= 3
    ///   ks              (2 alpha - 2) eta >= n                alpha >= 3
    ///   t3_peeling      (2 eta - 3)(2 alpha - 1) >= 2n - 3    eta >= 3
    ///   theorem1        (2 alpha - 1)(2 eta - 5) >= 2n - 5    eta >= 5
    ///
    /// weak_hadwiger follows from Hadwiger's conjecture, so it only counts
    /// as proven for eta <= 5.
    enum class Check
    {
        weak_hadwiger,
        duchet_meyniel,
        kpt_omega,
        kpt_alpha3,
        ks,
        t3_peeling,
        theorem1
    };

    inline constexpr int check_count = 7;
    inline constexpr unsigned all_checks = (1u << check_count) - 1;

    auto check_name(Check c) -> std::string;
    auto check_from_name(const std::string & name) -> Check;

    /// "all" or a comma-separated list of check names.
    auto parse_checks(const std::string & list) -> unsigned;

    struct GraphInvariants
    {
        int n = 0;
        int alpha = 0;
        int omega = 0;
        int chi = 0;
        int eta = 0;
    };

    struct InequalityRecord
    {
        std::string name;
        bool applicable = false;
        bool proven = false;
        long long lhs = 0;
        long long rhs = 0;
        bool pass = false;
        long long slack = 0;
    };

    auto evaluate_check(Check c, const GraphInvariants & values) -> InequalityRecord;

    auto invariants_of(const ExactStats & stats) -> GraphInvariants;

    auto check_theorem1(const Graph & g, const Limits & limits = {}) -> InequalityRecord;

    struct BoundReport
    {
        std::string g6;
        GraphInvariants values;
        std::vector<InequalityRecord> checks;
    };

    auto check_inequalities(const Graph & g, const Limits & limits = {}, unsigned checks = all_checks) -> BoundReport;

    /// One JSON object: g6, n, alpha, omega, chi, eta, checks[].
    auto report_json(const BoundReport & report) -> std::string;

    enum class CorpusSource
    {
        graphs,
        file,
        generator,
        exhaustive
    };

    struct CorpusSpec
    {
        CorpusSource source = CorpusSource::graphs;

        std::vector<Graph> graphs;

        std::string path;

        /// For generator sources: kind, probability and the master seed.
        /// Each graph of a random family takes the next 64-bit draw of the
        /// master stream as its own seed.
        GeneratorParams generator;
        int n_min = 1;
        int n_max = 1;
        int count_per_n = 1;

        int exhaustive_n_max = 0;

        bool connected_only = false;
        std::optional<int> eta_min;
        std::optional<int> eta_max;
    };

    /// Deterministic expansion before the eta filters, which need the oracles.
    auto expand_corpus(const CorpusSpec & spec) -> std::vector<Graph>;

    struct CheckSummary
    {
        std::string name;
        long applicable_count = 0;
        long pass_count = 0;
        long fail_count = 0;
        std::optional<long long> min_slack;
        std::string argmin_g6;
    };

    struct CorpusResult
    {
        std::vector<BoundReport> reports;
        std::vector<CheckSummary> summary;
        long skipped = 0;
        long filtered = 0;

        /// A proven inequality failed: the oracles are wrong.
        bool solver_bug = false;

        /// weak_hadwiger failed with eta >= 6.
        bool conjecture_failure = false;

        std::vector<std::string> failures;
    };

    /// Reports come back in corpus order regardless of the worker count.
    auto corpus_run(const CorpusSpec & spec, unsigned checks = all_checks, const Limits & limits = {}, int jobs = 1) -> CorpusResult;

    auto corpus_jsonl(const CorpusResult & result) -> std::string;

    /// Header inequality,applicable_count,pass_count,min_slack,argmin_g6.
    auto summary_csv(const CorpusResult & result) -> std::string;

    struct SearchParams
    {
        GeneratorKind family = GeneratorKind::gnp;
        int n_min = 9;
        int n_max = 9;
        double probability = 0.5;
        long budget = 0;
        std::uint64_t seed = 0;
        int top = 10;

        /// Iterations between random restarts.
        long restart_interval = 50;
    };

    struct SearchEntry
    {
        std::string g6;
        int n = 0;
        int alpha = 0;
        int eta = 0;
        long long slack = 0;
    };

    /// Local search over single edge toggles. A move is kept when it does
    /// not worsen the score (eta < 5 ranks below every eta >= 5 graph,
    /// then by 5 - eta; otherwise by theorem1 slack). Every kept graph with
    /// eta >= 5 is recorded up to isomorphism; the best `top` are returned
    /// ordered by slack, order, then graph6 string.
    auto tightness_search(const SearchParams & params, const Limits & limits = {}) -> std::vector<SearchEntry>;
}

#endif

#ifndef HADWIGER_PEELING_HH
#define HADWIGER_PEELING_HH 1

#include <hadwiger/dominating.hh>
#include <hadwiger/exact.hh>
#include <hadwiger/graph.hh>

#include <boost/rational.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hadwiger
{
    using Rational = boost::rational<long long>;

    auto ceil_rational(const Rational & r) -> long long;
    auto rational_to_string(const Rational & r) -> std::string;

    /// Parses "a" or "a/b".
    auto parse_rational(const std::string & text) -> Rational;

    /// Base-case threshold t and ratio p, with p >= t >= 1: the base case
    /// promises p * alpha(G) >= n(G) whenever eta(G) <= t.
    struct BoundParams
    {
        int t = 3;
        Rational p{ 3 };

        static auto make(int t, Rational p) -> BoundParams;
    };

    /// (2n - p) / (4 eta + 2p - 4t) + 1/2, exactly. Requires eta >= t.
    auto guaranteed_bound(long n, int eta, const BoundParams & params) -> Rational;

    struct BoundCheck
    {
        long long lhs = 0;
        long long rhs = 0;
        bool pass = false;
        long long slack = 0;
    };

    /// (2 eta - t)(2 alpha - 1) >= 2n - t in integers. Requires eta >= t.
    auto threshold_bound(long n, int eta, int t, int alpha) -> BoundCheck;

    /// Largest class of a greedy colouring in reverse degeneracy order.
    /// Requires degeneracy at most 2, so at most three colours are used.
    auto base_independent_set_t3(const Graph & g) -> VertexSet;

    /// A maximum independent set, asserting t * alpha >= n. Unless trusted,
    /// checks eta(g) <= t with the exact oracle first.
    auto base_independent_set_oracle(const Graph & g, int t, const Limits & limits = {}, bool trust_precondition = false) -> VertexSet;

    enum class BaseSolver
    {
        t3,
        oracle
    };

    auto base_solver_name(BaseSolver base) -> std::string;
    auto base_solver_from_name(const std::string & name) -> BaseSolver;

    /// One peeling round, all sets in the original graph's labels.
    struct PeelLevel
    {
        VertexSet vertices;
        std::vector<VertexSet> components;
        std::vector<DominatingPair> pairs;

        /// Union of the s-sets of all pairs.
        VertexSet candidate;
    };

    struct PeelingCertificate
    {
        BoundParams params;
        BaseSolver base = BaseSolver::t3;
        std::vector<PeelLevel> levels;
        VertexSet residual;
        VertexSet base_witness;

        /// Index into levels, or -1 for the base witness.
        int chosen = -1;
    };

    struct PeelResult
    {
        VertexSet set;
        PeelingCertificate certificate;
    };

    /// Peels connected dominating sets component by component until the
    /// base solver applies, then returns the largest of the per-level
    /// s-unions and the base solver's set. Ties go to the earliest level.
    auto peel_independent_set(const Graph & g, const BoundParams & params, BaseSolver base, const Limits & limits = {}) -> PeelResult;

    auto verify_peeling_certificate(const Graph & g, const PeelResult & result) -> bool;

    /// A peel together with the bound it must meet, when eta is computable.
    struct PeelReport
    {
        PeelResult result;
        std::optional<int> eta;
        std::optional<Rational> bound;
        std::optional<long long> bound_ceiling;

        auto meets_bound() const -> bool;
    };

    auto peel_with_bound(const Graph & g, const BoundParams & params, BaseSolver base, const Limits & limits = {}) -> PeelReport;

    /// Single-line JSON document: parameters, levels, residual, base
    /// witness, chosen candidate and, when known, eta and the bound.
    auto certificate_json(const Graph & g, const PeelReport & report) -> std::string;
}

#endif

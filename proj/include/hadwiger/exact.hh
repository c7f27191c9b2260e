#ifndef HADWIGER_EXACT_HH
#define HADWIGER_EXACT_HH 1

#include <hadwiger/graph.hh>

#include <optional>
#include <vector>

namespace hadwiger
{
    /// Largest inputs each exact oracle accepts. These are configuration:
    /// callers raise them knowingly when they are prepared to wait.
    struct Limits
    {
        int alpha_bruteforce = 20;
        int alpha = 40;
        int chi = 20;
        int minor = 16;
    };

    /// A vertex set realising an extremal value: an independent set for
    /// alpha, a clique for omega.
    struct SetResult
    {
        int value = 0;
        VertexSet witness;
    };

    struct ColouringResult
    {
        int chi = 0;

        /// Colour of each vertex, in 0..chi-1.
        std::vector<int> colours;
    };

    struct DegeneracyResult
    {
        int degeneracy = 0;

        /// Removal order: each entry has minimum degree among the vertices
        /// not yet removed, smallest index among ties.
        std::vector<int> order;
    };

    /// Pairwise disjoint, connected, pairwise adjacent branch sets: a
    /// K_t-minor certificate with t = arity().
    struct MinorEmbedding
    {
        std::vector<VertexSet> branch_sets;

        auto arity() const -> int { return static_cast<int>(branch_sets.size()); }
    };

    struct HadwigerResult
    {
        int eta = 0;
        MinorEmbedding witness;
    };

    struct ExactStats
    {
        int n = 0;
        SetResult alpha;
        SetResult omega;
        ColouringResult chi;
        HadwigerResult eta;
    };

    /// Reference oracle: every subset, in increasing mask order.
    auto independence_number_bruteforce(const Graph & g, const Limits & limits = {}) -> SetResult;

    /// Branch and bound maximum clique on the complement, bounded by greedy
    /// colourings.
    auto independence_number(const Graph & g, const Limits & limits = {}) -> SetResult;

    auto clique_number(const Graph & g, const Limits & limits = {}) -> SetResult;

    /// Tries k = omega, omega + 1, ... with DSATUR-ordered backtracking, the
    /// first k colours fixed on a maximum clique.
    auto chromatic_number(const Graph & g, const Limits & limits = {}) -> ColouringResult;

    auto is_proper_colouring(const Graph & g, const std::vector<int> & colours, int k) -> bool;

    auto degeneracy_order(const Graph & g) -> DegeneracyResult;

    /// Exhaustive branch-set search. Within a connected component every
    /// K_t model extends to a partition of the component into t connected,
    /// pairwise adjacent parts, so the search builds partitions part by
    /// part, each part grown from the smallest unassigned vertex.
    auto has_clique_minor(const Graph & g, int t, const Limits & limits = {}) -> std::optional<MinorEmbedding>;

    /// Zero for the empty graph, otherwise the largest t with a K_t minor.
    auto hadwiger_number(const Graph & g, const Limits & limits = {}) -> HadwigerResult;

    auto verify_minor_embedding(const Graph & g, const MinorEmbedding & m) -> bool;

    auto exact_stats(const Graph & g, const Limits & limits = {}) -> ExactStats;
}

#endif

#ifndef HADWIGER_ENUMERATE_HH
#define HADWIGER_ENUMERATE_HH 1

#include <hadwiger/graph.hh>

#include <cstdint>
#include <vector>

namespace hadwiger
{
    /// Largest order supported by the canonical-form code (n(n-1)/2 <= 64 bits).
    inline constexpr int canonical_max_order = 11;

    /// Canonical form: the relabelling that maximises the upper-triangle bit
    /// string (graph6 pair order, first pair most significant), found by
    /// individualisation and equitable refinement. Two graphs are isomorphic
    /// iff their codes and orders are equal.
    struct CanonicalForm
    {
        std::uint64_t code = 0;

        /// Position i of the canonical labelling holds this original vertex.
        std::vector<int> labelling;
    };

    auto canonical_form(const Graph & g) -> CanonicalForm;
    auto canonical_graph(const Graph & g) -> Graph;
    auto graph_from_canonical_code(int n, std::uint64_t code) -> Graph;

    /// One representative per isomorphism class on exactly n vertices, in
    /// canonical labelling, sorted by canonical code. n <= 10.
    auto enumerate_graphs(int n, bool connected_only) -> std::vector<Graph>;

    /// All orders 1..n_max concatenated in increasing order.
    auto enumerate_graphs_up_to(int n_max, bool connected_only) -> std::vector<Graph>;
}

#endif

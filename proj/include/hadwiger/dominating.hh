#ifndef HADWIGER_DOMINATING_HH
#define HADWIGER_DOMINATING_HH 1

#include <hadwiger/graph.hh>

#include <optional>

namespace hadwiger
{
    /// A connected dominating set d together with an independent set
    /// s inside it, with |d| = 2|s| - 1.
    struct DominatingPair
    {
        VertexSet d;
        VertexSet s;

        auto operator== (const DominatingPair &) const -> bool = default;
    };

    /// Grows d = s = {start} by repeatedly taking the smallest vertex v at
    /// distance exactly two from d and the smallest neighbour w of v at
    /// distance one, adding both to d and v to s. Stops once d dominates.
    ///
    /// Requires a connected graph with at least one vertex; throws
    /// PreconditionViolated otherwise.
    auto connected_dominating_pair(const Graph & g, std::optional<int> start = std::nullopt) -> DominatingPair;

    auto verify_dominating_pair(const Graph & g, const DominatingPair & p) -> bool;
}

#endif

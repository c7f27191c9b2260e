#include <hadwiger/errors.hh>
#include <hadwiger/graph6.hh>
#include <hadwiger/peeling.hh>

#include <json.hpp>

#include <algorithm>
#include <charconv>

using namespace hadwiger;

using std::optional;
using std::string;
using std::to_string;
using std::vector;

using nlohmann::json;

auto hadwiger::ceil_rational(const Rational & r) -> long long
{
    long long num = r.numerator(), den = r.denominator();
    long long quotient = num / den;
    if (num % den != 0 && num > 0)
        ++quotient;
    return quotient;
}

auto hadwiger::rational_to_string(const Rational & r) -> string
{
    if (r.denominator() == 1)
        return to_string(r.numerator());
    return to_string(r.numerator()) + "/" + to_string(r.denominator());
}

auto hadwiger::parse_rational(const string & text) -> Rational
{
    auto parse_int = [&] (std::string_view part) {
        long long value = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty())
            throw InvalidArgument("not a rational number: '" + text + "'");
        return value;
    };

    auto slash = text.find('/');
    if (slash == string::npos)
        return Rational(parse_int(text));
    long long den = parse_int(std::string_view(text).substr(slash + 1));
    if (den == 0)
        throw InvalidArgument("zero denominator in '" + text + "'");
    return Rational(parse_int(std::string_view(text).substr(0, slash)), den);
}

auto BoundParams::make(int t, Rational p) -> BoundParams
{
    if (t < 1)
        throw InvalidArgument("threshold t must be at least 1, got " + to_string(t));
    if (p < Rational(t))
        throw InvalidArgument("ratio p = " + rational_to_string(p) + " must be at least t = " + to_string(t));
    return { t, p };
}

auto hadwiger::guaranteed_bound(long n, int eta, const BoundParams & params) -> Rational
{
    if (eta < params.t)
        throw InvalidArgument("bound needs eta >= t, got eta = " + to_string(eta) + ", t = " + to_string(params.t));
    if (n < 0)
        throw InvalidArgument("negative vertex count");
    Rational numerator = Rational(2 * static_cast<long long>(n)) - params.p;
    Rational denominator = Rational(4LL * eta) + 2 * params.p - Rational(4LL * params.t);
    return numerator / denominator + Rational(1, 2);
}

auto hadwiger::threshold_bound(long n, int eta, int t, int alpha) -> BoundCheck
{
    if (eta < t)
        throw InvalidArgument("bound needs eta >= t, got eta = " + to_string(eta) + ", t = " + to_string(t));
    BoundCheck result;
    result.lhs = (2LL * eta - t) * (2LL * alpha - 1);
    result.rhs = 2LL * n - t;
    result.pass = result.lhs >= result.rhs;
    result.slack = result.lhs - result.rhs;
    return result;
}

auto hadwiger::base_independent_set_t3(const Graph & g) -> VertexSet
{
    auto degeneracy = degeneracy_order(g);
    if (degeneracy.degeneracy > 2) {
        VertexSet remaining = g.vertices();
        for (int v : degeneracy.order) {
            if ((g.neighbours(v) & remaining).size() > 2)
                throw PreconditionViolated("graph is not 2-degenerate: vertex " + to_string(v)
                        + " has more than two neighbours when no vertex of lower degree remains");
            remaining.erase(v);
        }
    }

    vector<int> colour(static_cast<std::size_t>(g.order()), -1);
    vector<VertexSet> classes(3, VertexSet(g.order()));
    for (auto v = degeneracy.order.rbegin() ; v != degeneracy.order.rend() ; ++v) {
        unsigned used = 0;
        g.neighbours(*v).for_each([&] (int w) { if (colour[w] != -1) used |= 1u << colour[w]; });
        int c = std::countr_one(used);
        if (c >= 3)
            throw std::logic_error("greedy colouring of a 2-degenerate graph needed a fourth colour");
        colour[*v] = c;
        classes[c].insert(*v);
    }

    std::size_t best = 0;
    for (std::size_t c = 1 ; c < classes.size() ; ++c)
        if (classes[c].size() > classes[best].size())
            best = c;
    return classes[best];
}

auto hadwiger::base_independent_set_oracle(const Graph & g, int t, const Limits & limits, bool trust_precondition) -> VertexSet
{
    if (t < 1)
        throw InvalidArgument("threshold t must be at least 1");
    if (! trust_precondition) {
        int eta = hadwiger_number(g, limits).eta;
        if (eta > t)
            throw PreconditionViolated("oracle base case needs eta <= " + to_string(t) + ", graph has eta = " + to_string(eta));
    }

    auto alpha = independence_number(g, limits);
    if (static_cast<long long>(t) * alpha.value < g.order())
        throw BoundViolated("maximum independent set of size " + to_string(alpha.value) + " is below n/t for n = "
                + to_string(g.order()) + ", t = " + to_string(t));
    return alpha.witness;
}

auto hadwiger::base_solver_name(BaseSolver base) -> string
{
    return base == BaseSolver::t3 ? "t3" : "oracle";
}

auto hadwiger::base_solver_from_name(const string & name) -> BaseSolver
{
    if (name == "t3")
        return BaseSolver::t3;
    if (name == "oracle")
        return BaseSolver::oracle;
    throw InvalidArgument("unknown base solver '" + name + "'");
}

namespace
{
    auto base_applies(const Graph & g, const BoundParams & params, BaseSolver base, const Limits & limits) -> bool
    {
        switch (base) {
            case BaseSolver::t3:
                return degeneracy_order(g).degeneracy <= 2;
            case BaseSolver::oracle:
                return hadwiger_number(g, limits).eta <= params.t;
        }
        return false;
    }
}

auto hadwiger::peel_independent_set(const Graph & g, const BoundParams & params, BaseSolver base, const Limits & limits) -> PeelResult
{
    if (g.order() == 0)
        throw PreconditionViolated("peeling needs a nonempty graph");
    BoundParams::make(params.t, params.p);

    PeelResult result;
    auto & cert = result.certificate;
    cert.params = params;
    cert.base = base;

    VertexSet current = g.vertices();
    while (true) {
        auto level_graph = induced_subgraph(g, current);
        if (base_applies(level_graph.graph, params, base, limits))
            break;

        PeelLevel level{ current, {}, {}, VertexSet(g.order()) };
        VertexSet removed(g.order());
        for (auto & component : components(level_graph.graph)) {
            auto local = induced_subgraph(level_graph.graph, component);
            auto pair = connected_dominating_pair(local.graph);
            auto lift = [&] (const VertexSet & s) {
                return level_graph.lift(local.lift(s, level_graph.graph.order()), g.order());
            };
            DominatingPair lifted{ lift(pair.d), lift(pair.s) };
            level.components.push_back(level_graph.lift(component, g.order()));
            removed |= lifted.d;
            level.candidate |= lifted.s;
            level.pairs.push_back(std::move(lifted));
        }
        cert.levels.push_back(std::move(level));
        current -= removed;
    }

    cert.residual = current;
    auto residual = induced_subgraph(g, current);
    VertexSet local_witness(residual.graph.order());
    if (residual.graph.order() > 0)
        local_witness = base == BaseSolver::t3
            ? base_independent_set_t3(residual.graph)
            : base_independent_set_oracle(residual.graph, params.t, limits, true);
    cert.base_witness = residual.lift(local_witness, g.order());

    cert.chosen = -1;
    int best = -1;
    for (std::size_t i = 0 ; i < cert.levels.size() ; ++i)
        if (cert.levels[i].candidate.size() > best) {
            best = cert.levels[i].candidate.size();
            cert.chosen = static_cast<int>(i);
        }
    if (cert.base_witness.size() > best)
        cert.chosen = -1;

    result.set = cert.chosen == -1 ? cert.base_witness : cert.levels[cert.chosen].candidate;
    return result;
}

auto hadwiger::verify_peeling_certificate(const Graph & g, const PeelResult & result) -> bool
{
    auto & cert = result.certificate;
    VertexSet expected = g.vertices();

    for (auto & level : cert.levels) {
        if (level.vertices != expected)
            return false;
        auto level_graph = induced_subgraph(g, level.vertices);
        auto found = components(level_graph.graph);
        if (found.size() != level.components.size() || level.pairs.size() != level.components.size())
            return false;

        VertexSet removed(g.order()), candidate(g.order());
        for (std::size_t i = 0 ; i < found.size() ; ++i) {
            if (level_graph.lift(found[i], g.order()) != level.components[i])
                return false;
            auto component = induced_subgraph(g, level.components[i]);
            auto localise = [&] (const VertexSet & s) {
                VertexSet local(component.graph.order());
                bool inside = true;
                s.for_each([&] (int v) {
                    if (component.from_parent[v] == -1)
                        inside = false;
                    else
                        local.insert(component.from_parent[v]);
                });
                return inside ? optional<VertexSet>(local) : std::nullopt;
            };
            auto d = localise(level.pairs[i].d), s = localise(level.pairs[i].s);
            if (! d || ! s || ! verify_dominating_pair(component.graph, DominatingPair{ *d, *s }))
                return false;
            removed |= level.pairs[i].d;
            candidate |= level.pairs[i].s;
        }
        if (candidate != level.candidate || ! is_independent(g, candidate))
            return false;
        expected -= removed;
    }

    if (cert.residual != expected || ! cert.base_witness.is_subset_of(cert.residual) || ! is_independent(g, cert.base_witness))
        return false;
    if (cert.chosen < -1 || cert.chosen >= static_cast<int>(cert.levels.size()))
        return false;

    auto & named = cert.chosen == -1 ? cert.base_witness : cert.levels[cert.chosen].candidate;
    return result.set == named && is_independent(g, result.set);
}

auto PeelReport::meets_bound() const -> bool
{
    return ! bound_ceiling || result.set.size() >= *bound_ceiling;
}

auto hadwiger::peel_with_bound(const Graph & g, const BoundParams & params, BaseSolver base, const Limits & limits) -> PeelReport
{
    PeelReport report{ peel_independent_set(g, params, base, limits), {}, {}, {} };
    if (g.order() <= limits.minor) {
        report.eta = hadwiger_number(g, limits).eta;
        if (*report.eta >= params.t) {
            report.bound = guaranteed_bound(g.order(), *report.eta, params);
            report.bound_ceiling = ceil_rational(*report.bound);
        }
    }
    return report;
}

auto hadwiger::certificate_json(const Graph & g, const PeelReport & report) -> string
{
    auto & cert = report.result.certificate;
    json doc;
    doc["n"] = g.order();
    if (g.order() <= graph6_max_order)
        doc["g6"] = write_graph6(g);
    doc["t"] = cert.params.t;
    doc["p"] = rational_to_string(cert.params.p);
    doc["base"] = base_solver_name(cert.base);

    json levels = json::array();
    for (auto & level : cert.levels) {
        json entry;
        entry["vertices"] = level.vertices.to_vector();
        json comps = json::array(), pairs = json::array();
        for (auto & c : level.components)
            comps.push_back(c.to_vector());
        for (auto & p : level.pairs)
            pairs.push_back({ { "d", p.d.to_vector() }, { "s", p.s.to_vector() } });
        entry["components"] = comps;
        entry["pairs"] = pairs;
        entry["candidate"] = level.candidate.to_vector();
        levels.push_back(entry);
    }
    doc["levels"] = levels;
    doc["residual"] = cert.residual.to_vector();
    doc["base_witness"] = cert.base_witness.to_vector();
    if (cert.chosen == -1)
        doc["chosen"] = "base";
    else
        doc["chosen"] = cert.chosen;
    doc["independent_set"] = report.result.set.to_vector();
    doc["size"] = report.result.set.size();
    if (report.eta)
        doc["eta"] = *report.eta;
    if (report.bound) {
        doc["bound"] = rational_to_string(*report.bound);
        doc["bound_ceiling"] = *report.bound_ceiling;
        doc["meets_bound"] = report.meets_bound();
    }
    return doc.dump();
}

#ifndef HADWIGER_GENERATE_HH
#define HADWIGER_GENERATE_HH 1

#include <hadwiger/graph.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace hadwiger
{
    enum class GeneratorKind
    {
        complete,
        cycle,
        path,
        petersen,
        gnp
    };

    auto generator_kind_from_name(std::string_view name) -> GeneratorKind;
    auto generator_kind_name(GeneratorKind kind) -> std::string;

    struct GeneratorParams
    {
        GeneratorKind kind = GeneratorKind::complete;
        int n = 0;
        double probability = 0.0;
        std::optional<std::uint64_t> seed;
    };

    /// Named graphs follow the textbook labelling: cycles and paths run
    /// 0-1-...-(n-1); the Petersen graph has outer cycle 0..4, spokes
    /// i~i+5 and inner pentagram i+5~(i+2 mod 5)+5. Random graphs need a
    /// seed and include each pair (i<j, row-major) independently.
    auto generate(const GeneratorParams & params) -> Graph;

    auto complete_graph(int n) -> Graph;
    auto cycle_graph(int n) -> Graph;
    auto path_graph(int n) -> Graph;
    auto petersen_graph() -> Graph;
    auto gnp_graph(int n, double probability, std::uint64_t seed) -> Graph;
}

#endif

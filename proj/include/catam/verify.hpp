#pragma once

#include <json.hpp>

#include "catam/atam2ca.hpp"
#include "catam/ca2atam.hpp"

namespace catam {

// Outcome of a bounded simulation check. Failures carry a counterexample
// replayable through the public engines.
struct RepresentationReport {
    enum class Verdict { Pass, Fail, Inconclusive };
    Verdict verdict = Verdict::Pass;
    std::string reason;
    nlohmann::json counterexample;  // null unless verdict == Fail
    nlohmann::json bounds_used;

    bool passed() const { return verdict == Verdict::Pass; }
    nlohmann::json to_json() const;
    int exit_code() const;
};

// Soundness at bounded depth: every one-step move of the compiled automaton
// maps to legal growth of the represented assembly.
RepresentationReport check_follows(const CompiledCA& compiled, const TileSystem& ts,
                                   std::size_t depth, std::size_t width);

// Completeness at bounded size: every producible assembly has a reachable
// representing configuration from which every single-tile successor is
// realizable; terminal assemblies are represented forever.
RepresentationReport check_models(const CompiledCA& compiled, const TileSystem& ts,
                                  std::size_t size_bound, std::size_t width = 200000);

// Staged-simulation check: readback-image equality per step up to t_max and
// step coherence between consecutive complete stages, over exhaustive
// exploration of attachment choices (cap-limited).
RepresentationReport check_tas_simulates_ca(const GeneratedTileSet& gen, const CADefinition& ca,
                                            const Configuration& c0, std::int64_t t_max,
                                            std::size_t cap);

// Independent Game of Life reference: direct window counting, separate from
// the rule machinery it is used to check.
Configuration gol_oracle(const Configuration& c, std::size_t n);

}  // namespace catam

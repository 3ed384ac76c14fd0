#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "catam/atam.hpp"
#include "catam/ca.hpp"

namespace catam {

// Pending action carried by a token: what its cell resolves to when the
// token moves on. Encoding the choice one step early keeps every cell's
// transition locally deterministic except the single choice made by the
// cell that becomes the token.
struct PendingAction {
    enum class Kind { Move, PlaceTile, PlaceBridge, CollapseBridge };
    Kind kind = Kind::Move;
    TileId tile = -1;  // PlaceTile / PlaceBridge

    friend bool operator==(const PendingAction& a, const PendingAction& b) {
        return a.kind == b.kind && a.tile == b.tile;
    }
};

// One cell state of the compiled automaton.
struct CompiledState {
    enum class Kind { Quiescent, Tile, BridgeTile, Token, BridgeToken };
    Kind kind = Kind::Quiescent;
    TileId tile = -1;                       // Tile, BridgeTile, BridgeToken
    Direction dir = Direction::West;        // Token, BridgeToken
    PendingAction pending;                  // Token, BridgeToken

    bool is_token() const { return kind == Kind::Token || kind == Kind::BridgeToken; }
    friend bool operator==(const CompiledState& a, const CompiledState& b) {
        return a.kind == b.kind && a.tile == b.tile && a.dir == b.dir && a.pending == b.pending;
    }
};

// Test-only rule mutations used to demonstrate checker sensitivity.
enum class RuleMutation {
    None,
    IgnoreBinding,   // placements no longer require glue strength >= tau
    NoBridges,       // surface-splitting sites offer nothing instead of a bridge
    SplitAsTile,     // surface-splitting sites place plain tiles
};

class TasStateCodec {
  public:
    explicit TasStateCodec(const TileSystem& ts);

    StateId encode(const CompiledState& s) const;
    const CompiledState& decode(StateId id) const { return states_[static_cast<std::size_t>(id)]; }
    const std::vector<std::string>& names() const { return names_; }
    std::size_t size() const { return states_.size(); }
    static std::string state_name(const TileSystem& ts, const CompiledState& s);

  private:
    using Key = std::tuple<int, TileId, int, int, TileId>;
    static Key key(const CompiledState& s) {
        return {static_cast<int>(s.kind), s.tile, static_cast<int>(s.dir),
                static_cast<int>(s.pending.kind), s.pending.tile};
    }
    std::vector<CompiledState> states_;
    std::vector<std::string> names_;
    std::map<Key, StateId> index_;
};

struct CompiledCA {
    CADefinition ca;
    TileSystem source;
    std::shared_ptr<const TasStateCodec> codec;
    RuleMutation mutation = RuleMutation::None;
};

// Compiles a tile system into a Moore-neighborhood synchronous
// nondeterministic CA over the compiled-state alphabet.
CompiledCA compile_tas(const TileSystem& ts, RuleMutation mutation = RuleMutation::None);

// Tile types able to bind at the window's center against the effective
// (pending-resolved) edge neighbors. Window is the 9-cell Moore window in
// canonical order, center at index 4.
std::set<TileId> bindable_types(const std::array<CompiledState, 9>& window, const TileSystem& ts);

// The compiled local rule applied to one window; exposed for direct tests.
std::vector<CompiledState> token_rule(const std::array<CompiledState, 9>& window,
                                      const TileSystem& ts,
                                      RuleMutation mutation = RuleMutation::None);

// Initial configuration: seed tiles, bridge paths joining every enclosed
// quiescent region to the outer region, and the token placed heading left
// above the least seed tile with empty space above it.
Configuration build_initial_config(const CompiledCA& cca);

// Representation map R*: tile-bearing states to tiles, everything else to
// empty space. Total on all configurations.
Assembly represent(const CompiledCA& cca, const Configuration& c);

// Diagnostics used by invariant checks.
std::size_t count_token_cells(const CompiledCA& cca, const Configuration& c);
bool non_quiescent_connected8(const CompiledCA& cca, const Configuration& c);
bool contains_bridge_state(const CompiledCA& cca, const Configuration& c);

// Access to the tile system embedded in a compiled rule; null when the rule
// is not compiled_from_tas.
const TileSystem* compiled_rule_source(const LocalRule& rule);
RuleMutation compiled_rule_mutation(const LocalRule& rule);

// Rebuilds the full compiled bundle around a compiled-rule CADefinition.
CompiledCA compiled_bundle(const CADefinition& ca);

}  // namespace catam

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "catam/errors.hpp"
#include "catam/lattice.hpp"

namespace catam {

// Edge glue: label over a finite alphabet plus a nonnegative strength.
// The empty label is the null glue; it never binds regardless of strength.
struct Glue {
    std::string label;
    int strength = 0;

    bool binds(const Glue& other) const {
        return !label.empty() && label == other.label && strength == other.strength;
    }
    friend bool operator==(const Glue& a, const Glue& b) {
        return a.label == b.label && a.strength == b.strength;
    }
};

// Unit square tile with one glue per side. Translation only, no rotation.
struct TileType {
    std::string name;
    std::array<Glue, 4> glues;  // indexed by Direction

    const Glue& glue(Direction d) const { return glues[static_cast<std::size_t>(d)]; }
    Glue& glue(Direction d) { return glues[static_cast<std::size_t>(d)]; }
};

using TileId = std::int32_t;

// Sparse placement map. Value semantics; copies are snapshots.
class Assembly {
  public:
    using Map = std::unordered_map<Point, TileId, PointHash>;

    bool empty() const { return placements_.empty(); }
    std::size_t size() const { return placements_.size(); }
    bool occupied(Point p) const { return placements_.count(p) != 0; }
    std::optional<TileId> at(Point p) const {
        auto it = placements_.find(p);
        if (it == placements_.end()) return std::nullopt;
        return it->second;
    }
    void place(Point p, TileId t) {
        auto [it, inserted] = placements_.emplace(p, t);
        if (!inserted) throw occupied_position_error("position already holds a tile");
    }
    const Map& placements() const { return placements_; }

    // Sorted (point, tile) list; the canonical form used for hashing,
    // equality and serialization.
    std::vector<std::pair<Point, TileId>> sorted() const;
    bool subassembly_of(const Assembly& other) const;
    friend bool operator==(const Assembly& a, const Assembly& b);
    std::uint64_t canonical_hash() const;

    // Inclusive bounding box; nullopt for the empty assembly.
    std::optional<std::array<std::int64_t, 4>> bounding_box() const;  // {min_x, min_y, max_x, max_y}

  private:
    Map placements_;
};

// An aTAM system: tile set, seed, temperature.
class TileSystem {
  public:
    TileSystem() = default;
    TileSystem(std::vector<TileType> types, Assembly seed, int temperature);

    int temperature() const { return temperature_; }
    const Assembly& seed() const { return seed_; }
    const std::vector<TileType>& tile_types() const { return types_; }
    const TileType& type(TileId id) const { return types_[static_cast<std::size_t>(id)]; }
    std::optional<TileId> id_of(const std::string& name) const;
    std::size_t type_count() const { return types_.size(); }

    // Tiles whose glue on side `d` binds `g`; used for frontier candidates.
    const std::vector<TileId>& matching(Direction d, const Glue& g) const;

  private:
    std::vector<TileType> types_;
    std::unordered_map<std::string, TileId> by_name_;
    Assembly seed_;
    int temperature_ = 1;
    // (direction, label, strength) -> tile ids
    std::map<std::tuple<int, std::string, int>, std::vector<TileId>> match_index_;
    std::vector<TileId> no_match_;
};

// Total matched-glue strength tile `t` would have at empty position `p`.
int binding_strength(const TileSystem& ts, const Assembly& a, Point p, const TileType& t);

// All (position, tile) pairs attachable to `a` at temperature tau,
// point-lexicographic then tile-name order.
std::vector<std::pair<Point, TileId>> frontier(const TileSystem& ts, const Assembly& a);

// Single-tile addition; validates emptiness and binding strength.
Assembly attach(const Assembly& a, Point p, TileId t, const TileSystem& ts);

bool is_terminal(const TileSystem& ts, const Assembly& a);

// Min-cut >= tau over the binding graph. Test-scale verifier; the growth
// engine never needs it because single-tile additions preserve stability.
bool is_tau_stable(const TileSystem& ts, const Assembly& a, int tau);

// Incremental growth engine. Maintains the frontier across attachments so
// long runs cost O(1) frontier work per step.
class GrowthSim {
  public:
    GrowthSim(const TileSystem& ts, Assembly start);
    explicit GrowthSim(const TileSystem& ts);

    const Assembly& assembly() const { return assembly_; }
    const TileSystem& system() const { return *ts_; }

    // Candidates at a frontier position, tile-id ascending.
    const std::map<Point, std::vector<TileId>>& frontier() const { return frontier_; }
    bool terminal() const { return frontier_.empty(); }

    void attach(Point p, TileId t);
    // Uniformly random frontier pair under the given engine.
    template <class Rng>
    std::optional<std::pair<Point, TileId>> pick_uniform(Rng& rng) const {
        std::size_t total = 0;
        for (const auto& [p, tiles] : frontier_) total += tiles.size();
        if (total == 0) return std::nullopt;
        std::uint64_t k = rng() % total;
        for (const auto& [p, tiles] : frontier_) {
            if (k < tiles.size()) return std::make_pair(p, tiles[k]);
            k -= tiles.size();
        }
        return std::nullopt;
    }

  private:
    void refresh_site(Point p);
    const TileSystem* ts_;
    Assembly assembly_;
    std::map<Point, std::vector<TileId>> frontier_;
};

// Seeded assembly sequence from the seed: uniform frontier choice, stops at
// terminality or after max_steps attachments. Returns every assembly,
// starting with the seed.
std::vector<Assembly> run_sequence(const TileSystem& ts, std::uint64_t rng_seed,
                                   std::size_t max_steps);

// All producible assemblies with at most max_size tiles, BFS closure.
// Throws resource_limit_error when the set exceeds `cap`.
std::vector<Assembly> producible_set(const TileSystem& ts, std::size_t max_size,
                                     std::size_t cap = 200000);

// True iff some attachment sequence of at most `bound` steps leads alpha
// to beta. Only placements inside dom(beta) \ dom(alpha) are explored.
bool reaches(const TileSystem& ts, const Assembly& alpha, const Assembly& beta, std::size_t bound);

}  // namespace catam

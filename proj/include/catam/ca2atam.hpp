#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "catam/atam.hpp"
#include "catam/ca.hpp"

namespace catam {

// Scale bookkeeping for the staged simulation. lambda is fixed to 2 by the
// generator but kept as a parameter so alternate paddings stay expressible.
struct StageGeometry {
    std::int64_t n = 0;
    std::int64_t lambda = 2;

    std::int64_t fiber_width(std::int64_t t) const { return n + (2 + lambda) * (t + 1); }
    std::int64_t side(std::int64_t t) const;     // d_t
    std::int64_t origin(std::int64_t t) const;   // SW corner coordinate of stage t (x == y)
};

std::int64_t fiber_width(std::int64_t n, std::int64_t lambda, std::int64_t t);
std::int64_t scale(std::int64_t n, std::int64_t lambda, std::int64_t t);

// One cell of a value listing: CA state plus the markers the construction
// tracks for it.
struct CellValueRecord {
    StateId state = 0;
    std::string state_bits;  // binary form, least significant bit last
    bool star = false;
    bool border_left = false, border_right = false, border_bottom = false, border_top = false;
};

// Normalized initial grid: row-major state matrix plus the world coordinate
// of grid cell (row 0, col 0).
struct NormalizedC0 {
    std::vector<std::vector<StateId>> grid;  // grid[row][col]
    std::int64_t n = 0;
    Point world_origin;  // world position of (row 0, col 0)
};

// Square grid holding all non-quiescent cells plus quiescent rings of the
// neighborhood radius (at least one). The side is padded to an odd length;
// padding rules are deterministic.
NormalizedC0 normalize_c0(const CADefinition& ca, const Configuration& c0);

// Where readback finds the authoritative value of one simulated cell.
struct ValuePlacement {
    std::int64_t stage = 0;
    std::int64_t row = 0, col = 0;
    Point position;
    std::string role;  // "seed-value" or "transition"
};

class GeneratorModel;  // internal layout/program model

// Scale anchors plus authoritative value-bearing positions per stage.
class LayoutManifest {
  public:
    LayoutManifest() = default;
    LayoutManifest(StageGeometry geo, std::shared_ptr<const GeneratorModel> model);

    const StageGeometry& geometry() const { return geo_; }
    // Grid side at stage t.
    std::int64_t grid_side(std::int64_t t) const;
    // World coordinate of grid (0,0) at stage t.
    Point grid_origin(std::int64_t t) const;
    Point stage_origin(std::int64_t t) const;
    std::int64_t stage_side(std::int64_t t) const;
    std::int64_t max_stage() const;
    ValuePlacement value_placement(std::int64_t t, std::int64_t row, std::int64_t col) const;

  private:
    StageGeometry geo_;
    std::shared_ptr<const GeneratorModel> model_;
};

// The generated system: tiles, seed column, manifest, and the source CA.
class GeneratedTileSet {
  public:
    const TileSystem& system() const { return *system_; }
    const LayoutManifest& manifest() const { return manifest_; }
    const StageGeometry& geometry() const { return manifest_.geometry(); }
    const CADefinition& source_ca() const { return *ca_; }
    const NormalizedC0& initial_grid() const { return c0_; }

    // CA state carried by a value-bearing tile type, if any.
    std::optional<StateId> value_of_tile(TileId t) const;
    // Number of tile types in the transition family.
    std::size_t transition_tile_count() const;

    GeneratedTileSet(std::shared_ptr<const TileSystem> system, LayoutManifest manifest,
                     std::shared_ptr<const CADefinition> ca, NormalizedC0 c0,
                     std::map<TileId, StateId> value_tiles, std::size_t transition_count);

  private:
    std::shared_ptr<const TileSystem> system_;
    LayoutManifest manifest_;
    std::shared_ptr<const CADefinition> ca_;
    NormalizedC0 c0_;
    std::map<TileId, StateId> value_tiles_;
    std::size_t transition_count_ = 0;
};

struct GeneratorOptions {
    std::int64_t lambda = 2;
    // Stages the generator materializes tiles and manifest entries for.
    std::int64_t max_stage = 2;
    std::size_t tuple_cap = 1 << 16;   // cap on |S|^|N| gadget enumeration
    std::size_t tile_cap = 1 << 21;    // cap on emitted tile types
};

// Seed column encoding the normalized grid: ruler/counter segment of height
// n+2+lambda below the n^2 cell values.
Assembly build_seed_column(const NormalizedC0& c0, const CADefinition& ca,
                           std::int64_t lambda = 2);

GeneratedTileSet generate_tileset(const CADefinition& ca, const Configuration& c0,
                                  const GeneratorOptions& opts = {});

// Scalable representation reader: the stage-t configuration when the stage-t
// square is complete and every value position decodes, otherwise nullopt.
std::optional<Configuration> representation(const GeneratedTileSet& gen, const Assembly& a,
                                            std::int64_t t);

// Tile-free reference of stage-t values: applies the CA t times on the
// expanding grid (sampled for nondeterministic rules) and applies the
// marker rules.
std::vector<std::vector<CellValueRecord>> stage_oracle(const CADefinition& ca,
                                                       const NormalizedC0& c0, std::int64_t t,
                                                       std::uint64_t rng_seed);

// Two-pass neighborhood gathering over a bottom-to-top row-major listing:
// the upward pass collects {(-1,-1),(0,-1),(1,-1),(-1,0)}, the downward
// pass the remaining four; border marks substitute the quiescent value.
// Returns one 9-tuple (canonical window order) per starred position,
// bottom to top. Throws when the star count does not match one per row.
std::vector<std::array<StateId, 9>> transition_gadget_semantics(
    const std::vector<CellValueRecord>& column_values, std::int64_t row_len, StateId quiescent);

}  // namespace catam

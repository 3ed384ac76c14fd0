#include "ca2atam_model.hpp"
namespace catam {
struct GeneratorModel {};
LayoutManifest::LayoutManifest(StageGeometry geo, std::shared_ptr<const GeneratorModel> model)
    : geo_(geo), model_(std::move(model)) {}
std::int64_t LayoutManifest::grid_side(std::int64_t) const { throw input_error("unimplemented"); }
Point LayoutManifest::grid_origin(std::int64_t) const { throw input_error("unimplemented"); }
Point LayoutManifest::stage_origin(std::int64_t t) const { return {geo_.origin(t), geo_.origin(t)}; }
std::int64_t LayoutManifest::stage_side(std::int64_t t) const { return geo_.side(t); }
std::int64_t LayoutManifest::max_stage() const { return 0; }
ValuePlacement LayoutManifest::value_placement(std::int64_t, std::int64_t, std::int64_t) const {
    throw input_error("unimplemented");
}
GeneratedTileSet::GeneratedTileSet(std::shared_ptr<const TileSystem> system, LayoutManifest manifest,
                                   std::shared_ptr<const CADefinition> ca, NormalizedC0 c0,
                                   std::map<TileId, StateId> value_tiles, std::size_t transition_count)
    : system_(std::move(system)), manifest_(std::move(manifest)), ca_(std::move(ca)),
      c0_(std::move(c0)), value_tiles_(std::move(value_tiles)), transition_count_(transition_count) {}
std::optional<StateId> GeneratedTileSet::value_of_tile(TileId t) const {
    auto it = value_tiles_.find(t);
    if (it == value_tiles_.end()) return std::nullopt;
    return it->second;
}
std::size_t GeneratedTileSet::transition_tile_count() const { return transition_count_; }
Assembly build_seed_column(const NormalizedC0&, const CADefinition&, std::int64_t) {
    throw input_error("unimplemented");
}
GeneratedTileSet generate_tileset(const CADefinition&, const Configuration&, const GeneratorOptions&) {
    throw input_error("unimplemented");
}
std::optional<Configuration> representation(const GeneratedTileSet&, const Assembly&, std::int64_t) {
    throw input_error("unimplemented");
}
}  // namespace catam

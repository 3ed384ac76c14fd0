#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "catam/errors.hpp"
#include "catam/lattice.hpp"

namespace catam {

using StateId = std::int32_t;

// Sparse configuration: finite support, quiescent cells never stored.
class Configuration {
  public:
    using Map = std::unordered_map<Point, StateId, PointHash>;

    Configuration() = default;

    StateId get(Point p, StateId quiescent) const {
        auto it = cells_.find(p);
        return it == cells_.end() ? quiescent : it->second;
    }
    void set(Point p, StateId s, StateId quiescent) {
        if (s == quiescent)
            cells_.erase(p);
        else
            cells_[p] = s;
    }
    const Map& cells() const { return cells_; }
    std::size_t support_size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }

    std::vector<std::pair<Point, StateId>> sorted() const;
    std::uint64_t canonical_hash() const;
    friend bool operator==(const Configuration& a, const Configuration& b);

  private:
    Map cells_;
};

// Local rule interface. `window` holds the states at the neighborhood
// offsets in spec order; the result is the nonempty successor set.
class LocalRule {
  public:
    virtual ~LocalRule() = default;
    virtual std::vector<StateId> successors(const std::vector<StateId>& window) const = 0;
    virtual std::string kind() const = 0;
};

class CADefinition {
  public:
    CADefinition() = default;
    CADefinition(std::vector<std::string> states, const std::string& quiescent,
                 NeighborhoodSpec neighborhood, std::shared_ptr<const LocalRule> rule);

    const std::vector<std::string>& states() const { return states_; }
    StateId quiescent() const { return quiescent_; }
    const std::string& state_name(StateId s) const { return states_[static_cast<std::size_t>(s)]; }
    std::optional<StateId> state_id(const std::string& name) const;
    const NeighborhoodSpec& neighborhood() const { return neighborhood_; }
    const LocalRule& rule() const { return *rule_; }
    std::shared_ptr<const LocalRule> rule_ptr() const { return rule_; }

    // Checks that an all-quiescent window maps to exactly {quiescent}.
    void check_quiescence_closure() const;

  private:
    std::vector<std::string> states_;
    std::unordered_map<std::string, StateId> by_name_;
    StateId quiescent_ = 0;
    NeighborhoodSpec neighborhood_;
    std::shared_ptr<const LocalRule> rule_;
};

// Explicit transition table over neighborhood tuples, optional default.
class TableRule : public LocalRule {
  public:
    TableRule(std::map<std::vector<StateId>, std::vector<StateId>> entries,
              std::optional<std::vector<StateId>> fallback)
        : entries_(std::move(entries)), fallback_(std::move(fallback)) {}
    std::vector<StateId> successors(const std::vector<StateId>& window) const override;
    std::string kind() const override { return "table"; }
    const std::map<std::vector<StateId>, std::vector<StateId>>& entries() const {
        return entries_;
    }
    const std::optional<std::vector<StateId>>& fallback() const { return fallback_; }

  private:
    std::map<std::vector<StateId>, std::vector<StateId>> entries_;
    std::optional<std::vector<StateId>> fallback_;
};

// Conway's Game of Life over the 9-cell Moore window (center at index 4).
class GameOfLifeRule : public LocalRule {
  public:
    GameOfLifeRule(StateId dead, StateId alive) : dead_(dead), alive_(alive) {}
    std::vector<StateId> successors(const std::vector<StateId>& window) const override;
    std::string kind() const override { return "builtin:game_of_life"; }

  private:
    StateId dead_;
    StateId alive_;
};

CADefinition make_game_of_life();

// States a cell at p may take in the next step.
std::vector<StateId> local_successors(const CADefinition& ca, const Configuration& c, Point p);

// One synchronous step with per-cell independent uniform choice.
Configuration step_sample(const CADefinition& ca, const Configuration& c, std::uint64_t rng_seed);

// The exact one-step image G(c). Throws resource_limit_error when the
// product of per-cell choice counts exceeds cap.
std::vector<Configuration> successors_enumerate(const CADefinition& ca, const Configuration& c,
                                                std::size_t cap);

// n-fold step_sample with per-step split seeds.
Configuration iterate(const CADefinition& ca, const Configuration& c, std::size_t n,
                      std::uint64_t rng_seed);

Configuration shift(const Configuration& c, Point k);

// Block space for (m1,m2)-packing: enumerates tuple states of the inner CA.
class BlockSpace {
  public:
    BlockSpace(const CADefinition& inner, int m1, int m2, std::size_t cap = 1 << 20);

    int m1() const { return m1_; }
    int m2() const { return m2_; }
    const std::vector<std::string>& state_names() const { return names_; }
    StateId encode(const std::vector<StateId>& tuple) const;
    std::vector<StateId> decode(StateId block) const;
    StateId quiescent_block() const { return quiescent_; }
    static std::string block_name(const CADefinition& inner, const std::vector<StateId>& tuple);
    // Block-local offsets in canonical order (px major).
    const std::vector<Point>& cell_offsets() const { return offsets_; }

  private:
    const CADefinition* inner_;
    int m1_, m2_;
    std::vector<std::string> names_;
    std::map<std::vector<StateId>, StateId> index_;
    std::vector<std::vector<StateId>> tuples_;
    std::vector<Point> offsets_;
    StateId quiescent_ = 0;
};

Configuration pack(const CADefinition& inner, const BlockSpace& bs, const Configuration& c);
Configuration unpack(const CADefinition& inner, const BlockSpace& bs, const Configuration& packed);

// The <m,n,k>-rescaled automaton, realized procedurally over block states.
CADefinition rescale(const CADefinition& ca, int m1, int m2, std::size_t n, Point k,
                     std::size_t state_cap = 1 << 16, std::size_t enum_cap = 1 << 16);

// Block space used by a rescaled automaton (for packing test inputs).
const BlockSpace& rescaled_block_space(const CADefinition& rescaled);

}  // namespace catam

#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace catam {

// 2-D integer lattice point. Unbounded, no wraparound.
struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    Point operator-() const { return {-x, -y}; }
    friend bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(Point a, Point b) { return !(a == b); }
    // Lexicographic, x major. This order is normative wherever the code
    // needs a canonical point ordering (file formats, tie-breaking).
    friend bool operator<(Point a, Point b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

struct PointHash {
    std::size_t operator()(Point p) const {
        std::uint64_t h = static_cast<std::uint64_t>(p.x) * 0x9E3779B97F4A7C15ull;
        h ^= static_cast<std::uint64_t>(p.y) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

// The four unit vectors with their cardinal names.
enum class Direction : std::uint8_t { North = 0, East = 1, South = 2, West = 3 };

inline constexpr std::array<Direction, 4> kDirections = {Direction::North, Direction::East,
                                                         Direction::South, Direction::West};

inline Point unit_vector(Direction d) {
    switch (d) {
        case Direction::North: return {0, 1};
        case Direction::East: return {1, 0};
        case Direction::South: return {0, -1};
        case Direction::West: return {-1, 0};
    }
    return {0, 0};
}

inline Direction opposite(Direction d) {
    switch (d) {
        case Direction::North: return Direction::South;
        case Direction::East: return Direction::West;
        case Direction::South: return Direction::North;
        case Direction::West: return Direction::East;
    }
    return d;
}

// 90-degree turns relative to a heading.
inline Direction turn_left(Direction d) {
    switch (d) {
        case Direction::North: return Direction::West;
        case Direction::West: return Direction::South;
        case Direction::South: return Direction::East;
        case Direction::East: return Direction::North;
    }
    return d;
}

inline Direction turn_right(Direction d) { return turn_left(opposite(d)); }

inline const char* direction_name(Direction d) {
    switch (d) {
        case Direction::North: return "N";
        case Direction::East: return "E";
        case Direction::South: return "S";
        case Direction::West: return "W";
    }
    return "?";
}

inline std::optional<Direction> direction_from_name(const std::string& s) {
    if (s == "N") return Direction::North;
    if (s == "E") return Direction::East;
    if (s == "S") return Direction::South;
    if (s == "W") return Direction::West;
    return std::nullopt;
}

// Ordered list of distinct offsets; order fixes the arity and argument
// order of a local rule, so it is significant everywhere.
struct NeighborhoodSpec {
    std::vector<Point> offsets;

    std::int64_t radius() const {
        std::int64_t r = 0;
        for (Point p : offsets) r = std::max({r, std::abs(p.x), std::abs(p.y)});
        return r;
    }
};

// Canonical Moore ring order: (dx,dy) ascending lexicographically, dx major.
inline const std::array<Point, 8>& moore_offsets() {
    static const std::array<Point, 8> k = {Point{-1, -1}, Point{-1, 0}, Point{-1, 1}, Point{0, -1},
                                           Point{0, 1},  Point{1, -1}, Point{1, 0},  Point{1, 1}};
    return k;
}

// The 8 points at Chebyshev distance 1 from p, canonical order.
inline std::array<Point, 8> moore_ring(Point p) {
    std::array<Point, 8> out;
    for (std::size_t i = 0; i < 8; ++i) out[i] = p + moore_offsets()[i];
    return out;
}

// Full 9-cell Moore neighborhood including the center, lexicographic order.
// Used as the neighborhood spec of rules whose arity is 9.
inline NeighborhoodSpec moore9_spec() {
    NeighborhoodSpec spec;
    for (std::int64_t dx = -1; dx <= 1; ++dx)
        for (std::int64_t dy = -1; dy <= 1; ++dy) spec.offsets.push_back({dx, dy});
    return spec;
}

// Flood-fill partition of a finite point set under 4- or 8-adjacency.
// Components are ordered by their least point; points inside each
// component are sorted.
std::vector<std::vector<Point>> connected_components(const std::set<Point>& cells, int adjacency);

// Given the 8 ring states around a center cell (canonical order) reduced to
// "counts as quiescent" booleans, decide whether occupying the center would
// leave the quiescent cells of the window in two or more 4-connected parts.
// Zero or one quiescent component returns false.
bool would_split_quiescent(const std::array<bool, 8>& quiescent_ring);

}  // namespace catam

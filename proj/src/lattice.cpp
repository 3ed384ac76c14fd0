#include "catam/lattice.hpp"

#include <algorithm>
#include <map>

namespace catam {

std::vector<std::vector<Point>> connected_components(const std::set<Point>& cells, int adjacency) {
    if (adjacency != 4 && adjacency != 8) throw std::invalid_argument("adjacency must be 4 or 8");
    std::vector<std::vector<Point>> components;
    std::set<Point> seen;
    for (Point start : cells) {
        if (seen.count(start)) continue;
        std::vector<Point> comp;
        std::vector<Point> stack = {start};
        seen.insert(start);
        while (!stack.empty()) {
            Point p = stack.back();
            stack.pop_back();
            comp.push_back(p);
            auto push = [&](Point q) {
                if (cells.count(q) && !seen.count(q)) {
                    seen.insert(q);
                    stack.push_back(q);
                }
            };
            for (Direction d : kDirections) push(p + unit_vector(d));
            if (adjacency == 8) {
                push(p + Point{1, 1});
                push(p + Point{1, -1});
                push(p + Point{-1, 1});
                push(p + Point{-1, -1});
            }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    // set iteration is ordered, so components already come out keyed by
    // least point; keep the guarantee explicit anyway.
    std::sort(components.begin(), components.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return components;
}

bool would_split_quiescent(const std::array<bool, 8>& quiescent_ring) {
    std::set<Point> cells;
    for (std::size_t i = 0; i < 8; ++i)
        if (quiescent_ring[i]) cells.insert(moore_offsets()[i]);
    if (cells.size() < 2) return false;
    // 4-adjacency restricted to the 3x3 window with the center removed:
    // ring cells only ever touch through other ring cells.
    return connected_components(cells, 4).size() >= 2;
}

}  // namespace catam

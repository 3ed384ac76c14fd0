#include "catam/ca2atam.hpp"

#include <algorithm>

#include "ca2atam_model.hpp"

namespace catam {

std::int64_t fiber_width(std::int64_t n, std::int64_t lambda, std::int64_t t) {
    return n + (2 + lambda) * (t + 1);
}

std::int64_t scale(std::int64_t n, std::int64_t lambda, std::int64_t t) {
    if (t == 0) return n * n * n + (n + 1) * (n + 2 + lambda);
    return (n + 1) * fiber_width(n, lambda, t) + n * scale(n, lambda, t - 1);
}

std::int64_t StageGeometry::side(std::int64_t t) const { return scale(n, lambda, t); }

std::int64_t StageGeometry::origin(std::int64_t t) const {
    std::int64_t o = 0;
    for (std::int64_t k = 1; k <= t; ++k) o -= fiber_width(k);
    return o;
}

NormalizedC0 normalize_c0(const CADefinition& ca, const Configuration& c0) {
    std::int64_t rad = std::max<std::int64_t>(1, ca.neighborhood().radius());
    std::int64_t min_x = 0, min_y = 0, max_x = -1, max_y = -1;
    bool any = false;
    for (const auto& [p, _] : c0.cells()) {
        if (!any) {
            min_x = max_x = p.x;
            min_y = max_y = p.y;
            any = true;
        } else {
            min_x = std::min(min_x, p.x);
            max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y);
            max_y = std::max(max_y, p.y);
        }
    }
    NormalizedC0 out;
    if (!any) {
        out.n = 1;
        out.world_origin = {0, 0};
        out.grid = {{ca.quiescent()}};
        return out;
    }
    std::int64_t w = max_x - min_x + 1, h = max_y - min_y + 1;
    std::int64_t side = std::max(w, h);
    // center the short axis, floor bias toward the low side
    std::int64_t x0 = min_x - (side - w) / 2;
    std::int64_t y0 = min_y - (side - h) / 2;
    std::int64_t n = side + 2 * rad;
    x0 -= rad;
    y0 -= rad;
    if (n % 2 == 0) {
        // odd side keeps the staged construction's traversal parity fixed
        n += 1;
    }
    out.n = n;
    out.world_origin = {x0, y0};
    out.grid.assign(static_cast<std::size_t>(n),
                    std::vector<StateId>(static_cast<std::size_t>(n), ca.quiescent()));
    for (const auto& [p, s] : c0.cells()) {
        std::int64_t col = p.x - x0, row = p.y - y0;
        if (col < 0 || col >= n || row < 0 || row >= n)
            throw input_error("normalization did not cover the support");
        out.grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = s;
    }
    return out;
}

namespace {

std::string bits_of(StateId s, std::size_t width) {
    std::string out;
    for (std::size_t i = width; i-- > 0;) out += ((s >> i) & 1) ? '1' : '0';
    return out;
}

std::size_t state_bit_width(const CADefinition& ca) {
    std::size_t b = 1;
    while ((1u << b) < ca.states().size()) ++b;
    return b;
}

}  // namespace

std::vector<std::vector<CellValueRecord>> stage_oracle(const CADefinition& ca,
                                                       const NormalizedC0& c0, std::int64_t t,
                                                       std::uint64_t rng_seed) {
    // Evolve on the expanding grid: side n + 2t, original grid centered.
    std::int64_t side = c0.n + 2 * t;
    Configuration c;
    for (std::int64_t r = 0; r < c0.n; ++r)
        for (std::int64_t col = 0; col < c0.n; ++col)
            c.set({col, r}, c0.grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)],
                  ca.quiescent());
    c = iterate(ca, c, static_cast<std::size_t>(t), rng_seed);

    std::size_t bw = state_bit_width(ca);
    std::vector<std::vector<CellValueRecord>> grid(
        static_cast<std::size_t>(side), std::vector<CellValueRecord>(static_cast<std::size_t>(side)));
    for (std::int64_t r = 0; r < side; ++r)
        for (std::int64_t col = 0; col < side; ++col) {
            CellValueRecord& rec = grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            rec.state = c.get({col - t, r - t}, ca.quiescent());
            rec.state_bits = bits_of(rec.state, bw);
            rec.star = col == 0;
            rec.border_left = col == 0;
            rec.border_right = col == side - 1;
            rec.border_bottom = r == 0;
            rec.border_top = r == side - 1;
        }
    return grid;
}

std::vector<std::array<StateId, 9>> transition_gadget_semantics(
    const std::vector<CellValueRecord>& column_values, std::int64_t row_len, StateId quiescent) {
    if (row_len <= 0 || column_values.size() % static_cast<std::size_t>(row_len) != 0)
        throw input_error("listing length is not a multiple of the row length");
    std::int64_t rows = static_cast<std::int64_t>(column_values.size()) / row_len;
    std::size_t stars = 0;
    for (const auto& r : column_values) stars += r.star ? 1 : 0;
    if (stars != static_cast<std::size_t>(rows))
        throw input_error("marker count does not match one star per row");

    auto at = [&](std::int64_t i) -> const CellValueRecord& {
        return column_values[static_cast<std::size_t>(i)];
    };

    // Upward pass: sliding memory of the previous cell and of the triple
    // captured at the last star; deposits the lower half of each window.
    struct Gathered {
        std::array<StateId, 9> window;
        std::int64_t index = -1;
    };
    std::vector<Gathered> partial;
    {
        std::optional<std::array<StateId, 3>> trip;  // (j*-1, j*, j*+1) one row below
        std::optional<StateId> prev;
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(column_values.size()); ++i) {
            const auto& cell = at(i);
            if (cell.star) {
                Gathered g;
                g.index = i;
                // canonical window order, dx major: indices
                // 0:(-1,-1) 1:(-1,0) 2:(-1,1) 3:(0,-1) 4:(0,0) 5:(0,1) 6:(1,-1) 7:(1,0) 8:(1,1)
                std::array<StateId, 3> below =
                    trip.value_or(std::array<StateId, 3>{quiescent, quiescent, quiescent});
                if (cell.border_bottom) below = {quiescent, quiescent, quiescent};
                g.window[0] = below[0];
                g.window[3] = below[1];
                g.window[6] = below[2];
                g.window[1] = cell.border_left ? quiescent
                                               : (prev ? *prev : quiescent);  // (-1,0)
                g.window[4] = cell.state;
                partial.push_back(g);
                // start capturing this row's triple for the star above
                std::array<StateId, 3> t3;
                t3[0] = cell.border_left ? quiescent : (prev ? *prev : quiescent);
                t3[1] = cell.state;
                t3[2] = quiescent;  // patched at the next cell unless on the right border
                trip = t3;
            }
            if (trip && i > 0 && at(i - 1).star && !at(i - 1).border_right)
                (*trip)[2] = cell.state;
            prev = cell.state;
        }
    }
    // Downward pass: mirror logic for the upper half.
    {
        std::optional<std::array<StateId, 3>> trip;  // (j*-1, j*, j*+1) one row above
        std::optional<StateId> prev;
        std::size_t which = partial.size();
        for (std::int64_t i = static_cast<std::int64_t>(column_values.size()) - 1; i >= 0; --i) {
            const auto& cell = at(i);
            if (cell.star) {
                --which;
                auto& g = partial[which];
                if (g.index != i) throw input_error("star bookkeeping out of order");
                std::array<StateId, 3> above =
                    trip.value_or(std::array<StateId, 3>{quiescent, quiescent, quiescent});
                if (cell.border_top) above = {quiescent, quiescent, quiescent};
                g.window[2] = above[0];
                g.window[5] = above[1];
                g.window[8] = above[2];
                g.window[7] = cell.border_right ? quiescent : (prev ? *prev : quiescent);  // (1,0)
                std::array<StateId, 3> t3;
                t3[2] = cell.border_right ? quiescent : (prev ? *prev : quiescent);
                t3[1] = cell.state;
                t3[0] = quiescent;
                trip = t3;
            }
            if (trip && i + 1 < static_cast<std::int64_t>(column_values.size()) && at(i + 1).star &&
                !at(i + 1).border_left)
                (*trip)[0] = cell.state;
            prev = cell.state;
        }
    }
    std::vector<std::array<StateId, 9>> out;
    out.reserve(partial.size());
    for (const auto& g : partial) out.push_back(g.window);
    return out;
}

}  // namespace catam

#include "mmground/planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "mmground/errors.hpp"

namespace mmground::planner {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

double octile(const Cell& a, const Cell& b) {
    double dx = std::abs(double(a.ix) - double(b.ix));
    double dy = std::abs(double(a.iy) - double(b.iy));
    return std::max(dx, dy) + (kSqrt2 - 1.0) * std::min(dx, dy);
}

struct OpenEntry {
    double f = 0.0;
    double h = 0.0;
    std::size_t index = 0;  // row-major cell index for deterministic ties
};

struct OpenOrder {
    bool operator()(const OpenEntry& a, const OpenEntry& b) const {
        if (a.f != b.f) return a.f > b.f;
        if (a.h != b.h) return a.h > b.h;
        return a.index > b.index;
    }
};

}  // namespace

std::optional<Path> plan(const costmap::CostmapLayer& master, Cell start, Cell goal,
                         double traversal_weight, std::uint8_t unknown_default) {
    const std::size_t nx = master.cells_x();
    const std::size_t ny = master.cells_y();
    if (start.ix >= nx || start.iy >= ny || goal.ix >= nx || goal.iy >= ny) {
        throw ParameterError("plan: endpoint outside the grid");
    }
    if (!(traversal_weight >= 0.0)) {
        throw ParameterError("plan: traversal_weight must be >= 0");
    }
    auto cell_cost = [&](std::size_t ix, std::size_t iy) {
        return master.effective_cost(ix, iy, unknown_default);
    };
    auto lethal = [&](std::size_t ix, std::size_t iy) {
        return cell_cost(ix, iy) >= costmap::kLethalCost;
    };
    if (lethal(start.ix, start.iy) || lethal(goal.ix, goal.iy)) {
        throw ParameterError("plan: start or goal cell is lethal");
    }

    const std::size_t n = nx * ny;
    std::vector<double> g(n, std::numeric_limits<double>::infinity());
    std::vector<std::size_t> parent(n, n);
    std::vector<std::uint8_t> closed(n, 0);

    const std::size_t start_i = start.iy * nx + start.ix;
    const std::size_t goal_i = goal.iy * nx + goal.ix;

    std::priority_queue<OpenEntry, std::vector<OpenEntry>, OpenOrder> open;
    g[start_i] = 0.0;
    open.push({octile(start, goal), octile(start, goal), start_i});

    static constexpr int kDx[8] = {1, -1, 0, 0, 1, 1, -1, -1};
    static constexpr int kDy[8] = {0, 0, 1, -1, 1, -1, 1, -1};

    while (!open.empty()) {
        const OpenEntry top = open.top();
        open.pop();
        if (closed[top.index]) continue;
        closed[top.index] = 1;
        if (top.index == goal_i) break;

        const Cell u{top.index % nx, top.index / nx};
        const double cu = double(cell_cost(u.ix, u.iy));
        for (int k = 0; k < 8; ++k) {
            const long vx = long(u.ix) + kDx[k];
            const long vy = long(u.iy) + kDy[k];
            if (vx < 0 || vy < 0 || vx >= long(nx) || vy >= long(ny)) continue;
            const Cell v{std::size_t(vx), std::size_t(vy)};
            if (lethal(v.ix, v.iy)) continue;
            const bool diagonal = k >= 4;
            if (diagonal) {
                // no corner cutting past a lethal cell
                if (lethal(v.ix, u.iy) || lethal(u.ix, v.iy)) continue;
            }
            const std::size_t vi = v.iy * nx + v.ix;
            if (closed[vi]) continue;
            const double len = diagonal ? kSqrt2 : 1.0;
            const double mean_cost = (cu + double(cell_cost(v.ix, v.iy))) / 2.0;
            const double edge = len * (1.0 + traversal_weight * mean_cost / 255.0);
            const double cand = g[top.index] + edge;
            if (cand < g[vi]) {
                g[vi] = cand;
                parent[vi] = top.index;
                const double h = octile(v, goal);
                open.push({cand + h, h, vi});
            }
        }
    }

    if (!closed[goal_i]) return std::nullopt;

    Path path;
    for (std::size_t i = goal_i;; i = parent[i]) {
        path.cells.push_back({i % nx, i / nx});
        if (i == start_i) break;
    }
    std::reverse(path.cells.begin(), path.cells.end());
    path.planned_cost.reserve(path.cells.size());
    for (const auto& c : path.cells) {
        path.planned_cost.push_back(cell_cost(c.ix, c.iy));
    }
    path.total_cost = g[goal_i];
    for (std::size_t i = 1; i < path.cells.size(); ++i) {
        const bool diag = path.cells[i].ix != path.cells[i - 1].ix &&
                          path.cells[i].iy != path.cells[i - 1].iy;
        path.geometric_length += diag ? kSqrt2 : 1.0;
    }
    return path;
}

bool needs_replan(const Path& path, const costmap::CostmapLayer& master,
                  std::uint8_t threshold, std::size_t progress_index,
                  std::uint8_t unknown_default) {
    for (std::size_t i = progress_index; i < path.cells.size(); ++i) {
        const auto& c = path.cells[i];
        const std::uint8_t now = master.effective_cost(c.ix, c.iy, unknown_default);
        if (now >= threshold && now > path.planned_cost[i]) return true;
    }
    return false;
}

bool reaction_feasible(double speed_mps, double measurement_rate_hz, double analysis_s,
                       double lookahead_m, double stop_margin_m) {
    if (!(speed_mps > 0.0) || !(measurement_rate_hz > 0.0) || !(analysis_s >= 0.0) ||
        !(lookahead_m >= 0.0) || !(stop_margin_m >= 0.0)) {
        throw ParameterError("reaction_feasible: rates must be positive, distances non-negative");
    }
    return speed_mps * (1.0 / measurement_rate_hz + analysis_s) + stop_margin_m <= lookahead_m;
}

}  // namespace mmground::planner

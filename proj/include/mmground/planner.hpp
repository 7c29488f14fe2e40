#ifndef MMGROUND_PLANNER_HPP
#define MMGROUND_PLANNER_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mmground/costmap.hpp"

namespace mmground::planner {

struct Cell {
    std::size_t ix = 0, iy = 0;
    bool operator==(const Cell&) const = default;
};

// Planned route over the master grid. planned_cost records each cell's cost
// at planning time so replan checks can detect cost increases.
struct Path {
    std::vector<Cell> cells;
    std::vector<std::uint8_t> planned_cost;
    double total_cost = 0.0;        // sum of traversal-weighted edge costs
    double geometric_length = 0.0;  // sum of step lengths (1 or sqrt(2) cells)
};

// A* over the 8-connected grid. Edge cost is geometric length (1 or sqrt(2),
// in cells) times 1 + traversal_weight * mean(endpoint costs)/255. Lethal
// (255) cells are impassable and diagonal moves may not cut corners past a
// lethal cell. The octile-distance heuristic is admissible for this cost.
// Ties break on lower heuristic, then row-major cell index, so plans are
// deterministic. Returns nullopt when no path exists; throws for lethal or
// out-of-range endpoints.
std::optional<Path> plan(const costmap::CostmapLayer& master, Cell start, Cell goal,
                         double traversal_weight, std::uint8_t unknown_default = 0);

// True iff a cell at or past progress_index now costs >= threshold and more
// than it did at planning time.
bool needs_replan(const Path& path, const costmap::CostmapLayer& master,
                  std::uint8_t threshold, std::size_t progress_index = 0,
                  std::uint8_t unknown_default = 0);

// Whether one measurement interval plus analysis leaves enough lookahead to
// stop short of a hazard:
//   speed * (1/measurement_rate + analysis_s) + stop_margin <= lookahead.
bool reaction_feasible(double speed_mps, double measurement_rate_hz, double analysis_s,
                       double lookahead_m, double stop_margin_m);

}  // namespace mmground::planner

#endif

#include "mmground/scene.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "mmground/errors.hpp"

namespace mmground::scene {

TerrainGrid::TerrainGrid(double extent_x_m, double extent_y_m, double resolution_m,
                         const dielectric::MaterialState& base_state,
                         double effective_depth_m)
    : extent_x_(extent_x_m),
      extent_y_(extent_y_m),
      resolution_(resolution_m),
      effective_depth_(effective_depth_m) {
    if (!(extent_x_m > 0.0) || !(extent_y_m > 0.0) || !(resolution_m > 0.0)) {
        throw ParameterError("TerrainGrid: extent and resolution must be positive");
    }
    if (!(effective_depth_m > 0.0)) {
        throw ParameterError("TerrainGrid: effective_depth must be positive");
    }
    if (!(base_state.water_fraction >= 0.0 && base_state.water_fraction <= 1.0)) {
        throw ParameterError("TerrainGrid: base water_fraction must lie in [0, 1]");
    }
    nx_ = std::size_t(std::ceil(extent_x_m / resolution_m));
    ny_ = std::size_t(std::ceil(extent_y_m / resolution_m));
    nx_ = std::max<std::size_t>(nx_, 1);
    ny_ = std::max<std::size_t>(ny_, 1);
    cells_.assign(nx_ * ny_, base_state);
}

std::size_t TerrainGrid::index_along(double coord, std::size_t count) const {
    if (coord <= 0.0) return 0;
    // ceil(c/res)-1 equals floor(c/res) off boundaries and picks the
    // lower-index cell when c is an exact multiple of the resolution.
    double q = coord / resolution_;
    std::size_t idx = std::size_t(std::ceil(q));
    if (idx > 0) --idx;
    return std::min(idx, count - 1);
}

const dielectric::MaterialState& TerrainGrid::sample_state(double x, double y) const {
    if (!contains(x, y)) {
        throw OutOfBoundsError("sample_state: point outside grid extent");
    }
    return cell(index_along(x, nx_), index_along(y, ny_));
}

void TerrainGrid::check_region(const Region& region) const {
    if (!region.valid()) {
        throw ParameterError("region: requires x1 > x0 and y1 > y0");
    }
    if (region.x0 < 0.0 || region.y0 < 0.0 || region.x1 > extent_x_ || region.y1 > extent_y_) {
        throw OutOfBoundsError("region: outside grid extent");
    }
}

void TerrainGrid::region_cells(const Region& region, std::size_t& ix0, std::size_t& ix1,
                               std::size_t& iy0, std::size_t& iy1) const {
    ix0 = index_along(region.x0, nx_);
    iy0 = index_along(region.y0, ny_);
    // A region edge exactly on a cell boundary does not reach into the next
    // cell, so the upper cell uses the same lower-index tie-break.
    ix1 = index_along(region.x1, nx_);
    iy1 = index_along(region.y1, ny_);
}

void TerrainGrid::apply_damp(const Region& region, double fraction) {
    if (!(fraction >= 0.0 && fraction <= 1.0)) {
        throw ParameterError("apply_damp: fraction must lie in [0, 1]");
    }
    check_region(region);
    std::size_t ix0, ix1, iy0, iy1;
    region_cells(region, ix0, ix1, iy0, iy1);
    for (std::size_t iy = iy0; iy <= iy1; ++iy) {
        for (std::size_t ix = ix0; ix <= ix1; ++ix) {
            auto& c = cell(ix, iy);
            c.water_fraction = std::max(c.water_fraction, fraction);
        }
    }
}

void TerrainGrid::deposit_water(const Region& region, double volume_ml) {
    if (!(volume_ml >= 0.0)) {
        throw ParameterError("deposit_water: volume_ml must be >= 0");
    }
    check_region(region);
    double increment = std::min(1.0, volume_ml * 1e-6 / (region.area() * effective_depth_));
    std::size_t ix0, ix1, iy0, iy1;
    region_cells(region, ix0, ix1, iy0, iy1);
    for (std::size_t iy = iy0; iy <= iy1; ++iy) {
        for (std::size_t ix = ix0; ix <= ix1; ++ix) {
            auto& c = cell(ix, iy);
            c.water_fraction = std::min(1.0, c.water_fraction + increment);
        }
    }
}

std::string TerrainGrid::water_fraction_csv() const {
    std::string out;
    char line[160];
    std::snprintf(line, sizeof line, "# extent_x_m=%.9g extent_y_m=%.9g resolution_m=%.9g\n",
                  extent_x_, extent_y_, resolution_);
    out += line;
    for (std::size_t iy = 0; iy < ny_; ++iy) {
        for (std::size_t ix = 0; ix < nx_; ++ix) {
            std::snprintf(line, sizeof line, "%.9g", cell(ix, iy).water_fraction);
            out += line;
            out += (ix + 1 < nx_) ? ',' : '\n';
        }
    }
    return out;
}

}  // namespace mmground::scene

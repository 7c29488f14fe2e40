#ifndef MMGROUND_SCENE_HPP
#define MMGROUND_SCENE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "mmground/dielectric.hpp"

namespace mmground::scene {

// Axis-aligned rectangle in meters.
struct Region {
    double x0 = 0, y0 = 0, x1 = 0, y1 = 0;

    double area() const { return (x1 - x0) * (y1 - y0); }
    bool valid() const { return x1 > x0 && y1 > y0; }
};

// 2D cell lattice of material states. Cell (ix, iy) covers
// [ix*res, (ix+1)*res) x [iy*res, (iy+1)*res); cell counts are
// ceil(extent/resolution) per axis. Points on an interior cell boundary
// belong to the lower-index cell.
class TerrainGrid {
public:
    // Uniform grid of base_state. Throws ParameterError for non-positive
    // dimensions. effective_depth_m maps deposited water volume to a
    // volumetric fraction (see deposit_water).
    TerrainGrid(double extent_x_m, double extent_y_m, double resolution_m,
                const dielectric::MaterialState& base_state,
                double effective_depth_m = 0.005);

    std::size_t cells_x() const { return nx_; }
    std::size_t cells_y() const { return ny_; }
    double resolution() const { return resolution_; }
    double extent_x() const { return extent_x_; }
    double extent_y() const { return extent_y_; }
    double effective_depth() const { return effective_depth_; }

    bool contains(double x, double y) const {
        return x >= 0.0 && x <= extent_x_ && y >= 0.0 && y <= extent_y_;
    }

    const dielectric::MaterialState& cell(std::size_t ix, std::size_t iy) const {
        return cells_[iy * nx_ + ix];
    }
    dielectric::MaterialState& cell(std::size_t ix, std::size_t iy) {
        return cells_[iy * nx_ + ix];
    }

    // Cell index along one axis; boundary coordinates tie-break to the
    // lower-index cell.
    std::size_t index_along(double coord, std::size_t count) const;

    // Containing cell state. Throws OutOfBoundsError outside the extent.
    const dielectric::MaterialState& sample_state(double x, double y) const;

    // Set water_fraction = max(existing, fraction) over every cell whose
    // area intersects the region. Throws for fraction outside [0,1] or an
    // out-of-bounds region.
    void apply_damp(const Region& region, double fraction);

    // Add min(1, volume_ml*1e-6 / (region_area * effective_depth)) to every
    // cell intersecting the region, saturating at 1.0. Throws for negative
    // volume or out-of-bounds region.
    void deposit_water(const Region& region, double volume_ml);

    // Water-fraction matrix as CSV: one header line with extent/resolution,
    // then row-major fractions (row = iy).
    std::string water_fraction_csv() const;

private:
    void check_region(const Region& region) const;
    // Inclusive index ranges of cells intersecting the region.
    void region_cells(const Region& region, std::size_t& ix0, std::size_t& ix1,
                      std::size_t& iy0, std::size_t& iy1) const;

    double extent_x_, extent_y_, resolution_, effective_depth_;
    std::size_t nx_, ny_;
    std::vector<dielectric::MaterialState> cells_;
};

}  // namespace mmground::scene

#endif

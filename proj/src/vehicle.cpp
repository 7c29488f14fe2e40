#include "mmground/vehicle.hpp"

#include <cmath>

#include "mmground/angles.hpp"
#include "mmground/errors.hpp"

namespace mmground::vehicle {

VehicleState step(const VehicleState& state, const Command& cmd, double dt) {
    if (!(dt > 0.0)) {
        throw ParameterError("vehicle::step: dt must be > 0");
    }
    VehicleState next = state;
    next.speed = std::abs(cmd.linear);
    if (cmd.angular == 0.0) {
        next.x = state.x + cmd.linear * dt * std::cos(state.heading);
        next.y = state.y + cmd.linear * dt * std::sin(state.heading);
        return next;
    }
    // Arc of radius v/w traversed for dt.
    double radius = cmd.linear / cmd.angular;
    double dth = cmd.angular * dt;
    next.x = state.x + radius * (std::sin(state.heading + dth) - std::sin(state.heading));
    next.y = state.y - radius * (std::cos(state.heading + dth) - std::cos(state.heading));
    next.heading = wrap_rad(state.heading + dth);
    return next;
}

void sensor_ground_point(const VehicleState& state, const MountGeometry& mount,
                         double& x, double& y) {
    x = state.x + mount.lookahead * std::cos(state.heading);
    y = state.y + mount.lookahead * std::sin(state.heading);
}

}  // namespace mmground::vehicle

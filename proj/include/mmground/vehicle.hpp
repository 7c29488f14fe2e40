#ifndef MMGROUND_VEHICLE_HPP
#define MMGROUND_VEHICLE_HPP

namespace mmground::vehicle {

struct VehicleState {
    double x = 0.0;        // meters
    double y = 0.0;        // meters
    double heading = 0.0;  // radians, wrapped to (-pi, pi]
    double speed = 0.0;    // m/s, >= 0
};

// Sensor mounting: the antenna looks straight down at a ground point
// `lookahead` meters ahead of the vehicle origin, from `standoff` height.
struct MountGeometry {
    double lookahead = 0.5;  // meters ahead along heading
    double standoff = 0.30;  // meters above the surface
};

struct Command {
    double linear = 0.0;   // m/s
    double angular = 0.0;  // rad/s
};

// Unicycle integration over dt; exact arc when angular != 0.
// Throws ParameterError for dt <= 0.
VehicleState step(const VehicleState& state, const Command& cmd, double dt);

// Ground point currently under the sensor.
void sensor_ground_point(const VehicleState& state, const MountGeometry& mount,
                         double& x, double& y);

}  // namespace mmground::vehicle

#endif

#pragma once

#include <vector>

#include "feltloom/models.hpp"
#include "feltloom/profile.hpp"
#include "feltloom/stewart.hpp"

namespace feltloom {

enum class FeltMode { around_circle, vertical_side, spot };

// One felting station: punch `punches` times at `target` (workpiece frame)
// along `approach`.
struct FeltOp {
    Vec3 target;
    Vec3 approach;  // unit stab direction, pointing into the material
    long punches = 1;
    NeedleSpec needle;
    FeltMode mode = FeltMode::spot;
    double axle_angle_deg = 0.0;  // reel rotation that faces the station to the tool

    void validate() const;
};

struct FeltConfig {
    double footprint_diameter = 3.0;  // per-punch affected area (mm)
    double penetration = 6.0;         // needle travel past the surface (mm)
    double stick_radius = 2.0;        // rigid core inside the cushion (mm)
};

// Plans felting stations against the current workpiece surface. The bound
// profile supplies the surface radius; geometry and envelope gate every
// station through felt_reach_check.
class FeltPlanner {
  public:
    FeltPlanner(WorkEnvelope env, StewartGeometry geom, FeltConfig cfg, RadialProfile surface);

    // Stations evenly spaced around the circumference at height z.
    // Throws UnreachableStationError listing the offending axle angles.
    std::vector<FeltOp> felt_around(double z, int stations, long punches_per_station,
                                    NeedleSpec needle) const;

    // Stops every `step` mm from z_start up to z_end on a fixed side angle;
    // a step longer than the range degenerates to a single stop at z_start.
    // Throws UnreachableStationError listing the offending heights.
    std::vector<FeltOp> felt_vertical(double side_angle_deg, double z_start, double z_end,
                                      double step, long punches_per_stop,
                                      NeedleSpec needle) const;

    // Punch schedule compressing `current` down to `target` slab by slab.
    // Slab density demand follows mass conservation (r^2 ratio); punch
    // counts come from the density curve inverse; stations tile the
    // circumference with the punch footprint. Throws Error when target
    // exceeds current anywhere (coiling must add material first).
    std::vector<FeltOp> compression_plan(const RadialProfile& current,
                                         const RadialProfile& target, NeedleSpec needle,
                                         const DensityCurve& curve,
                                         double current_density = -1.0) const;

    const WorkEnvelope& envelope() const { return env_; }
    const StewartGeometry& geometry() const { return geom_; }
    const FeltConfig& config() const { return cfg_; }

  private:
    FeltOp station_op(double z, double axle_angle_deg, long punches, NeedleSpec needle,
                      FeltMode mode) const;

    WorkEnvelope env_;
    StewartGeometry geom_;
    FeltConfig cfg_;
    RadialProfile surface_;
};

}  // namespace feltloom

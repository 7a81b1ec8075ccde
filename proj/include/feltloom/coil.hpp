#pragma once

#include <string>
#include <vector>

#include "feltloom/models.hpp"
#include "feltloom/stewart.hpp"

namespace feltloom {

enum class CoilKind { horizontal, crossed };

// One contiguous block of coiling. Horizontal passes advance z by `pitch`
// (= line width) per axle cycle, sweeping the region like a spring;
// crossed passes run z_start -> z_end -> z_start once per cycle with the
// yarn inclined at slope_deg. Embroidery stacks reuse this type with a
// restricted sector (sector_span_deg < 360).
struct CoilPass {
    CoilKind kind = CoilKind::horizontal;
    double z_start = 0.0;
    double z_end = 0.0;
    double radius_at_start = 0.0;
    long cycles = 1;
    double pitch = 2.0;
    double slope_deg = 0.0;  // 0 for horizontal, <= 60 for crossed
    std::string material_id = "wool";
    TensionLevel tension = TensionLevel::low;
    double sector_center_deg = 0.0;
    double sector_span_deg = 360.0;

    double region_height() const { return z_end - z_start; }
    bool full_circumference() const { return sector_span_deg >= 360.0; }
    // Yarn laid per cycle (mm): helix for horizontal, two inclined runs for
    // crossed, one zigzag return for sector stacks.
    double path_length_per_cycle() const;
    void validate() const;
};

struct CoilSchedule {
    std::vector<CoilPass> blocks;
    long total_cycles = 0;

    void append(const CoilSchedule& other);
    void validate() const;
};

// Feeder/axle stepping ratio holding the selected tension.
struct GearRatio {
    long feeder_steps_per_axle_cycle = 200;
    long axle_steps_per_cycle = 200;
};

inline constexpr long kStepsPerCycle = 200;
inline constexpr double kMaxSlopeDeg = 60.0;

struct CoilRegion {
    double z_start = 0.0;
    double z_end = 0.0;
    double radius = 0.0;  // surface radius at the start of the schedule
};

struct CoilConfig {
    double feeder_wheel_circumference = 50.0;  // mm
    double packing_factor = 1.0;               // layer growth = packing * line width
    double crossed_z_amplitude_max = 15.0;     // platform travel cap per crossed cycle (mm)
    double crossed_tilt_gain = 0.1;            // platform pitch = slope * gain
    int crossed_waypoints = 20;                // pose targets per crossed cycle
    TensionModel tension;
};

// Spring-like coiling: floor((z_end - z_start)/line_width) cycles per
// layer, pitch = line_width, alternating sweep direction per layer, and
// the start radius stepping up one packed line width per layer.
CoilSchedule horizontal_coil(const CoilRegion& region, double line_width, int layers,
                             TensionLevel tension, const CoilConfig& cfg);

// Tilted coiling: each cycle traverses z_start -> z_end -> z_start with the
// yarn at slope_deg. Checks that the tilt poses close under the platform
// kinematics and throws on slopes beyond 60 degrees.
CoilSchedule crossed_coil(const CoilRegion& region, double line_width, long cycles,
                          double slope_deg, TensionLevel tension, const CoilConfig& cfg,
                          const StewartGeometry& geom, const WorkEnvelope& env);

// The 20-cycle block pattern: crossed_ratio% of each block crossed, the
// rest horizontal, repeated 10 times (0% and 100% collapse to uniform
// blocks). total_cycles must be divisible by 20; supported ratios are
// 0/25/50/75/100.
CoilSchedule ratio_schedule(long total_cycles, int crossed_ratio_pct, const CoilRegion& region,
                            double line_width, TensionLevel tension, const CoilConfig& cfg,
                            const StewartGeometry& geom, const WorkEnvelope& env);

// feeder steps per axle cycle = round(200 * (2*pi*r / wheel circumference)
// * slack(tension)); slack none > low > high = 1.
GearRatio tension_to_gear_ratio(TensionLevel tension, double line_width, double current_radius,
                                const CoilConfig& cfg);

// Nominal surface radius encoded by a feeder/axle ratio (inverse of
// tension_to_gear_ratio up to step rounding).
double radius_from_gear_ratio(const GearRatio& ratio, TensionLevel tension,
                              const CoilConfig& cfg);

// Platform pose targets for one crossed cycle of `pass` (up sweep then down
// sweep, cfg.crossed_waypoints per cycle). Every pose is kinematically
// checked; the z oscillation is capped at cfg.crossed_z_amplitude_max.
std::vector<PlatformPose> crossed_pose_targets(const CoilPass& pass, const CoilConfig& cfg,
                                               const StewartGeometry& geom,
                                               const WorkEnvelope& env);

}  // namespace feltloom

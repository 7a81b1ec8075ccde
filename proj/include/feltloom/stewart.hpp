#pragma once

#include <array>
#include <optional>

#include "feltloom/geometry.hpp"
#include "feltloom/profile.hpp"

namespace feltloom {

// Pose of the moving platform in the machine base frame (z up, mm).
// Orientation is roll/pitch/yaw in degrees with the rotation composed as
// Rz(yaw) * Ry(pitch) * Rx(roll).
struct PlatformPose {
    Vec3 position;
    double roll_deg = 0.0;
    double pitch_deg = 0.0;
    double yaw_deg = 0.0;

    PlatformPose normalized() const;  // wraps angles to (-180, 180]
    bool finite() const;
};

// Rotary-servo Stewart platform geometry. Anchors live on circles in the
// base plane (z = 0) and the platform plane; legs pair base_anchor[i] with
// platform_anchor[i]. Servo horn i swings in the vertical plane through
// base_anchor_angles[i] + 90 deg for even i and - 90 deg for odd i
// (mirrored pairs), with the servo angle measured as horn elevation above
// horizontal.
struct StewartGeometry {
    double base_anchor_radius = 90.0;
    std::array<double, 6> base_anchor_angles_deg{};
    double platform_anchor_radius = 70.0;
    std::array<double, 6> platform_anchor_angles_deg{};
    double horn_length = 25.0;
    double rod_length = 220.0;
    double home_height = 0.0;  // platform center z at the neutral pose
    double servo_min_deg = -90.0;
    double servo_max_deg = 90.0;

    // Three-fold symmetric pair layout (base pairs split +-15 deg around
    // 0/120/240, platform pairs +-10 deg around 60/180/300) with home_height
    // solved so the neutral pose holds all horns horizontal.
    static StewartGeometry symmetric_default();

    Vec3 base_anchor(int leg) const;
    Vec3 platform_anchor_local(int leg) const;
    double horn_direction_deg(int leg) const;
    void validate() const;
};

struct ServoAngles {
    std::array<double, 6> deg{};
};

RigidTransform pose_to_transform(const PlatformPose& pose);

// Closed-form IK. Throws UnreachablePoseError naming the offending legs
// when the horn/rod loop cannot close or a servo limit is exceeded.
// Never returns NaN; closure residual of a success is <= 1e-9 mm.
ServoAngles inverse_kinematics(const PlatformPose& pose, const StewartGeometry& geom);

bool reachable(const PlatformPose& pose, const StewartGeometry& geom);

// --- Felting tool frame ------------------------------------------------
//
// The workpiece frame has its origin on the axis at the bottom of the work
// envelope and shares the machine axes; the envelope is mounted so its
// mid-height sits at the center of the platform's vertical travel, next to
// the felting range hemisphere centered at (0, 0, cyl_height/2). The
// felting machine rides the platform with its needle line running through
// the platform center along the platform-frame +x axis; the contact point
// can sit anywhere on that line within the tool's reach.

// z offset of the workpiece frame origin in the machine frame.
double work_base_height(const StewartGeometry& geom, const WorkEnvelope& env);

Vec3 workpiece_to_machine(const Vec3& p, const StewartGeometry& geom, const WorkEnvelope& env);

// Platform pose (machine frame) that places the needle axis along
// `approach` through `target` (workpiece frame), keeping the platform
// center as close to home as the needle line allows.
PlatformPose felt_pose(const Vec3& target, const Vec3& approach,
                       const StewartGeometry& geom, const WorkEnvelope& env);

// True iff `target` lies inside the felting hemisphere (ball of radius
// felt_reach around env.felt_center(), intersected with the upper
// half-space z >= 0 of the tool mount frame), the stab direction does not
// point into the lower half-space (approach.z >= 0 up to tolerance; the
// tool ring sits on the base plane, so needles travel level or upward),
// and felt_pose(...) is platform-reachable.
bool felt_reach_check(const Vec3& target, const Vec3& approach,
                      const WorkEnvelope& env, const StewartGeometry& geom);

}  // namespace feltloom

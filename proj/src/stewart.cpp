#include "feltloom/stewart.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "feltloom/errors.hpp"

namespace feltloom {

namespace {

constexpr double kClosureTol = 1e-9;   // mm
constexpr double kServoMarginDeg = 1e-6;
constexpr double kDiscriminantTol = 1e-9;
constexpr double kApproachTol = 1e-9;

}  // namespace

PlatformPose PlatformPose::normalized() const {
    PlatformPose p = *this;
    p.roll_deg = wrap_deg(p.roll_deg);
    p.pitch_deg = wrap_deg(p.pitch_deg);
    p.yaw_deg = wrap_deg(p.yaw_deg);
    return p;
}

bool PlatformPose::finite() const {
    return position.finite() && std::isfinite(roll_deg) && std::isfinite(pitch_deg) &&
           std::isfinite(yaw_deg);
}

StewartGeometry StewartGeometry::symmetric_default() {
    StewartGeometry g;
    constexpr double base_half_split = 15.0;
    constexpr double platform_half_split = 10.0;
    for (int pair = 0; pair < 3; ++pair) {
        const double base_center = 120.0 * pair;
        const double plat_low = base_center - 60.0;
        const double plat_high = base_center + 60.0;
        g.base_anchor_angles_deg[2 * pair] = wrap_deg(base_center - base_half_split);
        g.base_anchor_angles_deg[2 * pair + 1] = wrap_deg(base_center + base_half_split);
        g.platform_anchor_angles_deg[2 * pair] = wrap_deg(plat_low + platform_half_split);
        g.platform_anchor_angles_deg[2 * pair + 1] = wrap_deg(plat_high - platform_half_split);
    }

    // Home height closes leg 0 with its horn horizontal; by symmetry the
    // same height closes all six.
    const Vec3 base = g.base_anchor(0);
    const double beta = deg2rad(g.horn_direction_deg(0));
    const Vec3 horn_tip = base + Vec3{std::cos(beta), std::sin(beta), 0.0} * g.horn_length;
    const Vec3 plat = g.platform_anchor_local(0);
    const double dx = plat.x - horn_tip.x;
    const double dy = plat.y - horn_tip.y;
    g.home_height = std::sqrt(g.rod_length * g.rod_length - dx * dx - dy * dy);
    return g;
}

Vec3 StewartGeometry::base_anchor(int leg) const {
    const double a = deg2rad(base_anchor_angles_deg[static_cast<std::size_t>(leg)]);
    return {base_anchor_radius * std::cos(a), base_anchor_radius * std::sin(a), 0.0};
}

Vec3 StewartGeometry::platform_anchor_local(int leg) const {
    const double a = deg2rad(platform_anchor_angles_deg[static_cast<std::size_t>(leg)]);
    return {platform_anchor_radius * std::cos(a), platform_anchor_radius * std::sin(a), 0.0};
}

double StewartGeometry::horn_direction_deg(int leg) const {
    const double base = base_anchor_angles_deg[static_cast<std::size_t>(leg)];
    return wrap_deg(leg % 2 == 0 ? base + 90.0 : base - 90.0);
}

void StewartGeometry::validate() const {
    if (!(rod_length > horn_length) || !(horn_length > 0.0))
        throw Error("stewart: requires rod_length > horn_length > 0");
    if (!(servo_min_deg < servo_max_deg)) throw Error("stewart: empty servo range");
    if (!(base_anchor_radius > 0.0) || !(platform_anchor_radius > 0.0))
        throw Error("stewart: anchor radii must be positive");
    if (!(home_height > 0.0)) throw Error("stewart: home_height must be positive");
}

RigidTransform pose_to_transform(const PlatformPose& pose) {
    if (!pose.finite()) throw Error("pose: non-finite");
    RigidTransform t;
    t.rotation = rot_z(deg2rad(pose.yaw_deg)) * rot_y(deg2rad(pose.pitch_deg)) *
                 rot_x(deg2rad(pose.roll_deg));
    t.translation = pose.position;
    return t;
}

ServoAngles inverse_kinematics(const PlatformPose& pose, const StewartGeometry& geom) {
    geom.validate();
    const RigidTransform t = pose_to_transform(pose.normalized());

    ServoAngles angles;
    std::vector<int> failed;
    std::ostringstream why;

    for (int leg = 0; leg < 6; ++leg) {
        const Vec3 base = geom.base_anchor(leg);
        const Vec3 anchor = t.apply(geom.platform_anchor_local(leg));
        const Vec3 l = anchor - base;

        const double beta = deg2rad(geom.horn_direction_deg(leg));
        const double h = geom.horn_length;
        const double e = 2.0 * h * l.z;
        const double f = 2.0 * h * (std::cos(beta) * l.x + std::sin(beta) * l.y);
        const double g = l.dot(l) + h * h - geom.rod_length * geom.rod_length;

        const double ef = std::hypot(e, f);
        const double disc = ef * ef - g * g;
        if (disc < -kDiscriminantTol || ef <= 0.0) {
            failed.push_back(leg);
            why << " leg" << leg << ":no-closure";
            continue;
        }
        const double ratio = std::clamp(g / ef, -1.0, 1.0);
        const double alpha = std::asin(ratio) - std::atan2(f, e);
        const double alpha_deg = rad2deg(alpha);

        if (alpha_deg < geom.servo_min_deg + kServoMarginDeg ||
            alpha_deg > geom.servo_max_deg - kServoMarginDeg) {
            failed.push_back(leg);
            why << " leg" << leg << ":servo-limit";
            continue;
        }

        // Loop closure residual; a solve that does not close is a bug, not
        // an unreachable pose.
        const Vec3 horn_dir{std::cos(beta) * std::cos(alpha), std::sin(beta) * std::cos(alpha),
                            std::sin(alpha)};
        const Vec3 horn_tip = base + horn_dir * h;
        const double residual = std::abs((anchor - horn_tip).norm() - geom.rod_length);
        if (residual > kClosureTol) {
            failed.push_back(leg);
            why << " leg" << leg << ":closure-residual";
            continue;
        }
        angles.deg[static_cast<std::size_t>(leg)] = alpha_deg;
    }

    if (!failed.empty())
        throw UnreachablePoseError("pose unreachable:" + why.str(), std::move(failed));
    return angles;
}

bool reachable(const PlatformPose& pose, const StewartGeometry& geom) {
    try {
        inverse_kinematics(pose, geom);
        return true;
    } catch (const UnreachablePoseError&) {
        return false;
    }
}

double work_base_height(const StewartGeometry& geom, const WorkEnvelope& env) {
    // Center the envelope on the platform's vertical travel. The travel is
    // asymmetric around home (the horizontal horn offset cancels as the
    // horns swing), so the midpoint sits at the rod span over the bare
    // anchor-to-anchor distance rather than at home_height.
    const Vec3 w = geom.platform_anchor_local(0) - geom.base_anchor(0);
    const double span = std::sqrt(geom.rod_length * geom.rod_length - w.x * w.x - w.y * w.y);
    return span - env.cyl_height * 0.5;
}

Vec3 workpiece_to_machine(const Vec3& p, const StewartGeometry& geom, const WorkEnvelope& env) {
    return {p.x, p.y, p.z + work_base_height(geom, env)};
}

PlatformPose felt_pose(const Vec3& target, const Vec3& approach, const StewartGeometry& geom,
                       const WorkEnvelope& env) {
    const Vec3 dir = approach.normalized();

    // Orientation: needle axis (platform +x) along the stab direction.
    const double yaw = rad2deg(std::atan2(dir.y, dir.x));
    const double pitch = rad2deg(std::asin(std::clamp(-dir.z, -1.0, 1.0)));

    // Slide the contact point along the needle line so the platform center
    // stays as close to home as the tool's reach allows.
    const Vec3 center = env.felt_center();
    const double s = std::clamp((target - center).dot(dir), -env.felt_reach, env.felt_reach);
    const Vec3 position_w = target - dir * s;

    PlatformPose pose;
    pose.position = workpiece_to_machine(position_w, geom, env);
    pose.yaw_deg = yaw;
    pose.pitch_deg = pitch;
    pose.roll_deg = 0.0;
    return pose;
}

bool felt_reach_check(const Vec3& target, const Vec3& approach, const WorkEnvelope& env,
                      const StewartGeometry& geom) {
    const double an = approach.norm();
    if (!(std::abs(an - 1.0) <= 1e-6)) throw Error("felt_reach_check: approach must be unit");

    if ((target - env.felt_center()).norm() > env.felt_reach) return false;
    if (target.z < -kApproachTol) return false;           // below the tool plane
    if (approach.z < -kApproachTol) return false;         // stabbing downward
    return reachable(felt_pose(target, approach, geom, env), geom);
}

}  // namespace feltloom

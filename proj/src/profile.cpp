#include "feltloom/profile.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "feltloom/errors.hpp"

namespace feltloom {

namespace {

constexpr double kAxisEpsilon = 1e-9;

// Visits sample points on the triangle: vertices plus a barycentric grid
// fine enough that neighboring samples are within max_spacing.
template <typename Fn>
void sample_triangle(const Vec3& a, const Vec3& b, const Vec3& c, double max_spacing, Fn&& fn) {
    const double longest = std::max({(b - a).norm(), (c - b).norm(), (a - c).norm()});
    const int n = std::max(1, static_cast<int>(std::ceil(longest / max_spacing)));
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n - i; ++j) {
            const double u = static_cast<double>(i) / n;
            const double v = static_cast<double>(j) / n;
            const double w = 1.0 - u - v;
            fn(a * w + b * u + c * v);
        }
    }
}

}  // namespace

double RadialProfile::radius_at(double z) const {
    if (r_max.empty()) return 0.0;
    if (r_max.size() == 1) return r_max.front();
    const double zc = std::clamp(z, z_samples.front(), z_samples.back());
    const double dz = z_samples[1] - z_samples[0];
    const double t = (zc - z_samples.front()) / dz;
    const auto i = std::min(static_cast<std::size_t>(std::max(0.0, std::floor(t))),
                            r_max.size() - 2);
    const double frac = std::clamp(t - static_cast<double>(i), 0.0, 1.0);
    return r_max[i] * (1.0 - frac) + r_max[i + 1] * frac;
}

void RadialProfile::validate() const {
    if (r_max.size() < 2) throw Error("profile: needs at least 2 samples");
    if (z_samples.size() != r_max.size()) throw Error("profile: sample size mismatch");
    if (!(z_max > z_min)) throw Error("profile: z_max must exceed z_min");
    for (double r : r_max)
        if (!(r >= 0.0) || !std::isfinite(r)) throw Error("profile: negative or non-finite radius");
}

void WorkEnvelope::validate() const {
    if (!(cyl_radius > 0.0) || !(cyl_height > 0.0) || !(felt_reach > 0.0))
        throw Error("envelope: all dimensions must be positive");
}

std::string ValidationReport::to_text() const {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(3);
    for (const auto& v : violations)
        out << "VIOLATION " << v.kind << " z=" << v.z << " r=" << v.r << "\n";
    return out.str();
}

GridEnvelope grid_envelope(const TriMesh& mesh, std::size_t n_z, std::size_t n_theta,
                           double max_sample_spacing) {
    if (mesh.empty()) throw Error("profile: empty mesh");
    if (n_z < 2) throw Error("profile: n_z must be >= 2");
    if (n_theta < 8) throw Error("profile: n_theta must be >= 8");

    double z_min = mesh.vertices.front().z, z_max = z_min;
    for (const auto& v : mesh.vertices) {
        z_min = std::min(z_min, v.z);
        z_max = std::max(z_max, v.z);
    }
    if (!(z_max > z_min)) {
        // Flat mesh: give it one slab's worth of thickness so slabs partition.
        z_max = z_min + 1e-6;
    }

    GridEnvelope grid;
    grid.n_z = n_z;
    grid.n_theta = n_theta;
    grid.z_min = z_min;
    grid.z_max = z_max;
    grid.r.assign(n_z * n_theta, 0.0);

    const double slab_h = (z_max - z_min) / static_cast<double>(n_z);
    const double spacing = std::min(max_sample_spacing, slab_h);
    double r_peak = 0.0;

    for (const auto& t : mesh.triangles) {
        sample_triangle(mesh.vertices[t.a], mesh.vertices[t.b], mesh.vertices[t.c], spacing,
                        [&](const Vec3& p) {
                            const double r = p.norm_xy();
                            r_peak = std::max(r_peak, r);
                            auto zi = static_cast<std::size_t>(
                                std::clamp((p.z - z_min) / slab_h, 0.0,
                                           static_cast<double>(n_z) - 1.0));
                            double theta = std::atan2(p.y, p.x);
                            if (theta < 0) theta += 2.0 * kPi;
                            auto ti = static_cast<std::size_t>(theta / (2.0 * kPi) *
                                                               static_cast<double>(n_theta));
                            if (ti >= n_theta) ti = n_theta - 1;
                            grid.at(zi, ti) = std::max(grid.at(zi, ti), r);
                        });
    }

    if (r_peak <= kAxisEpsilon)
        throw Error("profile: mesh lies entirely on the reel axis (degenerate profile)");
    return grid;
}

RadialProfile radial_profile(const TriMesh& mesh, std::size_t n_z, std::size_t n_theta,
                             double max_sample_spacing) {
    const GridEnvelope grid = grid_envelope(mesh, n_z, n_theta, max_sample_spacing);

    RadialProfile profile;
    profile.z_min = grid.z_min;
    profile.z_max = grid.z_max;
    profile.z_samples.resize(n_z);
    profile.r_max.resize(n_z);
    const double slab_h = (grid.z_max - grid.z_min) / static_cast<double>(n_z);
    for (std::size_t zi = 0; zi < n_z; ++zi) {
        profile.z_samples[zi] = grid.z_min + (static_cast<double>(zi) + 0.5) * slab_h;
        double r = 0.0;
        for (std::size_t ti = 0; ti < n_theta; ++ti) r = std::max(r, grid.at(zi, ti));
        profile.r_max[zi] = r;
    }
    profile.validate();
    return profile;
}

std::pair<double, double> bounding_cylinder(const RadialProfile& profile) {
    profile.validate();
    const double radius = *std::max_element(profile.r_max.begin(), profile.r_max.end());
    return {radius, profile.z_max - profile.z_min};
}

ValidationReport validate_envelope(const RadialProfile& profile, const WorkEnvelope& env) {
    profile.validate();
    env.validate();

    constexpr double kBoundaryTol = 1e-9;  // boundary values are accepted
    ValidationReport report;
    for (std::size_t i = 0; i < profile.slab_count(); ++i) {
        if (profile.r_max[i] > env.cyl_radius + kBoundaryTol)
            report.violations.push_back({"radius", profile.z_samples[i], profile.r_max[i]});
    }
    const double height = profile.z_max - profile.z_min;
    if (height > env.cyl_height + kBoundaryTol)
        report.violations.push_back({"height", profile.z_max, height});
    report.accepted = report.violations.empty();
    return report;
}

}  // namespace feltloom

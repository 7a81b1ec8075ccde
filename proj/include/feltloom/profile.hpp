#pragma once

#include <string>
#include <vector>

#include "feltloom/mesh.hpp"

namespace feltloom {

// Rotational envelope r(z) of a model around the reel axis (z).
struct RadialProfile {
    std::vector<double> z_samples;  // slab centers, uniformly spaced (mm)
    std::vector<double> r_max;      // max radial distance per slab (mm)
    double z_min = 0.0;
    double z_max = 0.0;

    std::size_t slab_count() const { return r_max.size(); }
    double slab_height() const {
        return (z_max - z_min) / static_cast<double>(slab_count());
    }
    // Linear interpolation of the envelope at height z (clamped to extent).
    double radius_at(double z) const;

    void validate() const;
};

// Per-(z, theta) cell envelope; drives embroidery cell classification.
struct GridEnvelope {
    std::size_t n_z = 0;
    std::size_t n_theta = 0;
    std::vector<double> r;  // n_z * n_theta, row-major by z
    double z_min = 0.0, z_max = 0.0;

    double at(std::size_t zi, std::size_t ti) const { return r[zi * n_theta + ti]; }
    double& at(std::size_t zi, std::size_t ti) { return r[zi * n_theta + ti]; }
};

// Machine working range: coiling cylinder plus the felting tool's
// hemispherical operating range.
struct WorkEnvelope {
    double cyl_radius = 25.0;  // mm
    double cyl_height = 75.0;  // mm
    double felt_reach = 40.0;  // mm, hemisphere radius

    void validate() const;
    // The felting range hemisphere is centered on the axis at mid-envelope
    // height, dome up; see stewart.hpp for the reach test.
    Vec3 felt_center() const { return {0.0, 0.0, cyl_height * 0.5}; }
};

struct EnvelopeViolation {
    std::string kind;  // "radius" | "height"
    double z = 0.0;    // slab center (radius) or extent (height), mm
    double r = 0.0;    // offending radius or height value, mm
};

struct ValidationReport {
    bool accepted = true;
    std::vector<EnvelopeViolation> violations;

    // One "VIOLATION <kind> z=<mm> r=<mm>" line per entry.
    std::string to_text() const;
};

// Samples the mesh surface (vertices plus edge/face subdivision at
// <= max_sample_spacing) into n_z slabs / n_theta sectors.
GridEnvelope grid_envelope(const TriMesh& mesh, std::size_t n_z, std::size_t n_theta,
                           double max_sample_spacing = 1.0);

// r_max per slab over the whole circumference. Requires n_z >= 2 and
// n_theta >= 8; throws Error when the mesh lies entirely on the axis.
RadialProfile radial_profile(const TriMesh& mesh, std::size_t n_z, std::size_t n_theta,
                             double max_sample_spacing = 1.0);

// (radius, height) of the smallest axis-aligned bounding cylinder.
std::pair<double, double> bounding_cylinder(const RadialProfile& profile);

// Accepts iff the bounding cylinder fits the envelope (boundary inclusive);
// violations are report entries, not faults.
ValidationReport validate_envelope(const RadialProfile& profile, const WorkEnvelope& env);

}  // namespace feltloom

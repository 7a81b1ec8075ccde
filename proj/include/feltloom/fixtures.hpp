#pragma once

#include <string>
#include <vector>

#include "feltloom/mesh.hpp"

namespace feltloom {
namespace fixtures {

// Built-in shapes sized for the machine (the same models the hardware demos
// use). All sit on the reel axis inside the felting range.

TriMesh cylinder(double radius = 15.0, double z_start = 20.0, double z_end = 55.0,
                 int segments = 48);
TriMesh sphere(double radius = 18.0, double center_z = 37.5, int slices = 32, int stacks = 24);
// Rounded slab: flat faces, tapered ends; its revolve envelope varies with z.
TriMesh phone(double width = 36.0, double depth = 14.0, double z_start = 15.0,
              double z_end = 59.0);
// Ellipsoid body with a tapered tail below it.
TriMesh fish();
// Cylinder pinched at mid-height; the deep-concave stress case.
TriMesh hourglass(double r_end = 18.0, double r_waist = 8.0, double z_start = 16.0,
                  double z_end = 58.0);
// Base cylinder with one raised boss covering a known (z, theta) footprint.
TriMesh bossed_cylinder(double base_radius = 12.0, double boss_radius = 18.0,
                        double boss_z0 = 30.0, double boss_z1 = 45.0,
                        double boss_theta0_deg = 0.0, double boss_theta1_deg = 90.0);
// 12-triangle unit cube scaled to `size`, corner at origin. Test fixture.
TriMesh cube(double size = 10.0);

std::vector<std::string> names();
bool is_fixture(const std::string& name);       // accepts "fixture:<name>"
TriMesh by_name(const std::string& name);       // throws Error when unknown

}  // namespace fixtures
}  // namespace feltloom

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "feltloom/geometry.hpp"

namespace feltloom {

struct Triangle {
    std::uint32_t a = 0, b = 0, c = 0;
};

// Triangle mesh in millimeters. Vertices are deduplicated on load and
// degenerate (zero-area) triangles are dropped; winding is preserved.
struct TriMesh {
    std::vector<Vec3> vertices;
    std::vector<Triangle> triangles;

    bool empty() const { return triangles.empty(); }
    void validate() const;  // throws Error on broken invariants
};

enum class MeshFormat { ascii_stl, binary_stl };

// Parses an STL-style triangle stream in the declared format.
// Throws ParseError (with byte offset / line) on malformed input and
// Error on an empty model.
TriMesh load_mesh(const std::string& bytes, MeshFormat format);

// Convenience file loader; sniffs ASCII vs binary from the leading bytes.
TriMesh load_mesh_file(const std::string& path);

// Used by the fixture generators and tests.
std::string write_ascii_stl(const TriMesh& mesh, const std::string& name = "model");
std::string write_binary_stl(const TriMesh& mesh);

}  // namespace feltloom

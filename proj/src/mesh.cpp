#include "feltloom/mesh.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include "feltloom/errors.hpp"

namespace feltloom {

namespace {

constexpr double kWeldTolerance = 1e-6;  // mm

// Welds vertices within tolerance and drops zero-area triangles.
class MeshBuilder {
  public:
    std::uint32_t add_vertex(const Vec3& v) {
        const Key key{quantize(v.x), quantize(v.y), quantize(v.z)};
        auto it = index_.find(key);
        if (it != index_.end()) return it->second;
        const auto id = static_cast<std::uint32_t>(mesh_.vertices.size());
        mesh_.vertices.push_back(v);
        index_.emplace(key, id);
        return id;
    }

    void add_triangle(const Vec3& a, const Vec3& b, const Vec3& c) {
        if (!a.finite() || !b.finite() || !c.finite())
            throw Error("mesh: non-finite vertex coordinate");
        const double area2 = (b - a).cross(c - a).norm();
        if (area2 <= 1e-12) return;  // degenerate
        mesh_.triangles.push_back({add_vertex(a), add_vertex(b), add_vertex(c)});
    }

    TriMesh take() { return std::move(mesh_); }

  private:
    using Key = std::tuple<long long, long long, long long>;
    static long long quantize(double v) { return std::llround(v / kWeldTolerance); }

    TriMesh mesh_;
    std::map<Key, std::uint32_t> index_;
};

struct AsciiCursor {
    const std::string& text;
    std::size_t pos = 0;
    std::size_t line = 1;

    bool next_token(std::string& out) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            if (text[pos] == '\n') ++line;
            ++pos;
        }
        if (pos >= text.size()) return false;
        const std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        out = text.substr(start, pos - start);
        return true;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("stl: " + what + " at line " + std::to_string(line), line, 0, pos);
    }

    std::string expect_token(const std::string& what) {
        std::string tok;
        if (!next_token(tok)) fail("unexpected end of stream, expected " + what);
        return tok;
    }

    void expect_keyword(const std::string& kw) {
        const std::string tok = expect_token("'" + kw + "'");
        if (tok != kw) fail("expected '" + kw + "', got '" + tok + "'");
    }

    double expect_number() {
        const std::string tok = expect_token("number");
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(tok, &used);
        } catch (const std::exception&) {
            fail("expected number, got '" + tok + "'");
        }
        if (used != tok.size()) fail("expected number, got '" + tok + "'");
        return v;
    }
};

TriMesh load_ascii(const std::string& bytes) {
    AsciiCursor cur{bytes};
    cur.expect_keyword("solid");
    // Optional model name: everything up to end of line.
    while (cur.pos < bytes.size() && bytes[cur.pos] != '\n') ++cur.pos;

    MeshBuilder builder;
    for (;;) {
        std::string tok = cur.expect_token("'facet' or 'endsolid'");
        if (tok == "endsolid") break;
        if (tok != "facet") cur.fail("expected 'facet' or 'endsolid', got '" + tok + "'");
        cur.expect_keyword("normal");
        cur.expect_number();
        cur.expect_number();
        cur.expect_number();
        cur.expect_keyword("outer");
        cur.expect_keyword("loop");
        Vec3 v[3];
        for (auto& p : v) {
            cur.expect_keyword("vertex");
            p.x = cur.expect_number();
            p.y = cur.expect_number();
            p.z = cur.expect_number();
        }
        cur.expect_keyword("endloop");
        cur.expect_keyword("endfacet");
        builder.add_triangle(v[0], v[1], v[2]);
    }

    TriMesh mesh = builder.take();
    if (mesh.empty()) throw Error("stl: empty model");
    mesh.validate();
    return mesh;
}

float read_f32(const std::string& bytes, std::size_t offset) {
    float f;
    std::memcpy(&f, bytes.data() + offset, 4);
    return f;
}

TriMesh load_binary(const std::string& bytes) {
    if (bytes.size() < 84)
        throw ParseError("stl: truncated binary header", 0, 0, bytes.size());
    std::uint32_t count = 0;
    std::memcpy(&count, bytes.data() + 80, 4);
    const std::size_t need = 84 + static_cast<std::size_t>(count) * 50;
    if (bytes.size() < need)
        throw ParseError("stl: truncated triangle records, need " + std::to_string(need) +
                             " bytes, have " + std::to_string(bytes.size()),
                         0, 0, bytes.size());

    MeshBuilder builder;
    std::size_t off = 84;
    for (std::uint32_t i = 0; i < count; ++i) {
        Vec3 v[3];
        std::size_t p = off + 12;  // skip the normal
        for (auto& vert : v) {
            vert.x = read_f32(bytes, p);
            vert.y = read_f32(bytes, p + 4);
            vert.z = read_f32(bytes, p + 8);
            p += 12;
        }
        builder.add_triangle(v[0], v[1], v[2]);
        off += 50;
    }

    TriMesh mesh = builder.take();
    if (mesh.empty()) throw Error("stl: empty model");
    mesh.validate();
    return mesh;
}

}  // namespace

void TriMesh::validate() const {
    for (const auto& t : triangles) {
        if (t.a >= vertices.size() || t.b >= vertices.size() || t.c >= vertices.size())
            throw Error("mesh: triangle index out of range");
    }
    for (const auto& v : vertices) {
        if (!v.finite()) throw Error("mesh: non-finite vertex");
    }
}

TriMesh load_mesh(const std::string& bytes, MeshFormat format) {
    return format == MeshFormat::ascii_stl ? load_ascii(bytes) : load_binary(bytes);
}

TriMesh load_mesh_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open mesh file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string bytes = buf.str();

    const bool looks_ascii = bytes.rfind("solid", 0) == 0 &&
                             bytes.find("facet") != std::string::npos;
    return load_mesh(bytes, looks_ascii ? MeshFormat::ascii_stl : MeshFormat::binary_stl);
}

std::string write_ascii_stl(const TriMesh& mesh, const std::string& name) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(6);
    out << "solid " << name << "\n";
    for (const auto& t : mesh.triangles) {
        const Vec3& a = mesh.vertices[t.a];
        const Vec3& b = mesh.vertices[t.b];
        const Vec3& c = mesh.vertices[t.c];
        const Vec3 n = (b - a).cross(c - a).normalized();
        out << "  facet normal " << n.x << " " << n.y << " " << n.z << "\n";
        out << "    outer loop\n";
        for (const Vec3& v : {a, b, c})
            out << "      vertex " << v.x << " " << v.y << " " << v.z << "\n";
        out << "    endloop\n  endfacet\n";
    }
    out << "endsolid " << name << "\n";
    return out.str();
}

std::string write_binary_stl(const TriMesh& mesh) {
    std::string out(80, '\0');
    const auto count = static_cast<std::uint32_t>(mesh.triangles.size());
    out.append(reinterpret_cast<const char*>(&count), 4);
    auto put_f32 = [&out](double v) {
        const float f = static_cast<float>(v);
        out.append(reinterpret_cast<const char*>(&f), 4);
    };
    for (const auto& t : mesh.triangles) {
        const Vec3& a = mesh.vertices[t.a];
        const Vec3& b = mesh.vertices[t.b];
        const Vec3& c = mesh.vertices[t.c];
        const Vec3 n = (b - a).cross(c - a).normalized();
        for (const Vec3& v : {n, a, b, c}) {
            put_f32(v.x);
            put_f32(v.y);
            put_f32(v.z);
        }
        out.append(2, '\0');
    }
    return out;
}

}  // namespace feltloom

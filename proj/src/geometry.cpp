#include "feltloom/geometry.hpp"

namespace feltloom {

double wrap_deg(double deg) {
    double w = std::fmod(deg, 360.0);
    if (w <= -180.0) w += 360.0;
    if (w > 180.0) w -= 360.0;
    return w;
}

Vec3 Vec3::normalized() const {
    const double n = norm();
    if (n <= 0.0) return {0, 0, 0};
    return {x / n, y / n, z / n};
}

bool Vec3::finite() const {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
}

Mat3 Mat3::operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += m[i][k] * o.m[k][j];
            r.m[i][j] = s;
        }
    return r;
}

Mat3 Mat3::transposed() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
    return r;
}

Mat3 rot_x(double rad) {
    const double c = std::cos(rad), s = std::sin(rad);
    Mat3 r;
    r.m[1][1] = c; r.m[1][2] = -s;
    r.m[2][1] = s; r.m[2][2] = c;
    return r;
}

Mat3 rot_y(double rad) {
    const double c = std::cos(rad), s = std::sin(rad);
    Mat3 r;
    r.m[0][0] = c; r.m[0][2] = s;
    r.m[2][0] = -s; r.m[2][2] = c;
    return r;
}

Mat3 rot_z(double rad) {
    const double c = std::cos(rad), s = std::sin(rad);
    Mat3 r;
    r.m[0][0] = c; r.m[0][1] = -s;
    r.m[1][0] = s; r.m[1][1] = c;
    return r;
}

}  // namespace feltloom

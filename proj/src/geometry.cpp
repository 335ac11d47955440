// SPDX-License-Identifier: Apache-2.0
//
// rischan - cascaded Tx-RIS-Rx channel simulation library
// Copyright (C) 2026 The rischan authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "rischan/geometry.hpp"
#include "rischan/constants.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rischan
{
    double wrap_azimuth(double azimuth_rad)
    {
        if (!std::isfinite(azimuth_rad))
            throw std::invalid_argument("wrap_azimuth: azimuth is not finite");
        double a = std::fmod(azimuth_rad, two_pi);
        if (a < 0.0)
            a += two_pi;
        if (a >= two_pi) // fmod of tiny negatives can round up to 2 pi
            a = 0.0;
        return a;
    }

    SphericalAngle::SphericalAngle(double zenith_rad, double azimuth_rad)
    {
        if (!std::isfinite(zenith_rad) || zenith_rad < 0.0 || zenith_rad > pi)
            throw std::invalid_argument("SphericalAngle: zenith must lie in [0, pi], got " + std::to_string(zenith_rad));
        zenith = zenith_rad;
        azimuth = wrap_azimuth(azimuth_rad);
    }

    SphericalAngle SphericalAngle::from_degrees(double zenith_deg, double azimuth_deg)
    {
        return SphericalAngle(deg2rad(zenith_deg), deg2rad(azimuth_deg));
    }

    double Position3::norm() const
    {
        return std::sqrt(x * x + y * y + z * z);
    }

    Direction3::Direction3(double x, double y, double z)
    {
        const double n = std::sqrt(x * x + y * y + z * z);
        if (!std::isfinite(n) || n == 0.0)
            throw std::invalid_argument("Direction3: cannot normalize a zero or non-finite vector");
        x_ = x / n;
        y_ = y / n;
        z_ = z / n;
    }

    Direction3 Direction3::operator-() const
    {
        Direction3 d;
        d.x_ = -x_;
        d.y_ = -y_;
        d.z_ = -z_;
        return d;
    }

    Direction3 direction_from_angles(const SphericalAngle &angle)
    {
        const double st = std::sin(angle.zenith);
        return Direction3(st * std::cos(angle.azimuth), st * std::sin(angle.azimuth), std::cos(angle.zenith));
    }

    SphericalAngle angles_from_direction(const Direction3 &dir)
    {
        const double z = std::clamp(dir.z(), -1.0, 1.0);
        if (std::abs(z) >= 1.0)
            return SphericalAngle(z > 0.0 ? 0.0 : pi, 0.0);

        // atan2 keeps full precision near the poles where acos(z) does not
        const double rho = std::hypot(dir.x(), dir.y());
        const double zenith = std::atan2(rho, z);
        if (rho == 0.0)
            return SphericalAngle(zenith, 0.0);
        return SphericalAngle(zenith, std::atan2(dir.y(), dir.x()));
    }

    Direction3 direction_between(const Position3 &from, const Position3 &to)
    {
        const Position3 v = to - from;
        if (v.norm() == 0.0)
            throw std::invalid_argument("direction_between: points coincide");
        return Direction3(v.x, v.y, v.z);
    }

    Position3 element_position(int x, int y, int size_x, int size_y, double spacing)
    {
        if (size_x < 1 || size_y < 1)
            throw std::out_of_range("element_position: panel dimensions must be >= 1");
        if (x < 1 || x > size_x || y < 1 || y > size_y)
            throw std::out_of_range("element_position: index (" + std::to_string(x) + ", " + std::to_string(y) +
                                    ") outside 1.." + std::to_string(size_x) + " x 1.." + std::to_string(size_y));
        if (!(spacing > 0.0))
            throw std::invalid_argument("element_position: spacing must be positive");

        return {(double(x) - 0.5 * (1.0 + size_x)) * spacing,
                (double(y) - 0.5 * (1.0 + size_y)) * spacing,
                0.0};
    }

    Matrix3 rotation_zyx(double bearing, double downtilt, double slant)
    {
        const double ca = std::cos(bearing), sa = std::sin(bearing);
        const double cb = std::cos(downtilt), sb = std::sin(downtilt);
        const double cc = std::cos(slant), sc = std::sin(slant);

        // Rz(a) * Ry(b) * Rx(c)
        return Matrix3{{{ca * cb, ca * sb * sc - sa * cc, ca * sb * cc + sa * sc},
                        {sa * cb, sa * sb * sc + ca * cc, sa * sb * cc - ca * sc},
                        {-sb, cb * sc, cb * cc}}};
    }

    Matrix3 Pose::rotation() const
    {
        return rotation_zyx(bearing, downtilt, slant);
    }

    static Matrix3 multiply(const Matrix3 &a, const Matrix3 &b)
    {
        Matrix3 r{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
        return r;
    }

    static std::array<double, 3> apply(const Matrix3 &m, double x, double y, double z)
    {
        return {m[0][0] * x + m[0][1] * y + m[0][2] * z,
                m[1][0] * x + m[1][1] * y + m[1][2] * z,
                m[2][0] * x + m[2][1] * y + m[2][2] * z};
    }

    static std::array<double, 3> apply_transposed(const Matrix3 &m, double x, double y, double z)
    {
        return {m[0][0] * x + m[1][0] * y + m[2][0] * z,
                m[0][1] * x + m[1][1] * y + m[2][1] * z,
                m[0][2] * x + m[1][2] * y + m[2][2] * z};
    }

    Direction3 to_local(const Pose &pose, const Direction3 &global_dir)
    {
        const auto v = apply_transposed(pose.rotation(), global_dir.x(), global_dir.y(), global_dir.z());
        return Direction3(v[0], v[1], v[2]);
    }

    Direction3 to_global(const Pose &pose, const Direction3 &local_dir)
    {
        const auto v = apply(pose.rotation(), local_dir.x(), local_dir.y(), local_dir.z());
        return Direction3(v[0], v[1], v[2]);
    }

    Position3 to_local(const Pose &pose, const Position3 &global_pos)
    {
        const Position3 d = global_pos - pose.origin;
        const auto v = apply_transposed(pose.rotation(), d.x, d.y, d.z);
        return {v[0], v[1], v[2]};
    }

    Position3 to_global(const Pose &pose, const Position3 &local_pos)
    {
        const auto v = apply(pose.rotation(), local_pos.x, local_pos.y, local_pos.z);
        return Position3{v[0], v[1], v[2]} + pose.origin;
    }

    Position3 rotate(const Matrix3 &m, const Position3 &p)
    {
        const auto v = apply(m, p.x, p.y, p.z);
        return {v[0], v[1], v[2]};
    }

    Direction3 rotate(const Matrix3 &m, const Direction3 &d)
    {
        const auto v = apply(m, d.x(), d.y(), d.z());
        return Direction3(v[0], v[1], v[2]);
    }

    Pose rotate_pose(const Matrix3 &outer, const Pose &pose)
    {
        const Matrix3 r = multiply(outer, pose.rotation());

        Pose out;
        out.origin = rotate(outer, pose.origin);
        const double sb = std::clamp(-r[2][0], -1.0, 1.0);
        out.downtilt = std::asin(sb);
        if (std::sqrt(r[2][1] * r[2][1] + r[2][2] * r[2][2]) < 1e-12)
        {
            // Gimbal lock: bearing and slant are coupled, put everything into the bearing
            out.slant = 0.0;
            out.bearing = std::atan2(-r[0][1], r[1][1]);
        }
        else
        {
            out.bearing = std::atan2(r[1][0], r[0][0]);
            out.slant = std::atan2(r[2][1], r[2][2]);
        }
        return out;
    }
}

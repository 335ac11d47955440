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

#ifndef RISCHAN_GEOMETRY_HPP
#define RISCHAN_GEOMETRY_HPP

#include <array>

namespace rischan
{
    // Zenith in [0, pi], azimuth wrapped into [0, 2 pi). Radians.
    struct SphericalAngle
    {
        double zenith = 0.0;
        double azimuth = 0.0;

        SphericalAngle() = default;

        // Throws std::invalid_argument if the zenith is outside [0, pi] or either value is not finite.
        SphericalAngle(double zenith_rad, double azimuth_rad);

        static SphericalAngle from_degrees(double zenith_deg, double azimuth_deg);

        bool operator==(const SphericalAngle &) const = default;
    };

    // Wraps any finite angle into [0, 2 pi)
    double wrap_azimuth(double azimuth_rad);

    struct Position3
    {
        double x = 0.0, y = 0.0, z = 0.0; // meters

        Position3 operator+(const Position3 &o) const { return {x + o.x, y + o.y, z + o.z}; }
        Position3 operator-(const Position3 &o) const { return {x - o.x, y - o.y, z - o.z}; }
        Position3 operator*(double s) const { return {x * s, y * s, z * s}; }
        bool operator==(const Position3 &) const = default;

        double norm() const;
    };

    // Unit vector. Construction normalizes; a zero or non-finite input throws.
    class Direction3
    {
    public:
        Direction3() = default; // +z
        Direction3(double x, double y, double z);

        double x() const { return x_; }
        double y() const { return y_; }
        double z() const { return z_; }

        double dot(const Direction3 &o) const { return x_ * o.x_ + y_ * o.y_ + z_ * o.z_; }
        double dot(const Position3 &p) const { return x_ * p.x + y_ * p.y + z_ * p.z; }
        Direction3 operator-() const;

        bool operator==(const Direction3 &) const = default;

    private:
        double x_ = 0.0, y_ = 0.0, z_ = 1.0;
    };

    // (sin(theta) cos(phi), sin(theta) sin(phi), cos(theta))
    Direction3 direction_from_angles(const SphericalAngle &angle);

    // Inverse of direction_from_angles. At the poles (|z| = 1) the azimuth is 0.
    SphericalAngle angles_from_direction(const Direction3 &dir);

    // Unit vector pointing from `from` to `to`. Throws if the points coincide.
    Direction3 direction_between(const Position3 &from, const Position3 &to);

    // Position of RIS element (x, y) in the panel frame, 1-based indices:
    //   ((x - (1 + X) / 2) d, (y - (1 + Y) / 2) d, 0)
    // The grid centroid is the origin. Throws std::out_of_range on bad indices.
    Position3 element_position(int x, int y, int size_x, int size_y, double spacing);

    using Matrix3 = std::array<std::array<double, 3>, 3>;

    // Placement and orientation of a local frame (RIS panel, antenna array).
    //
    // The orientation is given by three angles applied as intrinsic Z-Y-X rotations:
    //   R = Rz(bearing) * Ry(downtilt) * Rx(slant)
    // R maps local coordinates to global coordinates; the local z-axis is the panel normal,
    // so with all angles zero the panel faces +z. A downtilt of +90 deg makes the normal
    // point along global +x.
    struct Pose
    {
        Position3 origin;
        double bearing = 0.0;  // rad, about z
        double downtilt = 0.0; // rad, about the once-rotated y
        double slant = 0.0;    // rad, about the twice-rotated x

        Matrix3 rotation() const; // local -> global

        bool operator==(const Pose &) const = default;
    };

    Direction3 to_local(const Pose &pose, const Direction3 &global_dir);
    Direction3 to_global(const Pose &pose, const Direction3 &local_dir);
    Position3 to_local(const Pose &pose, const Position3 &global_pos);
    Position3 to_global(const Pose &pose, const Position3 &local_pos);

    // Composes an outer rotation with a pose: the result is the pose seen from a frame rotated by `outer`.
    // Used to rotate a whole scene rigidly.
    Pose rotate_pose(const Matrix3 &outer, const Pose &pose);
    Position3 rotate(const Matrix3 &m, const Position3 &p);
    Direction3 rotate(const Matrix3 &m, const Direction3 &d);
    Matrix3 rotation_zyx(double bearing, double downtilt, double slant);
}

#endif

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

#include "doctest.h"

#include "rischan/constants.hpp"
#include "rischan/geometry.hpp"
#include "rischan/random.hpp"

#include <cmath>
#include <stdexcept>

using namespace rischan;

static double norm3(const Direction3 &d)
{
    return std::sqrt(d.x() * d.x() + d.y() * d.y() + d.z() * d.z());
}

TEST_CASE("spherical angles validate zenith and wrap azimuth")
{
    CHECK_THROWS_AS(SphericalAngle(-0.1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(SphericalAngle(pi + 1e-9, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(SphericalAngle(0.1, std::nan("")), std::invalid_argument);

    CHECK(SphericalAngle(1.0, -0.5 * pi).azimuth == doctest::Approx(1.5 * pi));
    CHECK(SphericalAngle(1.0, 5.0 * pi).azimuth == doctest::Approx(pi));
    CHECK(wrap_azimuth(two_pi) == 0.0);
    const double w = wrap_azimuth(-1e-18);
    CHECK(w >= 0.0);
    CHECK(w < two_pi);
}

TEST_CASE("direction vectors")
{
    const Direction3 a = direction_from_angles(SphericalAngle::from_degrees(90.0, 0.0));
    CHECK(a.x() == doctest::Approx(1.0));
    CHECK(std::abs(a.y()) < 1e-15);
    CHECK(std::abs(a.z()) < 1e-15);

    const Direction3 b = direction_from_angles(SphericalAngle::from_degrees(45.0, 90.0));
    CHECK(b.y() == doctest::Approx(std::sqrt(0.5)));
    CHECK(b.z() == doctest::Approx(std::sqrt(0.5)));

    CHECK_THROWS(Direction3(0.0, 0.0, 0.0));
    CHECK_THROWS(direction_between({1, 2, 3}, {1, 2, 3}));

    Rng rng(11);
    for (int i = 0; i < 1000; ++i)
    {
        const SphericalAngle s(std::acos(1.0 - 2.0 * rng.uniform()), two_pi * rng.uniform());
        const Direction3 d = direction_from_angles(s);
        CHECK(std::abs(norm3(d) - 1.0) < 1e-12);
        const SphericalAngle back = angles_from_direction(d);
        CHECK(back.zenith == doctest::Approx(s.zenith).epsilon(1e-12));
        if (std::sin(s.zenith) > 1e-6)
        {
            const double dphi = std::remainder(back.azimuth - s.azimuth, two_pi);
            CHECK(std::abs(dphi) < 1e-9);
        }
    }
}

TEST_CASE("poles map to azimuth zero")
{
    CHECK(angles_from_direction(Direction3(0, 0, 1)).azimuth == 0.0);
    CHECK(angles_from_direction(Direction3(0, 0, -1)).zenith == doctest::Approx(pi));
    CHECK(angles_from_direction(Direction3(0, 0, -1)).azimuth == 0.0);
}

TEST_CASE("element positions are centered and 1-based")
{
    const Position3 p11 = element_position(1, 1, 32, 32, 0.0247);
    const Position3 pNN = element_position(32, 32, 32, 32, 0.0247);
    CHECK(p11.x == doctest::Approx(-15.5 * 0.0247));
    CHECK(pNN.x == doctest::Approx(15.5 * 0.0247));
    CHECK(p11.z == 0.0);
    CHECK(element_position(1, 1, 1, 1, 0.01).norm() == 0.0);

    double sx = 0.0, sy = 0.0;
    for (int x = 1; x <= 5; ++x)
        for (int y = 1; y <= 4; ++y)
        {
            const Position3 p = element_position(x, y, 5, 4, 0.1);
            sx += p.x;
            sy += p.y;
        }
    CHECK(std::abs(sx) < 1e-12);
    CHECK(std::abs(sy) < 1e-12);

    CHECK_THROWS_AS(element_position(0, 1, 4, 4, 0.1), std::out_of_range);
    CHECK_THROWS_AS(element_position(1, 5, 4, 4, 0.1), std::out_of_range);
}

TEST_CASE("pose rotation")
{
    SUBCASE("identity pose")
    {
        const Pose p;
        const Direction3 d(0.3, -0.2, 0.9);
        const Direction3 l = to_local(p, d);
        CHECK(l.x() == doctest::Approx(d.x()));
        CHECK(l.z() == doctest::Approx(d.z()));
    }
    SUBCASE("downtilt of 90 deg turns the normal to +x")
    {
        const Pose p{{}, 0.0, 0.5 * pi, 0.0};
        const Direction3 n = to_global(p, Direction3(0, 0, 1));
        CHECK(n.x() == doctest::Approx(1.0));
        CHECK(std::abs(n.y()) < 1e-15);
        CHECK(std::abs(n.z()) < 1e-15);
    }
    SUBCASE("bearing rotates about z")
    {
        const Pose p{{}, 0.5 * pi, 0.0, 0.0};
        const Direction3 g = to_global(p, Direction3(1, 0, 0));
        CHECK(g.y() == doctest::Approx(1.0));
    }
    SUBCASE("round trips")
    {
        Rng rng(3);
        for (int i = 0; i < 200; ++i)
        {
            const Pose p{{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(0, 9)},
                         rng.uniform(-pi, pi), rng.uniform(-pi, pi), rng.uniform(-pi, pi)};
            const Position3 g{rng.uniform(-20, 20), rng.uniform(-20, 20), rng.uniform(-20, 20)};
            const Position3 back = to_global(p, to_local(p, g));
            CHECK((back - g).norm() < 1e-12);

            const Direction3 d(rng.normal(), rng.normal(), rng.normal());
            const Direction3 bd = to_local(p, to_global(p, d));
            CHECK(std::abs(bd.dot(d) - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("site geometry seen from the wall-mounted panel")
{
    // panel at (-15, 15, 6) with its normal along +x
    const Pose pose{{-15.0, 15.0, 6.0}, 0.0, 0.5 * pi, 0.0};
    const SphericalAngle tx = angles_from_direction(to_local(pose, direction_between(pose.origin, {0, 0, 10})));
    const SphericalAngle rx = angles_from_direction(to_local(pose, direction_between(pose.origin, {-10, 30, 2})));

    // hand computation: local = (-gz, gy, gx) of the unit vector towards the site
    const double txn = std::sqrt(225.0 + 225.0 + 16.0);
    CHECK(std::cos(tx.zenith) == doctest::Approx(15.0 / txn));
    CHECK(rad2deg(tx.zenith) == doctest::Approx(45.98).epsilon(1e-3));
    CHECK(rad2deg(tx.azimuth) == doctest::Approx(255.07).epsilon(1e-3));
    CHECK(rad2deg(rx.zenith) == doctest::Approx(72.15).epsilon(1e-3));
    CHECK(rad2deg(rx.azimuth) == doctest::Approx(75.07).epsilon(1e-3));
}

TEST_CASE("rigid rotation of a scene keeps relative geometry")
{
    Rng rng(8);
    for (int i = 0; i < 100; ++i)
    {
        const Matrix3 outer = rotation_zyx(rng.uniform(-pi, pi), rng.uniform(-pi, pi), rng.uniform(-pi, pi));
        const Pose p{{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(0, 9)},
                     rng.uniform(-pi, pi), rng.uniform(-0.5 * pi, 0.5 * pi), rng.uniform(-pi, pi)};
        const Position3 g{rng.uniform(-20, 20), rng.uniform(-20, 20), rng.uniform(-20, 20)};

        const Pose rp = rotate_pose(outer, p);
        const Position3 a = to_local(p, g);
        const Position3 b = to_local(rp, rotate(outer, g));
        CHECK((a - b).norm() < 1e-9);
    }
}

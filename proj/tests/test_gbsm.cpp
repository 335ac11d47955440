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
#include "rischan/gbsm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

using namespace rischan;

namespace
{
    const Position3 tx{0, 0, 10}, ris{-15, 15, 6}, rx{-10, 30, 2};

    // Street-canyon formulas written out for a single case
    double umi_oracle(bool los, double d3, double hb, double hu, double fc)
    {
        const double dbp = 4.0 * (hb - 1.0) * (hu - 1.0) * fc / 299792458.0;
        const double d2 = std::sqrt(d3 * d3 - (hb - hu) * (hb - hu));
        const double f = fc / 1e9;
        const double pl_los = d2 <= dbp ? 32.4 + 21 * std::log10(d3) + 20 * std::log10(f)
                                        : 32.4 + 40 * std::log10(d3) + 20 * std::log10(f) -
                                              9.5 * std::log10(dbp * dbp + (hb - hu) * (hb - hu));
        if (los)
            return pl_los;
        return std::max(pl_los, 35.3 * std::log10(d3) + 22.4 + 21.3 * std::log10(f) - 0.3 * (hu - 1.5));
    }
}

TEST_CASE("configuration validation")
{
    ScenarioConfig c;
    CHECK_NOTHROW(c.validate());
    c.scenario = Scenario::UMa;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = {};
    c.lsp.asa = 0.0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = {};
    c.delay_scaling = 0.5;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c = {};
    c.clusters = 0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("street-canyon path loss")
{
    ScenarioConfig los;
    los.link_state = LinkState::LOS;
    ScenarioConfig nlos;

    for (double d : {10.0, 50.0, 200.0, 800.0, 3000.0})
        for (double fc : {3e9, 6e9, 28e9})
        {
            los.carrier = nlos.carrier = fc;
            CHECK(path_loss(los, d) == doctest::Approx(umi_oracle(true, d, 10, 1.5, fc)).epsilon(1e-12));
            CHECK(path_loss(nlos, d) == doctest::Approx(umi_oracle(false, d, 10, 1.5, fc)).epsilon(1e-12));
            CHECK(path_loss(nlos, d) >= path_loss(los, d));
        }

    SUBCASE("continuity at the breakpoint")
    {
        los.carrier = 6e9;
        const double dbp = 4.0 * 9.0 * 0.5 * 6e9 / speed_of_light;
        const double d3 = std::sqrt(dbp * dbp + 8.5 * 8.5);
        CHECK(path_loss(los, d3 * (1 - 1e-12)) == doctest::Approx(path_loss(los, d3 * (1 + 1e-12))).epsilon(1e-9));
    }
    SUBCASE("worked value")
    {
        los.carrier = 6e9;
        CHECK(path_loss(los, 50.0) == doctest::Approx(32.4 + 21 * std::log10(50.0) + 20 * std::log10(6.0)));
    }
    SUBCASE("invalid inputs")
    {
        CHECK_THROWS_AS(path_loss(los, 0.5), std::invalid_argument);
        CHECK_THROWS_AS(path_loss(los, PathLossGeometry{20.0, 10.0, 1.0}), std::invalid_argument);
        ScenarioConfig inh;
        inh.scenario = Scenario::InH;
        CHECK_THROWS_AS(path_loss(inh, 20.0), std::invalid_argument);
    }
}

TEST_CASE("cascade path loss adds in dB and multiplies in linear units")
{
    for (double a : {40.0, 83.7, 120.2})
        for (double b : {55.1, 97.0})
        {
            const double c = cascade_path_loss(a, b);
            CHECK(c == a + b);
            const double lin = std::pow(10.0, a / 10.0) * std::pow(10.0, b / 10.0);
            CHECK(std::abs(std::pow(10.0, c / 10.0) / lin - 1.0) < 1e-12);
        }
}

TEST_CASE("intra-cluster offsets")
{
    const auto a20 = ray_offsets(20);
    CHECK(a20.size() == 20);
    CHECK(a20.front() == 0.0447);
    CHECK(*std::max_element(a20.begin(), a20.end()) == 2.1551);
    for (int m : {2, 5, 7, 40})
    {
        const auto a = ray_offsets(m);
        double ss = 0.0, s = 0.0;
        for (double v : a)
        {
            ss += v * v;
            s += v;
        }
        CHECK(std::sqrt(ss / m) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(s) < 1e-12);
    }
    CHECK(ray_offsets(1) == std::vector<double>{0.0});
    CHECK_THROWS_AS(ray_offsets(0), std::invalid_argument);
}

TEST_CASE("angle sampling")
{
    Rng rng(3);
    const SphericalAngle mean = SphericalAngle::from_degrees(80, 30);

    SUBCASE("azimuth circular std and zenith std")
    {
        const auto s = sample_angles(mean, {20.0, 5.0}, 100000, rng);
        std::vector<double> az;
        double zs = 0.0;
        for (const auto &a : s)
        {
            az.push_back(a.azimuth);
            zs += (a.zenith - mean.zenith) * (a.zenith - mean.zenith);
        }
        CHECK(rad2deg(circular_std(az)) == doctest::Approx(20.0).epsilon(0.03));
        CHECK(rad2deg(std::sqrt(zs / double(s.size()))) == doctest::Approx(5.0).epsilon(0.03));
    }
    SUBCASE("zenith clipped to [0, pi]")
    {
        const auto s = sample_angles(SphericalAngle::from_degrees(2, 0), {10.0, 30.0}, 20000, rng);
        for (const auto &a : s)
        {
            REQUIRE(a.zenith >= 0.0);
            REQUIRE(a.zenith <= pi);
        }
    }
    SUBCASE("zero spread returns the mean")
    {
        for (const auto &a : sample_angles(mean, {0.0, 0.0}, 10, rng))
        {
            CHECK(a.zenith == mean.zenith);
            CHECK(a.azimuth == doctest::Approx(mean.azimuth));
        }
        CHECK_THROWS_AS(sample_angles(mean, {-1.0, 0.0}, 3, rng), std::invalid_argument);
    }
}

TEST_CASE("cluster delays and powers")
{
    Rng rng(4);
    double ds_sq = 0.0;
    const int reps = 4000;
    for (int r = 0; r < reps; ++r)
    {
        const auto p = sample_powers_delays(5, 100e-9, rng);
        REQUIRE(p.delays.size() == 5);
        CHECK(p.delays.front() == 0.0);
        CHECK(std::is_sorted(p.delays.begin(), p.delays.end()));
        CHECK(std::accumulate(p.powers.begin(), p.powers.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-12));

        double m1 = 0, m2 = 0;
        for (std::size_t i = 0; i < 5; ++i)
        {
            m1 += p.powers[i] * p.delays[i];
            m2 += p.powers[i] * p.delays[i] * p.delays[i];
        }
        ds_sq += m2 - m1 * m1;
    }
    // rms over realizations of the power-weighted delay spread; with five clusters and
    // r_tau = 2.1 it settles slightly below the configured value
    const double ds = std::sqrt(ds_sq / reps);
    CHECK(ds == doctest::Approx(100e-9).epsilon(0.10));
}

TEST_CASE("XPR is log-normal")
{
    Rng rng(6);
    const auto k = sample_xpr(8.0, 3.0, 100000, rng);
    double s = 0, s2 = 0;
    for (double v : k)
    {
        const double db = 10.0 * std::log10(v);
        s += db;
        s2 += db * db;
    }
    const double mean = s / double(k.size());
    CHECK(mean == doctest::Approx(8.0).epsilon(0.01));
    CHECK(std::sqrt(s2 / double(k.size()) - mean * mean) == doctest::Approx(3.0).epsilon(0.02));
}

TEST_CASE("stochastic sub-channel")
{
    ScenarioConfig cfg;
    cfg.seed = 77;

    SUBCASE("structure")
    {
        const SubChannel ch = generate_subchannel(cfg, tx, ris);
        CHECK(ch.rays.size() == 100);
        CHECK_FALSE(ch.los_ray.has_value());
        CHECK(ch.total_power() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(ch.link_state == LinkState::NLOS);
        for (const Ray &r : ch.rays)
        {
            CHECK(r.delay >= 0.0);
            CHECK(r.xpr > 0.0);
            for (double ph : r.phases)
            {
                CHECK(ph >= 0.0);
                CHECK(ph < two_pi);
            }
        }
        const double d = (ris - tx).norm();
        CHECK(ch.path_loss_db == doctest::Approx(umi_oracle(false, d, 10.0, 6.0, 6e9)));
    }
    SUBCASE("line of sight adds a Rician ray")
    {
        cfg.link_state = LinkState::LOS;
        const SubChannel ch = generate_subchannel(cfg, tx, ris);
        REQUIRE(ch.los_ray.has_value());
        const double k = std::pow(10.0, 0.9);
        CHECK(ch.los_ray->power == doctest::Approx(k / (k + 1.0)));
        CHECK(ch.total_power() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(ch.all_rays().size() == 101);
        CHECK(ch.all_rays().front().cluster == -1);
        CHECK(std::isinf(ch.los_ray->xpr));
    }
    SUBCASE("powers sum to one for many seeds")
    {
        for (std::uint64_t s = 0; s < 300; ++s)
        {
            cfg.seed = s;
            cfg.link_state = (s % 2) ? LinkState::LOS : LinkState::NLOS;
            CHECK(std::abs(generate_subchannel(cfg, tx, ris).total_power() - 1.0) < 1e-9);
        }
    }
    SUBCASE("seed determinism")
    {
        const SubChannel a = generate_subchannel(cfg, tx, ris);
        const SubChannel b = generate_subchannel(cfg, tx, ris);
        CHECK(a == b);
        cfg.seed = 78;
        CHECK_FALSE(generate_subchannel(cfg, tx, ris) == a);
    }
    SUBCASE("arrival angles gather around the line of sight")
    {
        cfg.lsp.asa = 5.0;
        const SubChannel ch = generate_subchannel(cfg, tx, ris);
        const SphericalAngle los = angles_from_direction(direction_between(ris, tx));
        double w = 0.0;
        for (const Ray &r : ch.rays)
            w += r.power * std::cos(std::remainder(r.arrival.azimuth - los.azimuth, two_pi));
        CHECK(w > 0.9);
    }
    SUBCASE("coincident endpoints rejected")
    {
        CHECK_THROWS_AS(generate_subchannel(cfg, tx, tx), std::invalid_argument);
    }
}

TEST_CASE("geometric line-of-sight ray")
{
    const Ray r = geometric_los_ray(ris, rx, 6e9);
    const Direction3 fwd = direction_between(ris, rx);
    CHECK(direction_from_angles(r.departure).dot(fwd) == doctest::Approx(1.0));
    CHECK(direction_from_angles(r.arrival).dot(fwd) == doctest::Approx(-1.0));
    CHECK(std::remainder(r.phases[3] - r.phases[0] - pi, two_pi) == doctest::Approx(0.0).epsilon(1e-12));
    const double expect = -two_pi * (rx - ris).norm() / wavelength(6e9);
    CHECK(std::remainder(r.phases[0] - expect, two_pi) == doctest::Approx(0.0).epsilon(1e-9));

    ScenarioConfig cfg;
    const SubChannel ch = los_only_subchannel(cfg, ris, rx);
    CHECK(ch.rays.empty());
    CHECK(ch.all_rays().size() == 1);
    CHECK(ch.path_loss_db == doctest::Approx(umi_oracle(true, (rx - ris).norm(), 6.0, 2.0, 6e9)));
    CHECK(rms_delay_spread(ch) == 0.0);
}

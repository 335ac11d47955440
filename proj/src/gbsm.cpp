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

#include "rischan/gbsm.hpp"
#include "rischan/constants.hpp"

#include <boost/math/distributions/normal.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rischan
{
    const char *to_string(Scenario s)
    {
        switch (s)
        {
        case Scenario::UMi:
            return "UMi";
        case Scenario::UMa:
            return "UMa";
        case Scenario::InH:
            return "InH";
        }
        return "?";
    }

    const char *to_string(LinkState s)
    {
        return s == LinkState::LOS ? "los" : "nlos";
    }

    void LargeScaleParams::validate() const
    {
        if (!(ds > 0.0) || !std::isfinite(ds))
            throw std::invalid_argument("LargeScaleParams: delay spread must be positive");
        for (double s : {asa, zsa, asd, zsd})
            if (!(s > 0.0) || !std::isfinite(s))
                throw std::invalid_argument("LargeScaleParams: angle spreads must be positive");
        if (!std::isfinite(sf) || !std::isfinite(k))
            throw std::invalid_argument("LargeScaleParams: SF and K must be finite");
    }

    void ScenarioConfig::validate() const
    {
        if (scenario != Scenario::UMi)
            throw std::invalid_argument(std::string("ScenarioConfig: unsupported scenario ") + to_string(scenario));
        if (!(carrier > 0.0))
            throw std::invalid_argument("ScenarioConfig: carrier frequency must be positive");
        if (clusters < 1 || rays_per_cluster < 1)
            throw std::invalid_argument("ScenarioConfig: cluster and ray counts must be >= 1");
        lsp.validate();
        if (!(xpr_std_db >= 0.0) || !std::isfinite(xpr_mean_db))
            throw std::invalid_argument("ScenarioConfig: invalid XPR distribution");
        if (!(delay_scaling >= 1.0))
            throw std::invalid_argument("ScenarioConfig: delay scaling r_tau must be >= 1");
        if (!(cluster_shadowing_db >= 0.0))
            throw std::invalid_argument("ScenarioConfig: cluster shadowing must be >= 0");
        if (!(intra_cluster_ratio >= 0.0))
            throw std::invalid_argument("ScenarioConfig: intra-cluster ratio must be >= 0");
    }

    std::vector<Ray> SubChannel::all_rays() const
    {
        std::vector<Ray> out;
        out.reserve(rays.size() + 1);
        if (los_ray)
            out.push_back(*los_ray);
        out.insert(out.end(), rays.begin(), rays.end());
        return out;
    }

    double SubChannel::total_power() const
    {
        double p = los_ray ? los_ray->power : 0.0;
        for (const auto &r : rays)
            p += r.power;
        return p;
    }

    // --------------------------------------------------------------------------------------------
    // Path loss

    static double umi_los(double d3d, double d2d, double fc_ghz, double h_bs, double h_ut, double fc_hz)
    {
        const double d_bp = 4.0 * (h_bs - 1.0) * (h_ut - 1.0) * fc_hz / speed_of_light;
        if (d2d <= d_bp)
            return 32.4 + 21.0 * std::log10(d3d) + 20.0 * std::log10(fc_ghz);
        const double dh = h_bs - h_ut;
        return 32.4 + 40.0 * std::log10(d3d) + 20.0 * std::log10(fc_ghz) - 9.5 * std::log10(d_bp * d_bp + dh * dh);
    }

    double path_loss(const ScenarioConfig &scenario, const PathLossGeometry &g)
    {
        if (scenario.scenario != Scenario::UMi)
            throw std::invalid_argument(std::string("path_loss: unsupported scenario ") + to_string(scenario.scenario));
        if (!(g.distance3d >= 1.0))
            throw std::invalid_argument("path_loss: 3D distance must be >= 1 m");
        if (!(g.h_bs > 1.0) || !(g.h_ut > 1.0))
            throw std::invalid_argument("path_loss: antenna heights must exceed the 1 m effective environment height");
        if (!(scenario.carrier > 0.0))
            throw std::invalid_argument("path_loss: carrier frequency must be positive");

        const double dh = g.h_bs - g.h_ut;
        const double d2d = std::sqrt(std::max(0.0, g.distance3d * g.distance3d - dh * dh));
        const double fc_ghz = scenario.carrier / 1e9;

        const double los = umi_los(g.distance3d, d2d, fc_ghz, g.h_bs, g.h_ut, scenario.carrier);
        if (scenario.link_state == LinkState::LOS)
            return los;

        const double nlos = 35.3 * std::log10(g.distance3d) + 22.4 + 21.3 * std::log10(fc_ghz) - 0.3 * (g.h_ut - 1.5);
        return std::max(los, nlos);
    }

    double path_loss(const ScenarioConfig &scenario, double distance3d)
    {
        return path_loss(scenario, PathLossGeometry{distance3d, 10.0, 1.5});
    }

    double cascade_path_loss(double pl1_db, double pl2_db)
    {
        return pl1_db + pl2_db;
    }

    // --------------------------------------------------------------------------------------------
    // Small-scale samplers

    std::vector<SphericalAngle> sample_angles(const SphericalAngle &mean, AngularSpread spread, std::size_t count, Rng &rng)
    {
        if (!(spread.azimuth_deg >= 0.0) || !(spread.zenith_deg >= 0.0))
            throw std::invalid_argument("sample_angles: spreads must be >= 0");

        const double sigma_az = deg2rad(spread.azimuth_deg);
        const double scale_zen = deg2rad(spread.zenith_deg) / std::sqrt(2.0);

        std::vector<double> az(count), zen(count);
        for (auto &a : az)
            a = mean.azimuth + sigma_az * rng.normal();
        for (auto &z : zen)
            z = std::clamp(mean.zenith + rng.laplace(scale_zen), 0.0, pi);

        std::vector<SphericalAngle> out;
        out.reserve(count);
        for (std::size_t i = 0; i < count; ++i)
            out.emplace_back(zen[i], az[i]);
        return out;
    }

    std::vector<double> ray_offsets(int m)
    {
        if (m < 1)
            throw std::invalid_argument("ray_offsets: need at least one ray");
        if (m == 20)
            return {0.0447, -0.0447, 0.1413, -0.1413, 0.2492, -0.2492, 0.3715, -0.3715, 0.5129, -0.5129,
                    0.6797, -0.6797, 0.8844, -0.8844, 1.1481, -1.1481, 1.5195, -1.5195, 2.1551, -2.1551};
        if (m == 1)
            return {0.0};

        const boost::math::normal_distribution<double> gauss;
        std::vector<double> q(static_cast<std::size_t>(m));
        double ss = 0.0;
        for (int i = 0; i < m; ++i)
        {
            q[std::size_t(i)] = boost::math::quantile(gauss, (double(i) + 0.5) / double(m));
            ss += q[std::size_t(i)] * q[std::size_t(i)];
        }
        const double rms = std::sqrt(ss / double(m));
        for (auto &v : q)
            v /= rms;
        return q;
    }

    ClusterProfile sample_powers_delays(int n, double ds, Rng &rng, double delay_scaling, double cluster_shadowing_db)
    {
        if (n < 1)
            throw std::invalid_argument("sample_powers_delays: need at least one cluster");
        if (!(ds > 0.0))
            throw std::invalid_argument("sample_powers_delays: delay spread must be positive");

        ClusterProfile p;
        p.delays.resize(std::size_t(n));
        for (auto &t : p.delays)
            t = -delay_scaling * ds * std::log1p(-rng.uniform());
        std::sort(p.delays.begin(), p.delays.end());
        const double t0 = p.delays.front();
        for (auto &t : p.delays)
            t -= t0;

        p.powers.resize(std::size_t(n));
        for (std::size_t i = 0; i < p.powers.size(); ++i)
        {
            const double z = cluster_shadowing_db * rng.normal();
            p.powers[i] = std::exp(-p.delays[i] * (delay_scaling - 1.0) / (delay_scaling * ds)) * std::pow(10.0, -z / 10.0);
        }
        const double total = std::accumulate(p.powers.begin(), p.powers.end(), 0.0);
        for (auto &v : p.powers)
            v /= total;
        return p;
    }

    std::vector<double> sample_xpr(double mean_db, double std_db, std::size_t count, Rng &rng)
    {
        if (!(std_db >= 0.0))
            throw std::invalid_argument("sample_xpr: standard deviation must be >= 0");
        std::vector<double> k(count);
        for (auto &v : k)
            v = std::pow(10.0, (mean_db + std_db * rng.normal()) / 10.0);
        return k;
    }

    // --------------------------------------------------------------------------------------------
    // Sub-channel assembly

    Ray geometric_los_ray(const Position3 &start, const Position3 &end, double carrier)
    {
        const Direction3 fwd = direction_between(start, end);
        const double dist = (end - start).norm();
        const double phase = wrap_azimuth(-two_pi * dist / wavelength(carrier));

        Ray r;
        r.cluster = -1;
        r.departure = angles_from_direction(fwd);
        r.arrival = angles_from_direction(-fwd);
        r.power = 1.0;
        r.delay = 0.0;
        r.xpr = std::numeric_limits<double>::infinity();
        r.phases = {phase, 0.0, 0.0, wrap_azimuth(phase + pi)};
        return r;
    }

    static double link_path_loss(const ScenarioConfig &cfg, LinkState state, const Position3 &start, const Position3 &end)
    {
        ScenarioConfig c = cfg;
        c.link_state = state;
        const PathLossGeometry g{(end - start).norm(), std::max(start.z, end.z), std::min(start.z, end.z)};
        return path_loss(c, g) + cfg.lsp.sf;
    }

    // Adds a zenith offset and keeps the result inside [0, pi]
    static double offset_zenith(double zenith, double offset)
    {
        return std::clamp(zenith + offset, 0.0, pi);
    }

    static std::vector<std::size_t> random_permutation(std::size_t m, Rng &rng)
    {
        std::vector<std::size_t> idx(m);
        std::iota(idx.begin(), idx.end(), std::size_t(0));
        for (std::size_t i = m; i > 1; --i) // Fisher-Yates
            std::swap(idx[i - 1], idx[rng.below(i)]);
        return idx;
    }

    SubChannel generate_subchannel(const ScenarioConfig &cfg, const Position3 &start, const Position3 &end, Rng &rng)
    {
        cfg.validate();
        if (start == end)
            throw std::invalid_argument("generate_subchannel: start and end coincide");

        const auto n = std::size_t(cfg.clusters);
        const auto m = std::size_t(cfg.rays_per_cluster);
        const LargeScaleParams &lsp = cfg.lsp;

        SubChannel ch;
        ch.start = start;
        ch.end = end;
        ch.link_state = cfg.link_state;
        ch.path_loss_db = link_path_loss(cfg, cfg.link_state, start, end);

        const Ray los = geometric_los_ray(start, end, cfg.carrier);

        const ClusterProfile profile = sample_powers_delays(cfg.clusters, lsp.ds, rng, cfg.delay_scaling, cfg.cluster_shadowing_db);
        const auto dep_centers = sample_angles(los.departure, {lsp.asd, lsp.zsd}, n, rng);
        const auto arr_centers = sample_angles(los.arrival, {lsp.asa, lsp.zsa}, n, rng);

        std::vector<std::array<std::vector<std::size_t>, 3>> coupling(n);
        for (auto &c : coupling)
            for (auto &perm : c)
                perm = random_permutation(m, rng);

        const std::vector<double> xpr = sample_xpr(cfg.xpr_mean_db, cfg.xpr_std_db, n * m, rng);

        const std::vector<double> alpha = ray_offsets(cfg.rays_per_cluster);
        const double c_asd = deg2rad(cfg.intra_cluster_ratio * lsp.asd);
        const double c_zsd = deg2rad(cfg.intra_cluster_ratio * lsp.zsd);
        const double c_asa = deg2rad(cfg.intra_cluster_ratio * lsp.asa);
        const double c_zsa = deg2rad(cfg.intra_cluster_ratio * lsp.zsa);

        double stochastic_scale = 1.0;
        if (cfg.link_state == LinkState::LOS)
        {
            const double k_lin = std::pow(10.0, lsp.k / 10.0);
            stochastic_scale = 1.0 / (k_lin + 1.0);
            Ray r = los;
            r.power = k_lin / (k_lin + 1.0);
            ch.los_ray = r;
        }

        ch.rays.reserve(n * m);
        for (std::size_t c = 0; c < n; ++c)
        {
            const auto &[perm_aod, perm_zoa, perm_zod] = coupling[c];
            for (std::size_t i = 0; i < m; ++i)
            {
                Ray r;
                r.cluster = int(c);
                r.departure = SphericalAngle(offset_zenith(dep_centers[c].zenith, c_zsd * alpha[perm_zod[i]]),
                                             dep_centers[c].azimuth + c_asd * alpha[perm_aod[i]]);
                r.arrival = SphericalAngle(offset_zenith(arr_centers[c].zenith, c_zsa * alpha[perm_zoa[i]]),
                                           arr_centers[c].azimuth + c_asa * alpha[i]);
                r.power = stochastic_scale * profile.powers[c] / double(m);
                r.delay = profile.delays[c];
                r.xpr = xpr[c * m + i];
                ch.rays.push_back(r);
            }
        }

        for (auto &r : ch.rays)
            for (auto &ph : r.phases)
                ph = rng.uniform(0.0, two_pi);

        return ch;
    }

    SubChannel generate_subchannel(const ScenarioConfig &cfg, const Position3 &start, const Position3 &end)
    {
        Rng rng(cfg.seed);
        return generate_subchannel(cfg, start, end, rng);
    }

    SubChannel los_only_subchannel(const ScenarioConfig &cfg, const Position3 &start, const Position3 &end)
    {
        if (start == end)
            throw std::invalid_argument("los_only_subchannel: start and end coincide");
        SubChannel ch;
        ch.start = start;
        ch.end = end;
        ch.link_state = LinkState::LOS;
        ch.path_loss_db = link_path_loss(cfg, LinkState::LOS, start, end);
        ch.los_ray = geometric_los_ray(start, end, cfg.carrier);
        return ch;
    }

    double rms_delay_spread(const SubChannel &ch)
    {
        double p = 0.0, pt = 0.0, pt2 = 0.0;
        for (const auto &r : ch.all_rays())
        {
            p += r.power;
            pt += r.power * r.delay;
            pt2 += r.power * r.delay * r.delay;
        }
        if (p <= 0.0)
            return 0.0;
        const double mean = pt / p;
        return std::sqrt(std::max(0.0, pt2 / p - mean * mean));
    }

    double circular_std(const std::vector<double> &azimuths)
    {
        if (azimuths.empty())
            throw std::invalid_argument("circular_std: no samples");
        std::complex<double> s = 0.0;
        for (double a : azimuths)
            s += std::polar(1.0, a);
        const double r = std::abs(s) / double(azimuths.size());
        return std::sqrt(-2.0 * std::log(std::min(1.0, r)));
    }
}

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

#ifndef RISCHAN_GBSM_HPP
#define RISCHAN_GBSM_HPP

#include "rischan/geometry.hpp"
#include "rischan/random.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rischan
{
    enum class Scenario
    {
        UMi, // urban micro, street canyon
        UMa,
        InH
    };

    enum class LinkState
    {
        LOS,
        NLOS
    };

    const char *to_string(Scenario s);
    const char *to_string(LinkState s);

    // Large-scale parameters of one link. These are taken as given values, not drawn.
    struct LargeScaleParams
    {
        double ds = 100e-9; // s, delay spread
        double asa = 20.0;  // deg, azimuth spread of arrival
        double zsa = 5.0;   // deg, zenith spread of arrival
        double asd = 20.0;  // deg, azimuth spread of departure
        double zsd = 5.0;   // deg, zenith spread of departure
        double sf = 0.0;    // dB, shadow fading added to the path loss
        double k = 9.0;     // dB, Rician K-factor (LOS links only)

        void validate() const;
        bool operator==(const LargeScaleParams &) const = default;
    };

    struct ScenarioConfig
    {
        Scenario scenario = Scenario::UMi;
        double carrier = 6e9; // Hz
        LinkState link_state = LinkState::NLOS;
        int clusters = 5;
        int rays_per_cluster = 20;
        LargeScaleParams lsp;

        double xpr_mean_db = 8.0;
        double xpr_std_db = 3.0;
        double delay_scaling = 2.1;        // r_tau, delay distribution proportionality factor
        double cluster_shadowing_db = 3.0; // per-cluster shadowing std
        double intra_cluster_ratio = 0.4;  // ray offset scale as a fraction of the link angle spread

        std::uint64_t seed = 1;

        void validate() const;
        bool operator==(const ScenarioConfig &) const = default;
    };

    // One multipath component. Departure angles are seen from the link start, arrival angles from
    // the link end, both pointing back along the path (arrival angles point towards the source).
    struct Ray
    {
        int cluster = 0;            // 0-based; -1 for the deterministic LOS ray
        SphericalAngle departure;   // (ZoD, AoD), global frame
        SphericalAngle arrival;     // (ZoA, AoA), global frame
        double power = 0.0;         // normalized
        double delay = 0.0;         // s
        double xpr = 1.0;           // linear kappa; +inf for the LOS ray
        std::array<double, 4> phases{}; // vv, vh, hv, hh, rad in [0, 2 pi)

        bool operator==(const Ray &) const = default;
    };

    struct SubChannel
    {
        Position3 start;
        Position3 end;
        LinkState link_state = LinkState::NLOS;
        double path_loss_db = 0.0;
        std::optional<Ray> los_ray;
        std::vector<Ray> rays; // stochastic rays, grouped by cluster, clusters sorted by delay

        // LOS ray first (when present), then the stochastic rays
        std::vector<Ray> all_rays() const;
        double total_power() const;

        bool operator==(const SubChannel &) const = default;
    };

    struct PathLossGeometry
    {
        double distance3d = 0.0; // m
        double h_bs = 10.0;      // m, height of the higher end
        double h_ut = 1.5;       // m, height of the lower end
    };

    // Street-canyon UMi path loss in dB, LOS or NLOS per `scenario.link_state`, without shadow fading.
    //   LOS:  PL1 = 32.4 + 21 log10(d3D) + 20 log10(fc/GHz)                      d2D <= d'BP
    //         PL2 = 32.4 + 40 log10(d3D) + 20 log10(fc/GHz)
    //               - 9.5 log10(d'BP^2 + (h_BS - h_UT)^2)                         d2D >  d'BP
    //         d'BP = 4 (h_BS - 1)(h_UT - 1) fc / c
    //   NLOS: max(PL_LOS, 35.3 log10(d3D) + 22.4 + 21.3 log10(fc/GHz) - 0.3 (h_UT - 1.5))
    // Throws std::invalid_argument for unsupported scenarios, d3D < 1 m, or heights <= 1 m.
    double path_loss(const ScenarioConfig &scenario, const PathLossGeometry &geometry);

    // Same with the default heights (10 m, 1.5 m)
    double path_loss(const ScenarioConfig &scenario, double distance3d);

    // Path loss of the Tx-RIS-Rx cascade in dB: the linear losses multiply
    double cascade_path_loss(double pl1_db, double pl2_db);

    struct AngularSpread
    {
        double azimuth_deg;
        double zenith_deg;
    };

    // `count` angles around `mean`: azimuth from a wrapped Gaussian with standard deviation
    // spread.azimuth_deg, zenith from a Laplacian with standard deviation spread.zenith_deg
    // (scale = std / sqrt 2), clipped to [0, pi]. All azimuths are drawn first, then all zeniths.
    // A zero spread returns the mean; negative spreads throw.
    std::vector<SphericalAngle> sample_angles(const SphericalAngle &mean, AngularSpread spread, std::size_t count, Rng &rng);

    // Unit-rms intra-cluster offsets for m equal-power rays. m = 20 uses the standard offset table
    // (+-0.0447 ... +-2.1551); other m use Gaussian quantiles at (i + 1/2) / m rescaled to unit rms.
    std::vector<double> ray_offsets(int m);

    struct ClusterProfile
    {
        std::vector<double> powers; // per cluster, sums to 1; each ray carries power / m
        std::vector<double> delays; // per cluster, s, ascending, first is 0
    };

    // Exponential delay profile: tau'_n = -r_tau DS ln(U_n), sorted and shifted to start at 0;
    // powers P_n ~ exp(-tau_n (r_tau - 1) / (r_tau DS)) 10^(-Z_n / 10), Z_n ~ N(0, shadowing),
    // normalized to sum 1. Draws all n uniforms, then all n normals.
    ClusterProfile sample_powers_delays(int n, double ds, Rng &rng,
                                        double delay_scaling = 2.1, double cluster_shadowing_db = 3.0);

    // kappa = 10^(X / 10), X ~ N(mean_db, std_db)
    std::vector<double> sample_xpr(double mean_db, double std_db, std::size_t count, Rng &rng);

    // One stochastic sub-channel from `start` to `end`.
    //
    // Draw order: cluster delays, cluster shadowing, departure cluster angles (all azimuths, then
    // zeniths), arrival cluster angles, per-cluster ray coupling permutations (AoD, ZoA, ZoD
    // against AoA), XPRs, then the four initial phases of every ray. Cluster angle centers are
    // spread around the geometric line-of-sight directions. LOS links add a deterministic ray at
    // the geometric angles with power K/(K+1) and scale the stochastic rays by 1/(K+1).
    SubChannel generate_subchannel(const ScenarioConfig &cfg, const Position3 &start, const Position3 &end, Rng &rng);

    // Same, seeded from cfg.seed
    SubChannel generate_subchannel(const ScenarioConfig &cfg, const Position3 &start, const Position3 &end);

    // Deterministic single-ray LOS link (power 1), path loss evaluated as LOS
    SubChannel los_only_subchannel(const ScenarioConfig &cfg, const Position3 &start, const Position3 &end);

    // The geometric LOS ray between two points (power 1, zero delay, kappa = +inf, phases from the
    // free-space phase -2 pi d / lambda with the hh entry shifted by pi)
    Ray geometric_los_ray(const Position3 &start, const Position3 &end, double carrier);

    // Power-weighted rms delay spread of a sub-channel
    double rms_delay_spread(const SubChannel &ch);

    // Circular standard deviation sqrt(-2 ln |mean(exp(j phi))|), radians
    double circular_std(const std::vector<double> &azimuths);
}

#endif

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

#ifndef RISCHAN_EXPERIMENTS_HPP
#define RISCHAN_EXPERIMENTS_HPP

#include "rischan/cascade.hpp"
#include "rischan/gbsm.hpp"
#include "rischan/ris_panel.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rischan
{
    struct LinkBudget
    {
        double tx_power_dbm = 43.0;
        double noise_dbm = -117.0;
        double cascade_pl_db = 0.0;

        bool operator==(const LinkBudget &) const = default;
    };

    // SNR = P0 + 20 log10|H| - PL - N0 in dB; -inf when H = 0
    double snr(const LinkBudget &budget, cdouble h);

    template <class Row>
    struct SweepResult
    {
        std::vector<Row> rows;
        std::uint64_t seed = 0;
        std::string config_hash; // filled in by the caller that owns the configuration
    };

    // Site of the configuration and angle-spread sweeps. The panel sits at `ris` with the
    // orientation in `ris_pose` (its origin is overwritten by `ris`).
    struct SiteGeometry
    {
        Position3 tx{0.0, 0.0, 10.0};
        Position3 ris{-15.0, 15.0, 6.0};
        Position3 rx{-10.0, 30.0, 2.0};
        Pose ris_pose{{}, 0.0, 0.5 * pi, 0.0}; // broadside along +x

        Pose pose() const;
        // Geometric LOS directions seen from the panel, in its local frame
        Direction3 local_towards_tx() const;
        Direction3 local_towards_rx() const;

        bool operator==(const SiteGeometry &) const = default;
    };

    // Panel with the element geometry of the default configuration at `carrier`
    PanelConfig table_panel(double carrier);

    // ---- Radiation pattern comparison ----

    struct PatternSetup
    {
        PanelConfig panel = table_panel(6e9);
        SphericalAngle incidence = SphericalAngle::from_degrees(60.0, 0.0);
        SphericalAngle target = SphericalAngle::from_degrees(30.0, 270.0);
        Strategy strategy = Strategy::Optimal;
        double step_deg = 0.5;
        Transcription transcription = default_transcription;
    };

    struct PatternRow
    {
        Strategy strategy;
        PhaseModel model;
        char pol_in;  // 'v' or 'h'
        char pol_out; // 'v' or 'h'
        double theta_out_deg; // signed zenith in the plane of the target azimuth
        double gain_db;
    };

    // Zenith cut through the target azimuth for both phase models and all four polarization
    // pairs. All curves share one reference, the largest gain over the whole experiment, so
    // differences between curves are preserved.
    SweepResult<PatternRow> run_pattern_experiment(const PatternSetup &setup);

    // 20 log10 |F_vv| at the target direction (unnormalized)
    double target_gain_db(const PatternSetup &setup, PhaseModel model);

    // ---- Panel size and strategy sweep ----

    struct ConfigSweepSetup
    {
        SiteGeometry site;
        std::vector<double> freqs_hz{3e9, 6e9};
        std::vector<int> sides{1, 2, 4, 8, 16, 32, 64};
        std::vector<Strategy> strategies{Strategy::Optimal, Strategy::OneBit, Strategy::Specular};
        double element_ratio = 0.312; // a = b = ratio * lambda
        double spacing_ratio = 0.494; // d = ratio * lambda
        PhaseModel model = PhaseModel::NonIdeal;
        ScenarioConfig scenario; // scenario and shadowing of both links
        LinkBudget budget;       // cascade_pl_db is replaced per point
        Transcription transcription = default_transcription;
    };

    struct SnrRow
    {
        double freq_ghz;
        int n_side;
        Strategy strategy;
        double snr_db;
    };

    // Both links are single geometric LOS rays; the beam faces the LOS angle at both ends
    SweepResult<SnrRow> run_config_sweep(const ConfigSweepSetup &setup);

    // ---- Angle spread sweep ----

    struct AsaSweepSetup
    {
        SiteGeometry site;
        PanelConfig panel = table_panel(6e9); // pose is taken from `site`
        ScenarioConfig tx_ris;                // NLOS; carrier sets the evaluation frequency
        std::vector<double> asa_deg{1.0, 5.0, 10.0};
        std::vector<PhaseModel> models{PhaseModel::NonIdeal, PhaseModel::IdealPhase};
        int seeds = 100;
        std::uint64_t master_seed = 1;
        LinkBudget budget;
        Transcription transcription = default_transcription;
    };

    struct AsaRow
    {
        double asa_deg;
        PhaseModel model;
        std::uint64_t seed;
        double snr_db;
    };

    // Realization s uses the stream derive_seed(master_seed, s) for every ASA and model, so
    // rows with the same seed are paired. The Tx-RIS link is stochastic, the RIS-Rx link a
    // single LOS ray, and the mask is the optimal one for the geometric LOS directions.
    // Rows are ordered by ASA, then model, then realization.
    SweepResult<AsaRow> run_asa_sweep(const AsaSweepSetup &setup);

    struct AsaSummary
    {
        double asa_deg;
        PhaseModel model;
        double mean_snr_db;
        std::size_t count;
    };

    // Mean of the finite SNR rows per (ASA, model), in first-appearance order
    std::vector<AsaSummary> summarize(const SweepResult<AsaRow> &result);

    // One cascade realization of the angle-spread setup with the Tx-RIS stream `seed`,
    // the configured ASA and the given phase model
    CascadeChannel asa_channel(const AsaSweepSetup &setup, std::uint64_t seed, PhaseModel model);

    struct PairedTest
    {
        double mean_diff;
        double t;
        double p_value; // one-sided, alternative: mean difference > 0
        std::size_t n;
    };

    // Paired one-sided t-test of a > b. Non-finite pairs are dropped; fewer than two pairs
    // or zero variance give p = 0 when the mean difference is positive and 1 otherwise.
    PairedTest paired_t_test(const std::vector<double> &a, const std::vector<double> &b);
}

#endif

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

#include "rischan/experiments.hpp"

#include <boost/math/distributions/students_t.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rischan
{
    double snr(const LinkBudget &budget, cdouble h)
    {
        const double mag = std::abs(h);
        if (mag == 0.0)
            return -std::numeric_limits<double>::infinity();
        return budget.tx_power_dbm + 20.0 * std::log10(mag) - budget.cascade_pl_db - budget.noise_dbm;
    }

    Pose SiteGeometry::pose() const
    {
        Pose p = ris_pose;
        p.origin = ris;
        return p;
    }

    Direction3 SiteGeometry::local_towards_tx() const
    {
        return to_local(pose(), direction_between(ris, tx));
    }

    Direction3 SiteGeometry::local_towards_rx() const
    {
        return to_local(pose(), direction_between(ris, rx));
    }

    PanelConfig table_panel(double carrier)
    {
        PanelConfig cfg;
        cfg.element.wavelength = wavelength(carrier);
        return cfg;
    }

    // ---- Radiation pattern ----

    static PhaseMask pattern_mask(const PatternSetup &s)
    {
        return make_mask(s.strategy, s.panel,
                         to_local(s.panel.pose, direction_from_angles(s.incidence)),
                         to_local(s.panel.pose, direction_from_angles(s.target)));
    }

    double target_gain_db(const PatternSetup &setup, PhaseModel model)
    {
        const PhaseMask mask = pattern_mask(setup);
        const auto f = panel_pattern(setup.panel, mask, setup.incidence, setup.target, model, setup.transcription);
        return 20.0 * std::log10(std::abs(f.F_vv));
    }

    SweepResult<PatternRow> run_pattern_experiment(const PatternSetup &setup)
    {
        setup.panel.validate();
        const PhaseMask mask = pattern_mask(setup);

        CutSpec cut;
        cut.sweep = CutSpec::Sweep::Zenith;
        cut.fixed_deg = rad2deg(setup.target.azimuth);
        cut.step_deg = setup.step_deg;

        const PhaseModel models[2] = {PhaseModel::NonIdeal, PhaseModel::IdealPhase};
        std::vector<CutPoint> cuts[2];
        double peak = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < 2; ++i)
        {
            // reference 0 dB keeps the raw gain; the common peak is subtracted below
            cuts[i] = pattern_cut(setup.panel, mask, setup.incidence, cut, models[i], 0.0, setup.transcription);
            peak = std::max(peak, cut_peak_db(cuts[i]));
        }
        if (!std::isfinite(peak))
            peak = 0.0;

        static constexpr char pol_in[4] = {'v', 'v', 'h', 'h'};
        static constexpr char pol_out[4] = {'v', 'h', 'v', 'h'};

        SweepResult<PatternRow> res;
        res.rows.reserve(2 * 4 * cuts[0].size());
        for (int i = 0; i < 2; ++i)
            for (int k = 0; k < 4; ++k)
                for (const CutPoint &pt : cuts[i])
                    res.rows.push_back({setup.strategy, models[i], pol_in[k], pol_out[k], pt.angle_deg,
                                        pt.gain_db[std::size_t(k)] - peak});
        return res;
    }

    // ---- Configuration sweep ----

    SweepResult<SnrRow> run_config_sweep(const ConfigSweepSetup &setup)
    {
        const std::vector<AntennaElement> tx{AntennaElement::isotropic_vertical()};
        const std::vector<AntennaElement> rx{AntennaElement::isotropic_vertical()};
        const Direction3 dir_in = setup.site.local_towards_tx();
        const Direction3 dir_out = setup.site.local_towards_rx();

        SweepResult<SnrRow> res;
        for (double f : setup.freqs_hz)
        {
            ScenarioConfig sc = setup.scenario;
            sc.carrier = f;
            const SubChannel sub1 = los_only_subchannel(sc, setup.site.tx, setup.site.ris);
            const SubChannel sub2 = los_only_subchannel(sc, setup.site.ris, setup.site.rx);
            const double lambda = wavelength(f);

            for (int side : setup.sides)
            {
                RisSetup ris;
                ris.panel.size_x = side;
                ris.panel.size_y = side;
                ris.panel.element.length_a = setup.element_ratio * lambda;
                ris.panel.element.width_b = setup.element_ratio * lambda;
                ris.panel.element.wavelength = lambda;
                ris.panel.spacing = setup.spacing_ratio * lambda;
                ris.panel.pose = setup.site.pose();
                ris.model = setup.model;
                ris.transcription = setup.transcription;

                for (Strategy st : setup.strategies)
                {
                    ris.mask = make_mask(st, ris.panel, dir_in, dir_out);
                    const CascadeChannel ch = compose_cir(sub1, sub2, ris, tx, rx);
                    LinkBudget b = setup.budget;
                    b.cascade_pl_db = ch.path_loss_db;
                    res.rows.push_back({f / 1e9, side, st, snr(b, transfer_function(ch, f, 0, 0))});
                }
            }
        }
        return res;
    }

    // ---- Angle spread sweep ----

    static RisSetup asa_ris(const AsaSweepSetup &setup, PhaseModel model)
    {
        RisSetup ris;
        ris.panel = setup.panel;
        ris.panel.pose = setup.site.pose();
        ris.mask = strategy_optimal(ris.panel, setup.site.local_towards_tx(), setup.site.local_towards_rx());
        ris.model = model;
        ris.transcription = setup.transcription;
        return ris;
    }

    CascadeChannel asa_channel(const AsaSweepSetup &setup, std::uint64_t seed, PhaseModel model)
    {
        Rng rng(seed);
        const SubChannel sub1 = generate_subchannel(setup.tx_ris, setup.site.tx, setup.site.ris, rng);
        const SubChannel sub2 = los_only_subchannel(setup.tx_ris, setup.site.ris, setup.site.rx);
        const std::vector<AntennaElement> ant{AntennaElement::isotropic_vertical()};
        return compose_cir(sub1, sub2, asa_ris(setup, model), ant, ant);
    }

    SweepResult<AsaRow> run_asa_sweep(const AsaSweepSetup &setup)
    {
        if (setup.seeds < 1)
            throw std::invalid_argument("run_asa_sweep: need at least one seed");
        setup.tx_ris.validate();

        std::vector<RisSetup> ris;
        for (PhaseModel m : setup.models)
            ris.push_back(asa_ris(setup, m));

        const std::vector<AntennaElement> ant{AntennaElement::isotropic_vertical()};
        const SubChannel sub2 = los_only_subchannel(setup.tx_ris, setup.site.ris, setup.site.rx);
        const double f = setup.tx_ris.carrier;

        const std::size_t n_seed = std::size_t(setup.seeds);
        const std::size_t n_model = setup.models.size();

        SweepResult<AsaRow> res;
        res.seed = setup.master_seed;
        res.rows.resize(setup.asa_deg.size() * n_model * n_seed);

        for (std::size_t a = 0; a < setup.asa_deg.size(); ++a)
        {
            ScenarioConfig sc = setup.tx_ris;
            sc.lsp.asa = setup.asa_deg[a];
            for (std::size_t s = 0; s < n_seed; ++s)
            {
                const std::uint64_t seed = derive_seed(setup.master_seed, s);
                Rng rng(seed);
                const SubChannel sub1 = generate_subchannel(sc, setup.site.tx, setup.site.ris, rng);
                for (std::size_t m = 0; m < n_model; ++m)
                {
                    const CascadeChannel ch = compose_cir(sub1, sub2, ris[m], ant, ant);
                    LinkBudget b = setup.budget;
                    b.cascade_pl_db = ch.path_loss_db;
                    res.rows[(a * n_model + m) * n_seed + s] =
                        {setup.asa_deg[a], setup.models[m], seed, snr(b, transfer_function(ch, f, 0, 0))};
                }
            }
        }
        return res;
    }

    std::vector<AsaSummary> summarize(const SweepResult<AsaRow> &result)
    {
        std::vector<AsaSummary> out;
        std::vector<double> sums;
        for (const AsaRow &r : result.rows)
        {
            auto it = std::find_if(out.begin(), out.end(), [&](const AsaSummary &s)
                                   { return s.asa_deg == r.asa_deg && s.model == r.model; });
            if (it == out.end())
            {
                out.push_back({r.asa_deg, r.model, 0.0, 0});
                sums.push_back(0.0);
                it = out.end() - 1;
            }
            if (std::isfinite(r.snr_db))
            {
                sums[std::size_t(it - out.begin())] += r.snr_db;
                ++it->count;
            }
        }
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i].mean_snr_db = out[i].count ? sums[i] / double(out[i].count)
                                              : -std::numeric_limits<double>::infinity();
        return out;
    }

    PairedTest paired_t_test(const std::vector<double> &a, const std::vector<double> &b)
    {
        if (a.size() != b.size())
            throw std::invalid_argument("paired_t_test: sample sizes differ");

        std::vector<double> d;
        d.reserve(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            if (std::isfinite(a[i]) && std::isfinite(b[i]))
                d.push_back(a[i] - b[i]);

        PairedTest r{0.0, 0.0, 1.0, d.size()};
        if (d.empty())
            return r;

        double mean = 0.0;
        for (double x : d)
            mean += x;
        mean /= double(d.size());
        r.mean_diff = mean;

        double ss = 0.0;
        for (double x : d)
            ss += (x - mean) * (x - mean);

        if (d.size() < 2 || ss == 0.0)
        {
            r.t = mean > 0.0 ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
            r.p_value = mean > 0.0 ? 0.0 : 1.0;
            return r;
        }

        const double n = double(d.size());
        const double se = std::sqrt(ss / (n - 1.0) / n);
        r.t = mean / se;
        const boost::math::students_t dist(n - 1.0);
        r.p_value = boost::math::cdf(boost::math::complement(dist, r.t));
        return r;
    }
}

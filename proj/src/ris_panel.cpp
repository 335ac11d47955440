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

#include "rischan/ris_panel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace rischan
{
    void PanelConfig::validate() const
    {
        if (size_x < 1 || size_y < 1)
            throw std::invalid_argument("PanelConfig: panel needs at least one element in each dimension");
        if (!(spacing > 0.0))
            throw std::invalid_argument("PanelConfig: element spacing must be positive");
        element.validate();
        if (spacing < std::max(element.length_a, element.width_b))
            throw std::invalid_argument("PanelConfig: element spacing " + std::to_string(spacing) +
                                        " m is smaller than the element size");
    }

    PhaseMask::PhaseMask(int size_x, int size_y, ReflectionCoefficient fill)
        : size_x_(size_x), size_y_(size_y)
    {
        if (size_x < 1 || size_y < 1)
            throw std::invalid_argument("PhaseMask: dimensions must be >= 1");
        coeffs_.assign(std::size_t(size_x) * std::size_t(size_y), fill);
    }

    std::size_t PhaseMask::index(int x, int y) const
    {
        if (x < 1 || x > size_x_ || y < 1 || y > size_y_)
            throw std::out_of_range("PhaseMask: index out of range");
        return std::size_t(x - 1) * std::size_t(size_y_) + std::size_t(y - 1);
    }

    const char *to_string(Strategy s)
    {
        switch (s)
        {
        case Strategy::Optimal:
            return "optimal";
        case Strategy::OneBit:
            return "1bit";
        case Strategy::Specular:
            return "specular";
        }
        return "?";
    }

    PhaseMask strategy_optimal(const PanelConfig &cfg, const Direction3 &dir_in, const Direction3 &dir_out)
    {
        cfg.validate();
        const double k = two_pi / cfg.element.wavelength;
        PhaseMask mask(cfg.size_x, cfg.size_y);
        for (int x = 1; x <= cfg.size_x; ++x)
            for (int y = 1; y <= cfg.size_y; ++y)
            {
                const Position3 d = element_position(x, y, cfg.size_x, cfg.size_y, cfg.spacing);
                mask.set(x, y, ReflectionCoefficient::from_phase(-k * (dir_in.dot(d) + dir_out.dot(d))));
            }
        return mask;
    }

    PhaseMask strategy_1bit(const PhaseMask &continuous)
    {
        PhaseMask mask(continuous.size_x(), continuous.size_y());
        const ReflectionCoefficient minus_one(cdouble(-1.0, 0.0));
        for (int x = 1; x <= mask.size_x(); ++x)
            for (int y = 1; y <= mask.size_y(); ++y)
                if (continuous(x, y).value().real() < 0.0)
                    mask.set(x, y, minus_one);
        return mask;
    }

    PhaseMask strategy_specular(const PanelConfig &cfg)
    {
        cfg.validate();
        return PhaseMask(cfg.size_x, cfg.size_y);
    }

    PhaseMask quantize_nbit(const PhaseMask &continuous, int bits)
    {
        if (bits < 1 || bits > 24)
            throw std::invalid_argument("quantize_nbit: bits must lie in 1..24");

        const long states = 1L << bits;
        const double step = two_pi / double(states);

        PhaseMask mask(continuous.size_x(), continuous.size_y());
        for (int x = 1; x <= mask.size_x(); ++x)
            for (int y = 1; y <= mask.size_y(); ++y)
            {
                // states are exp(-j k step); the nearest k to -phase / step, taken modulo the state count
                long k = std::lround(-continuous(x, y).phase() / step) % states;
                if (k < 0)
                    k += states;
                const ReflectionCoefficient r = (k == 0) ? ReflectionCoefficient() : ReflectionCoefficient::from_phase(-step * double(k));
                mask.set(x, y, r);
            }
        return mask;
    }

    PhaseMask make_mask(Strategy strategy, const PanelConfig &cfg, const Direction3 &dir_in, const Direction3 &dir_out)
    {
        switch (strategy)
        {
        case Strategy::Optimal:
            return strategy_optimal(cfg, dir_in, dir_out);
        case Strategy::OneBit:
            return strategy_1bit(strategy_optimal(cfg, dir_in, dir_out));
        case Strategy::Specular:
            return strategy_specular(cfg);
        }
        throw std::invalid_argument("make_mask: unknown strategy");
    }

    PanelPatternValue panel_pattern(const PanelConfig &cfg,
                                    const PhaseMask &mask,
                                    const SphericalAngle &in,
                                    const SphericalAngle &out,
                                    PhaseModel model,
                                    Transcription transcription)
    {
        cfg.validate();
        if (mask.size_x() != cfg.size_x || mask.size_y() != cfg.size_y)
            throw std::invalid_argument("panel_pattern: mask is " + std::to_string(mask.size_x()) + "x" +
                                        std::to_string(mask.size_y()) + ", panel is " + std::to_string(cfg.size_x) +
                                        "x" + std::to_string(cfg.size_y));

        const ElementPatternTerms terms = element_pattern_terms(cfg.element, in, out, transcription);

        // The element positions have no z component, so only the transverse part of r_in + r_out matters.
        // The phase factor separates into a row and a column term.
        const Direction3 r_in = direction_from_angles(in);
        const Direction3 r_out = direction_from_angles(out);
        const double k = two_pi / cfg.element.wavelength;
        const double ux = k * (r_in.x() + r_out.x());
        const double uy = k * (r_in.y() + r_out.y());

        std::vector<cdouble> row(std::size_t(cfg.size_x)), col(std::size_t(cfg.size_y));
        cdouble row_sum = 0.0, col_sum = 0.0;
        for (int x = 1; x <= cfg.size_x; ++x)
        {
            const double px = (double(x) - 0.5 * (1.0 + cfg.size_x)) * cfg.spacing;
            row[std::size_t(x - 1)] = std::polar(1.0, ux * px);
            row_sum += row[std::size_t(x - 1)];
        }
        for (int y = 1; y <= cfg.size_y; ++y)
        {
            const double py = (double(y) - 0.5 * (1.0 + cfg.size_y)) * cfg.spacing;
            col[std::size_t(y - 1)] = std::polar(1.0, uy * py);
            col_sum += col[std::size_t(y - 1)];
        }

        const double cos_in = std::cos(in.zenith);
        const bool non_ideal = model == PhaseModel::NonIdeal;

        const auto coeffs = mask.coefficients();
        cdouble weighted = 0.0; // sum R_applied * phase
        std::size_t i = 0;
        for (int x = 0; x < cfg.size_x; ++x)
        {
            cdouble partial = 0.0;
            for (int y = 0; y < cfg.size_y; ++y, ++i)
            {
                const cdouble r = coeffs[i].value();
                partial += (non_ideal ? effective_reflection_unchecked(r, cos_in) : r) * col[std::size_t(y)];
            }
            weighted += partial * row[std::size_t(x)];
        }
        const cdouble uniform = row_sum * col_sum; // sum of phases alone

        return {terms.vv.slope * weighted + terms.vv.offset * uniform,
                terms.vh.slope * weighted + terms.vh.offset * uniform,
                terms.hv.slope * weighted + terms.hv.offset * uniform,
                terms.hh.slope * weighted + terms.hh.offset * uniform};
    }

    std::vector<double> CutSpec::angles_deg() const
    {
        if (!(step_deg > 0.0) || step_deg > 1.0)
            throw std::invalid_argument("CutSpec: step must lie in (0, 1] deg");
        if (!(stop_deg >= start_deg))
            throw std::invalid_argument("CutSpec: empty cut");

        std::vector<double> angles;
        const auto n = static_cast<long>(std::floor((stop_deg - start_deg) / step_deg + 1e-9));
        angles.reserve(std::size_t(n + 1));
        for (long i = 0; i <= n; ++i)
            angles.push_back(start_deg + double(i) * step_deg);
        return angles;
    }

    SphericalAngle CutSpec::exit_angle(double swept_deg) const
    {
        if (sweep == Sweep::Azimuth)
            return SphericalAngle::from_degrees(fixed_deg, swept_deg);
        if (swept_deg < 0.0)
            return SphericalAngle::from_degrees(-swept_deg, fixed_deg + 180.0);
        return SphericalAngle::from_degrees(swept_deg, fixed_deg);
    }

    static double level_db(cdouble v)
    {
        const double a = std::abs(v);
        return a > 0.0 ? 20.0 * std::log10(a) : -std::numeric_limits<double>::infinity();
    }

    double cut_peak_db(const std::vector<CutPoint> &cut)
    {
        double peak = -std::numeric_limits<double>::infinity();
        for (const auto &p : cut)
            for (cdouble v : {p.value.F_vv, p.value.F_vh, p.value.F_hv, p.value.F_hh})
                peak = std::max(peak, level_db(v));
        return peak;
    }

    std::vector<CutPoint> pattern_cut(const PanelConfig &cfg,
                                      const PhaseMask &mask,
                                      const SphericalAngle &in,
                                      const CutSpec &cut,
                                      PhaseModel model,
                                      std::optional<double> reference_db,
                                      Transcription transcription)
    {
        const std::vector<double> angles = cut.angles_deg();
        if (angles.empty())
            throw std::invalid_argument("pattern_cut: empty cut");

        std::vector<CutPoint> points;
        points.reserve(angles.size());
        for (double a : angles)
        {
            CutPoint p;
            p.angle_deg = a;
            p.value = panel_pattern(cfg, mask, in, cut.exit_angle(a), model, transcription);
            points.push_back(p);
        }

        double ref = reference_db.value_or(cut_peak_db(points));
        if (!std::isfinite(ref))
            ref = 0.0; // all-zero cut
        for (auto &p : points)
        {
            p.gain_db = {level_db(p.value.F_vv) - ref, level_db(p.value.F_vh) - ref,
                         level_db(p.value.F_hv) - ref, level_db(p.value.F_hh) - ref};
        }
        return points;
    }
}

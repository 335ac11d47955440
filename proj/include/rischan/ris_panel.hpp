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

#ifndef RISCHAN_RIS_PANEL_HPP
#define RISCHAN_RIS_PANEL_HPP

#include "rischan/geometry.hpp"
#include "rischan/ris_element.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rischan
{
    struct PanelConfig
    {
        int size_x = 32;
        int size_y = 32;
        double spacing = 0.0247; // m, element pitch
        ElementGeometry element;
        Pose pose;

        // Throws std::invalid_argument if the grid is empty, the pitch is not positive,
        // or the elements would overlap (spacing < max(a, b)).
        void validate() const;

        int element_count() const { return size_x * size_y; }

        bool operator==(const PanelConfig &) const = default;
    };

    // Per-element preset reflection coefficients on an X x Y grid. Indices are 1-based,
    // matching element_position().
    class PhaseMask
    {
    public:
        PhaseMask(int size_x, int size_y, ReflectionCoefficient fill = {});

        int size_x() const { return size_x_; }
        int size_y() const { return size_y_; }

        const ReflectionCoefficient &operator()(int x, int y) const { return coeffs_[index(x, y)]; }
        void set(int x, int y, const ReflectionCoefficient &r) { coeffs_[index(x, y)] = r; }

        // Storage order: x-major, entry (x, y) at (x - 1) * Y + (y - 1)
        std::span<const ReflectionCoefficient> coefficients() const { return coeffs_; }

        bool operator==(const PhaseMask &) const = default;

    private:
        std::size_t index(int x, int y) const;

        int size_x_;
        int size_y_;
        std::vector<ReflectionCoefficient> coeffs_;
    };

    enum class Strategy
    {
        Optimal,
        OneBit,
        Specular
    };

    const char *to_string(Strategy s);

    // R(x,y) = exp(-j 2 pi / lambda (r_in . d + r_out . d)), directions in the panel frame.
    // r_in points from the panel towards the source, r_out towards the destination.
    PhaseMask strategy_optimal(const PanelConfig &cfg, const Direction3 &dir_in, const Direction3 &dir_out);

    // 1 where Re(R) >= 0, -1 otherwise (Re(R) == 0 maps to 1)
    PhaseMask strategy_1bit(const PhaseMask &continuous);

    PhaseMask strategy_specular(const PanelConfig &cfg);

    // Snaps each entry to the nearest of exp(-j 2 pi k / 2^N), k = 0 .. 2^N - 1.
    // Throws std::invalid_argument for bits < 1 or bits > 24.
    PhaseMask quantize_nbit(const PhaseMask &continuous, int bits);

    PhaseMask make_mask(Strategy strategy, const PanelConfig &cfg, const Direction3 &dir_in, const Direction3 &dir_out);

    struct PanelPatternValue
    {
        cdouble F_vv, F_vh, F_hv, F_hh;
    };

    // Pattern of the whole panel for one incidence/exit pair (panel frame):
    //   F_* = sum_{x,y} f_*(in, out; R_xy) exp(j k r_in . d_xy) exp(j k r_out . d_xy)
    // Throws std::invalid_argument if the mask does not match the panel and std::domain_error
    // for back-side incidence or exit.
    PanelPatternValue panel_pattern(const PanelConfig &cfg,
                                    const PhaseMask &mask,
                                    const SphericalAngle &in,
                                    const SphericalAngle &out,
                                    PhaseModel model,
                                    Transcription transcription = default_transcription);

    // A one-dimensional exit-angle sweep.
    //
    // Zenith sweeps use a signed exit zenith: theta >= 0 is (theta, azimuth), theta < 0 is
    // (|theta|, azimuth + 180 deg), so a single cut spans the full plane through the normal.
    // Azimuth sweeps keep the zenith fixed.
    struct CutSpec
    {
        enum class Sweep
        {
            Zenith,
            Azimuth
        };

        Sweep sweep = Sweep::Zenith;
        double fixed_deg = 0.0; // azimuth of a zenith sweep, zenith of an azimuth sweep
        double start_deg = -89.5;
        double stop_deg = 89.5;
        double step_deg = 0.5;

        std::vector<double> angles_deg() const;
        SphericalAngle exit_angle(double swept_deg) const;
    };

    struct CutPoint
    {
        double angle_deg;
        std::array<double, 4> gain_db; // vv, vh, hv, hh
        PanelPatternValue value;
    };

    // 20 log10 |F_*| along the cut, relative to `reference_db` when given, otherwise relative to
    // the largest value of the cut over all four polarization pairs. |F| = 0 gives -inf.
    // Throws std::invalid_argument for an empty cut or a step outside (0, 1] deg.
    std::vector<CutPoint> pattern_cut(const PanelConfig &cfg,
                                      const PhaseMask &mask,
                                      const SphericalAngle &in,
                                      const CutSpec &cut,
                                      PhaseModel model,
                                      std::optional<double> reference_db = std::nullopt,
                                      Transcription transcription = default_transcription);

    // Largest absolute level (20 log10 |F|) in a cut, over all polarization pairs
    double cut_peak_db(const std::vector<CutPoint> &cut);
}

#endif

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
//
// Slow, straightforward reference implementations used by the tests. They are written
// from the formulas directly and share no code with the library beyond plain types.

#ifndef RISCHAN_TESTS_ORACLES_HPP
#define RISCHAN_TESTS_ORACLES_HPP

#include "rischan/ris_panel.hpp"

#include <array>
#include <cmath>
#include <complex>

namespace oracle
{
    using cd = std::complex<double>;
    inline constexpr double PI = 3.14159265358979323846;

    // Effective reflection in angle form: R = e^{j a} -> e^{2 j atan(tan(a/2) / cos th)}
    inline cd r_ele(cd r, double th)
    {
        const double a = std::arg(r);
        return std::polar(1.0, 2.0 * std::atan(std::tan(0.5 * a) / std::cos(th)));
    }

    // Coefficient of R and constant term of the v-incidence pattern brackets
    struct Poly
    {
        double vv_r, vv_0, vh_r, vh_0;
    };

    inline Poly poly(double ti, double pi_, double to, double po, bool printed)
    {
        const double cti = std::cos(ti), sti = std::sin(ti), cpi = std::cos(pi_), spi = std::sin(pi_);
        const double cto = std::cos(to), sto = std::sin(to), cpo = std::cos(po), spo = std::sin(po);
        if (printed)
            return {cti * sti * cto * sto - cti * cpi * cto * spo - spi * spo + spi * cpo,
                    -cti * sti * cto * sto + cti * cpi * cto * spo - spi * spo + spi * cpo,
                    cti * spi * spo + cti * cpi * cpo - cpi * cto * spo - spi * cto * spo,
                    -(cti * spi * spo + cti * cpi * cpo + cpi * cto * spo + spi * cto * spo)};

        const double j_vv = cti * cto * (spi * cpo - cpi * spo), m_vv = spi * cpo - cpi * spo;
        const double j_vh = -cti * (spi * spo + cpi * cpo), m_vh = -cto * (cpi * cpo + spi * spo);
        return {j_vv + m_vv, m_vv - j_vv, j_vh + m_vh, m_vh - j_vh};
    }

    // {vv, vh, hv, hh} for the reflection value `re` actually applied by the element
    inline std::array<cd, 4> element(double a, double b, double lambda, double mu, double eps,
                                     double ti, double pi_, double to, double po, cd re, bool printed = true)
    {
        const double X = PI * a / lambda * std::sin(to) * std::cos(po);
        const double Y = PI * b / lambda * std::sin(to) * std::sin(po);
        const double sx = X == 0.0 ? 1.0 : std::sin(X) / X;
        const double sy = Y == 0.0 ? 1.0 : std::sin(Y) / Y;
        const cd P = cd(0.0, -1.0) * a * b * std::sqrt(mu * eps) / (2.0 * lambda) * sx * sy;

        const Poly v = poly(ti, pi_, to, po, printed);
        const Poly h = poly(ti, pi_ + 0.5 * PI, to, po, printed);
        return {P * (v.vv_r * re + v.vv_0), P * (v.vh_r * re + v.vh_0),
                P * (-h.vv_0 * re + h.vv_r), P * (-h.vh_0 * re + h.vh_r)};
    }

    // Element-by-element panel sum with explicit positions and direction vectors
    inline std::array<cd, 4> panel(const rischan::PanelConfig &cfg, const rischan::PhaseMask &mask,
                                   double ti, double pi_, double to, double po, bool non_ideal, bool printed = true)
    {
        const double lambda = cfg.element.wavelength;
        const double k = 2.0 * PI / lambda;
        const double rin[3] = {std::sin(ti) * std::cos(pi_), std::sin(ti) * std::sin(pi_), std::cos(ti)};
        const double rout[3] = {std::sin(to) * std::cos(po), std::sin(to) * std::sin(po), std::cos(to)};

        std::array<cd, 4> sum{};
        for (int x = 1; x <= cfg.size_x; ++x)
            for (int y = 1; y <= cfg.size_y; ++y)
            {
                const double dx = (x - (cfg.size_x + 1) / 2.0) * cfg.spacing;
                const double dy = (y - (cfg.size_y + 1) / 2.0) * cfg.spacing;
                const cd preset = mask(x, y).value();
                const cd re = non_ideal ? r_ele(preset, ti) : preset;
                const auto f = element(cfg.element.length_a, cfg.element.width_b, lambda, cfg.element.permeability,
                                       cfg.element.permittivity, ti, pi_, to, po, re, printed);
                const cd ph = std::exp(cd(0.0, k * (rin[0] * dx + rin[1] * dy))) *
                              std::exp(cd(0.0, k * (rout[0] * dx + rout[1] * dy)));
                for (int i = 0; i < 4; ++i)
                    sum[std::size_t(i)] += f[std::size_t(i)] * ph;
            }
        return sum;
    }

    inline double rel_err(cd got, cd want)
    {
        const double scale = std::max(std::abs(want), 1e-300);
        return std::abs(got - want) / scale;
    }
}

#endif

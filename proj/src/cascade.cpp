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

#include "rischan/cascade.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace rischan
{
    PolarizationMatrix PolarizationMatrix::operator*(const PolarizationMatrix &o) const
    {
        PolarizationMatrix r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                r(i, j) = (*this)(i, 0) * o(0, j) + (*this)(i, 1) * o(1, j);
        return r;
    }

    PolarizationMatrix PolarizationMatrix::identity()
    {
        PolarizationMatrix r;
        r(0, 0) = 1.0;
        r(1, 1) = 1.0;
        return r;
    }

    PolarizationMatrix xpr_matrix(const Ray &ray)
    {
        if (!(ray.xpr > 0.0))
            throw std::invalid_argument("xpr_matrix: XPR must be positive");

        const double leak = std::isinf(ray.xpr) ? 0.0 : std::sqrt(1.0 / ray.xpr);
        PolarizationMatrix m;
        m(0, 0) = std::polar(1.0, ray.phases[0]);
        m(0, 1) = std::polar(leak, ray.phases[1]);
        m(1, 0) = std::polar(leak, ray.phases[2]);
        m(1, 1) = std::polar(1.0, ray.phases[3]);
        return m;
    }

    PolarizationMatrix ris_transfer_matrix(const PanelPatternValue &f)
    {
        PolarizationMatrix m;
        m(0, 0) = f.F_vv;
        m(0, 1) = f.F_hv;
        m(1, 0) = f.F_vh;
        m(1, 1) = f.F_hh;
        return m;
    }

    AntennaElement AntennaElement::isotropic_vertical(const Position3 &position)
    {
        return {position, [](const SphericalAngle &) { return PolarizedGain{1.0, 0.0}; }};
    }

    const std::vector<CirTap> &CascadeChannel::pair(int p, int q) const
    {
        if (p < 0 || p >= num_rx || q < 0 || q >= num_tx)
            throw std::out_of_range("CascadeChannel: antenna pair out of range");
        return taps[std::size_t(p * num_tx + q)];
    }

    static bool same_point(const Position3 &a, const Position3 &b)
    {
        return (a - b).norm() <= 1e-9 * std::max(1.0, std::max(a.norm(), b.norm()));
    }

    // Panel-frame angle of a global direction, or nothing when it lies behind the panel
    static std::optional<SphericalAngle> front_side_angle(const Pose &pose, const SphericalAngle &global)
    {
        const SphericalAngle local = angles_from_direction(to_local(pose, direction_from_angles(global)));
        if (!(local.zenith < 0.5 * pi))
            return std::nullopt;
        return local;
    }

    CascadeChannel compose_cir(const SubChannel &sub1,
                               const SubChannel &sub2,
                               const RisSetup &ris,
                               const std::vector<AntennaElement> &tx,
                               const std::vector<AntennaElement> &rx)
    {
        ris.panel.validate();
        if (!same_point(sub1.end, ris.panel.pose.origin))
            throw std::invalid_argument("compose_cir: Tx-RIS sub-channel does not end at the RIS");
        if (!same_point(sub2.start, ris.panel.pose.origin))
            throw std::invalid_argument("compose_cir: RIS-Rx sub-channel does not start at the RIS");
        if (tx.empty() || rx.empty())
            throw std::invalid_argument("compose_cir: antenna lists must not be empty");

        const std::vector<Ray> rays1 = sub1.all_rays();
        const std::vector<Ray> rays2 = sub2.all_rays();
        if (rays1.empty() || rays2.empty())
            throw std::invalid_argument("compose_cir: empty sub-channel");

        const double lambda = ris.panel.element.wavelength;
        const double k = two_pi / lambda;
        const Pose &pose = ris.panel.pose;

        CascadeChannel ch;
        ch.num_rx = int(rx.size());
        ch.num_tx = int(tx.size());
        ch.taps.assign(rx.size() * tx.size(), {});
        ch.path_loss_db = cascade_path_loss(sub1.path_loss_db, sub2.path_loss_db);
        ch.wavelength = lambda;
        for (auto &t : ch.taps)
            t.reserve(rays1.size() * rays2.size());

        std::vector<std::optional<SphericalAngle>> out_local(rays2.size());
        for (std::size_t j = 0; j < rays2.size(); ++j)
            out_local[j] = front_side_angle(pose, rays2[j].departure);

        for (std::size_t i = 0; i < rays1.size(); ++i)
        {
            const Ray &r1 = rays1[i];
            const PolarizationMatrix chi1 = xpr_matrix(r1);
            const std::optional<SphericalAngle> in_local = front_side_angle(pose, r1.arrival);
            const Direction3 r_tx = direction_from_angles(r1.departure);

            for (std::size_t j = 0; j < rays2.size(); ++j)
            {
                const Ray &r2 = rays2[j];
                const PolarizationMatrix chi2 = xpr_matrix(r2);
                const Direction3 r_rx = direction_from_angles(r2.arrival);

                PolarizationMatrix f_ris; // zero unless both sides face the panel
                if (in_local && out_local[j])
                    f_ris = ris_transfer_matrix(panel_pattern(ris.panel, ris.mask, *in_local, *out_local[j],
                                                              ris.model, ris.transcription));

                const PolarizationMatrix link = chi2 * f_ris * chi1;
                const double amp_scale = std::sqrt(r1.power * r2.power);

                for (std::size_t p = 0; p < rx.size(); ++p)
                {
                    const PolarizedGain g_rx = rx[p].pattern(r2.arrival);
                    for (std::size_t q = 0; q < tx.size(); ++q)
                    {
                        const PolarizedGain g_tx = tx[q].pattern(r1.departure);
                        const cdouble out_v = link(0, 0) * g_tx.v + link(0, 1) * g_tx.h;
                        const cdouble out_h = link(1, 0) * g_tx.v + link(1, 1) * g_tx.h;
                        const cdouble pol = g_rx.v * out_v + g_rx.h * out_h;
                        const double array_phase = k * (r_rx.dot(rx[p].position) + r_tx.dot(tx[q].position));

                        CirTap tap;
                        tap.delay = r1.delay + r2.delay;
                        tap.amp = amp_scale * pol * std::polar(1.0, array_phase);
                        tap.ray_tx_ris = int(i);
                        tap.ray_ris_rx = int(j);
                        ch.taps[p * tx.size() + q].push_back(tap);
                    }
                }
            }
        }
        return ch;
    }

    cdouble transfer_function(const CascadeChannel &ch, double freq, int p, int q)
    {
        cdouble h = 0.0;
        for (const CirTap &t : ch.pair(p, q))
            h += t.amp * std::polar(1.0, -two_pi * freq * t.delay);
        return h;
    }
}

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

#ifndef RISCHAN_CASCADE_HPP
#define RISCHAN_CASCADE_HPP

#include "rischan/gbsm.hpp"
#include "rischan/ris_panel.hpp"

#include <array>
#include <functional>
#include <vector>

namespace rischan
{
    // 2x2 complex matrix, rows/columns ordered (v, h)
    struct PolarizationMatrix
    {
        std::array<std::array<cdouble, 2>, 2> m{};

        cdouble &operator()(int r, int c) { return m[std::size_t(r)][std::size_t(c)]; }
        const cdouble &operator()(int r, int c) const { return m[std::size_t(r)][std::size_t(c)]; }

        PolarizationMatrix operator*(const PolarizationMatrix &o) const;
        static PolarizationMatrix identity();
    };

    // Cross-polarization matrix of one ray:
    //   [ exp(j phi_vv)              sqrt(1/kappa) exp(j phi_vh) ]
    //   [ sqrt(1/kappa) exp(j phi_hv)   exp(j phi_hh)            ]
    // kappa = +inf (LOS ray) gives a diagonal matrix. Throws for kappa <= 0.
    PolarizationMatrix xpr_matrix(const Ray &ray);

    // RIS response as a polarization transfer matrix: output = M * input with (v, h) ordering,
    // i.e. M = [[F_vv, F_hv], [F_vh, F_hh]] since F_vh is the h output excited by a v input.
    PolarizationMatrix ris_transfer_matrix(const PanelPatternValue &f);

    struct PolarizedGain
    {
        cdouble v;
        cdouble h;
    };

    struct AntennaElement
    {
        Position3 position; // relative to the array reference point, global orientation
        std::function<PolarizedGain(const SphericalAngle &)> pattern;

        // Isotropic, purely vertically polarized element (F^v = 1, F^h = 0)
        static AntennaElement isotropic_vertical(const Position3 &position = {});
    };

    struct CirTap
    {
        double delay = 0.0; // s
        cdouble amp;
        int ray_tx_ris = 0; // index into sub1.all_rays()
        int ray_ris_rx = 0; // index into sub2.all_rays()
    };

    struct RisSetup
    {
        PanelConfig panel;
        PhaseMask mask{1, 1};
        PhaseModel model = PhaseModel::NonIdeal;
        Transcription transcription = default_transcription;
    };

    struct CascadeChannel
    {
        int num_rx = 0;
        int num_tx = 0;
        // taps[p * num_tx + q], each sorted by (ray_tx_ris, ray_ris_rx)
        std::vector<std::vector<CirTap>> taps;
        double path_loss_db = 0.0; // PL(Tx-RIS) + PL(RIS-Rx)
        double wavelength = 0.0;

        const std::vector<CirTap> &pair(int p, int q) const;
    };

    // Cascaded impulse response Tx -> RIS -> Rx. For every ray pair and antenna pair (p, q):
    //   amp = sqrt(P1 P2) F_rx,p^T chi2 F_ris chi1 F_tx,q exp(j k (r_rx . d_p + r_tx . d_q))
    //   delay = tau1 + tau2
    // F_ris is evaluated in the panel frame with the incidence taken from the sub1 arrival angles
    // and the exit from the sub2 departure angles. Ray pairs whose incidence or exit lies behind
    // the panel contribute zero-amplitude taps. Path loss is kept out of the amplitudes.
    //
    // Throws std::invalid_argument if sub1 does not end / sub2 does not start at the panel origin,
    // if a sub-channel has no rays, or if an antenna list is empty.
    CascadeChannel compose_cir(const SubChannel &sub1,
                               const SubChannel &sub2,
                               const RisSetup &ris,
                               const std::vector<AntennaElement> &tx,
                               const std::vector<AntennaElement> &rx);

    // H = sum_taps amp exp(-j 2 pi f delay) for antenna pair (p, q)
    cdouble transfer_function(const CascadeChannel &ch, double freq, int p, int q);
}

#endif

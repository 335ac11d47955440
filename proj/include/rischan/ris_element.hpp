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

#ifndef RISCHAN_RIS_ELEMENT_HPP
#define RISCHAN_RIS_ELEMENT_HPP

#include "rischan/constants.hpp"
#include "rischan/geometry.hpp"

#include <utility>

namespace rischan
{
    // Unit-modulus element reflection coefficient (|value| = 1 within 1e-9)
    class ReflectionCoefficient
    {
    public:
        ReflectionCoefficient() = default; // 1
        explicit ReflectionCoefficient(cdouble value);

        // exp(j * phase)
        static ReflectionCoefficient from_phase(double phase_rad);

        cdouble value() const { return value_; }
        double phase() const { return std::arg(value_); }

        bool operator==(const ReflectionCoefficient &) const = default;

    private:
        cdouble value_{1.0, 0.0};
    };

    // Physical description of one rectangular RIS element
    struct ElementGeometry
    {
        double length_a = 0.0156;  // m
        double width_b = 0.0156;   // m
        double wavelength = 0.05;  // m
        double permeability = mu0; // H/m
        double permittivity = eps0; // F/m

        // Throws std::invalid_argument on non-positive dimensions
        void validate() const;

        bool operator==(const ElementGeometry &) const = default;
    };

    // How the element applies its preset coefficient.
    //   NonIdeal:   the oblique-incidence coefficient R_ele replaces the preset
    //   IdealPhase: the preset is applied unchanged at every incidence angle
    enum class PhaseModel
    {
        NonIdeal,
        IdealPhase
    };

    // Selects the closed-form element pattern used for vertical incidence.
    //
    //   AsPrinted:      the reference closed form, kept verbatim. Its f_vv electric-current term
    //                   contains cos(th_in) sin(th_in) cos(th_out) sin(th_out) and its magnetic-current
    //                   terms use sin(ph_in) sin(ph_out); both look like transcription slips.
    //   CurrentDerived: the same structure rebuilt from the equivalent electric and magnetic surface
    //                   currents of the element, J ~ (R - 1) cos(th_in) (sin ph_in, -cos ph_in) and
    //                   M ~ (R + 1) (cos ph_in, sin ph_in), projected onto the exit theta/phi basis.
    //
    // The default is AsPrinted. See docs/element_pattern.md for the full expressions.
    enum class Transcription
    {
        AsPrinted,
        CurrentDerived
    };

    inline constexpr Transcription default_transcription = Transcription::AsPrinted;

    // Reflection coefficient seen by a wave arriving at zenith angle `zenith_in` (local frame):
    //   R_ele = ((1 + R) cos(th) - (1 - R)) / ((1 + R) cos(th) + (1 - R))
    // Throws std::domain_error for zenith_in outside [0, pi/2).
    ReflectionCoefficient effective_reflection(const ReflectionCoefficient &preset, double zenith_in);

    // Same map for a raw unit-modulus value and cos(zenith_in) > 0, without argument checks
    cdouble effective_reflection_unchecked(cdouble r, double cos_in);

    // sin(x) / x, equal to 1 for |x| < 1e-8
    double sinc(double x);

    // An element pattern component is affine in the applied reflection coefficient:
    //   f = slope * R + offset
    // where R is R_ele (NonIdeal) or the preset itself (IdealPhase).
    struct AffineTerm
    {
        cdouble slope;
        cdouble offset;

        cdouble operator()(cdouble r) const { return slope * r + offset; }
    };

    struct ElementPatternTerms
    {
        AffineTerm vv, vh, hv, hh;
    };

    // Pattern terms of one element for incidence `in` and exit `out`, both in the panel frame.
    // Both zenith angles must lie in [0, pi/2), otherwise std::domain_error is thrown.
    ElementPatternTerms element_pattern_terms(const ElementGeometry &geom,
                                              const SphericalAngle &in,
                                              const SphericalAngle &out,
                                              Transcription transcription = default_transcription);

    struct ElementPatternValue
    {
        cdouble f_vv, f_vh, f_hv, f_hh;
    };

    // Vertical incidence, non-ideal phase modulation: (f_vv, f_vh)
    std::pair<cdouble, cdouble> element_pattern_v(const ElementGeometry &geom,
                                                  const SphericalAngle &in,
                                                  const SphericalAngle &out,
                                                  const ReflectionCoefficient &preset,
                                                  Transcription transcription = default_transcription);

    // Horizontal incidence, non-ideal phase modulation: (f_hv, f_hh)
    std::pair<cdouble, cdouble> element_pattern_h(const ElementGeometry &geom,
                                                  const SphericalAngle &in,
                                                  const SphericalAngle &out,
                                                  const ReflectionCoefficient &preset,
                                                  Transcription transcription = default_transcription);

    ElementPatternValue element_pattern_matrix(const ElementGeometry &geom,
                                               const SphericalAngle &in,
                                               const SphericalAngle &out,
                                               const ReflectionCoefficient &preset,
                                               PhaseModel model,
                                               Transcription transcription = default_transcription);

    // Coefficient actually applied by an element for the given model
    cdouble applied_reflection(const ReflectionCoefficient &preset, double zenith_in, PhaseModel model);

    const char *to_string(PhaseModel model);
}

#endif

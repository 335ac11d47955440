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

#include "rischan/ris_element.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rischan
{
    ReflectionCoefficient::ReflectionCoefficient(cdouble value)
    {
        if (!std::isfinite(value.real()) || !std::isfinite(value.imag()) || std::abs(std::abs(value) - 1.0) > 1e-9)
            throw std::invalid_argument("ReflectionCoefficient: value must have unit modulus, |R| = " +
                                        std::to_string(std::abs(value)));
        value_ = value;
    }

    ReflectionCoefficient ReflectionCoefficient::from_phase(double phase_rad)
    {
        return ReflectionCoefficient(std::polar(1.0, phase_rad));
    }

    void ElementGeometry::validate() const
    {
        if (!(length_a > 0.0) || !(width_b > 0.0))
            throw std::invalid_argument("ElementGeometry: element length and width must be positive");
        if (!(wavelength > 0.0))
            throw std::invalid_argument("ElementGeometry: wavelength must be positive");
        if (!(permeability > 0.0) || !(permittivity > 0.0))
            throw std::invalid_argument("ElementGeometry: permeability and permittivity must be positive");
    }

    static void check_front_side(double zenith, const char *what)
    {
        if (!(zenith >= 0.0 && zenith < 0.5 * pi))
            throw std::domain_error(std::string(what) + " zenith must lie in [0, pi/2), got " +
                                    std::to_string(rad2deg(zenith)) + " deg");
    }

    ReflectionCoefficient effective_reflection(const ReflectionCoefficient &preset, double zenith_in)
    {
        check_front_side(zenith_in, "effective_reflection: incidence");

        return ReflectionCoefficient(effective_reflection_unchecked(preset.value(), std::cos(zenith_in)));
    }

    cdouble effective_reflection_unchecked(cdouble r, double cos_in)
    {
        const cdouble num = (1.0 + r) * cos_in - (1.0 - r);
        const cdouble den = (1.0 + r) * cos_in + (1.0 - r);

        // |num| = |den| holds exactly in real arithmetic, so num / den = num conj(den) / |num conj(den)|,
        // which also strips the rounding residue from the modulus
        const cdouble z = num * std::conj(den);
        return z / std::sqrt(std::norm(z));
    }

    double sinc(double x)
    {
        if (std::abs(x) < 1e-8)
            return 1.0;
        return std::sin(x) / x;
    }

    namespace
    {
        // Electric- and magnetic-current factors of one output polarization.
        // For vertical incidence:   f = P [(R - 1) J + (R + 1) M]
        struct CurrentFactors
        {
            double j;
            double m;
        };

        struct Trig
        {
            double ct_in, st_in, cp_in, sp_in;
            double ct_out, st_out, cp_out, sp_out;
        };

        // Vertical incidence, output v
        CurrentFactors factors_vv(const Trig &t, Transcription tr)
        {
            if (tr == Transcription::AsPrinted)
                return {t.ct_in * t.st_in * t.ct_out * t.st_out - t.ct_in * t.cp_in * t.ct_out * t.sp_out,
                        t.sp_in * t.cp_out - t.sp_in * t.sp_out};

            return {t.ct_in * t.ct_out * (t.sp_in * t.cp_out - t.cp_in * t.sp_out),
                    t.sp_in * t.cp_out - t.cp_in * t.sp_out};
        }

        // Vertical incidence, output h
        CurrentFactors factors_vh(const Trig &t, Transcription tr)
        {
            if (tr == Transcription::AsPrinted)
                return {t.ct_in * (t.sp_in * t.sp_out + t.cp_in * t.cp_out),
                        -t.ct_out * t.sp_out * (t.cp_in + t.sp_in)};

            return {-t.ct_in * (t.sp_in * t.sp_out + t.cp_in * t.cp_out),
                    -t.ct_out * (t.cp_in * t.cp_out + t.sp_in * t.sp_out)};
        }

        // Horizontal incidence: rotate the incident polarization basis by +90 deg in azimuth
        // (sin ph_in -> cos ph_in, cos ph_in -> -sin ph_in) and swap the reflection multipliers
        // of the two currents, with the magnetic term negated:
        //   f = P [(R + 1) J' - (R - 1) M']
        Trig rotate_incidence(Trig t)
        {
            const double s = t.sp_in;
            t.sp_in = t.cp_in;
            t.cp_in = -s;
            return t;
        }

        AffineTerm vertical_term(cdouble p, CurrentFactors f)
        {
            // (R - 1) J + (R + 1) M = R (J + M) + (M - J)
            return {p * (f.j + f.m), p * (f.m - f.j)};
        }

        AffineTerm horizontal_term(cdouble p, CurrentFactors f)
        {
            // (R + 1) J - (R - 1) M = R (J - M) + (J + M)
            return {p * (f.j - f.m), p * (f.j + f.m)};
        }
    }

    ElementPatternTerms element_pattern_terms(const ElementGeometry &geom,
                                              const SphericalAngle &in,
                                              const SphericalAngle &out,
                                              Transcription transcription)
    {
        geom.validate();
        check_front_side(in.zenith, "element pattern: incidence");
        check_front_side(out.zenith, "element pattern: exit");

        const Trig t{std::cos(in.zenith), std::sin(in.zenith), std::cos(in.azimuth), std::sin(in.azimuth),
                     std::cos(out.zenith), std::sin(out.zenith), std::cos(out.azimuth), std::sin(out.azimuth)};

        const double lambda = geom.wavelength;
        const double X = pi * geom.length_a / lambda * t.st_out * t.cp_out;
        const double Y = pi * geom.width_b / lambda * t.st_out * t.sp_out;

        // -j a b sqrt(mu eps) / (2 lambda) * sinc(X) sinc(Y)
        const double amplitude = geom.length_a * geom.width_b * std::sqrt(geom.permeability * geom.permittivity) /
                                 (2.0 * lambda) * sinc(X) * sinc(Y);
        const cdouble p(0.0, -amplitude);

        const Trig th = rotate_incidence(t);

        ElementPatternTerms terms;
        terms.vv = vertical_term(p, factors_vv(t, transcription));
        terms.vh = vertical_term(p, factors_vh(t, transcription));
        terms.hv = horizontal_term(p, factors_vv(th, transcription));
        terms.hh = horizontal_term(p, factors_vh(th, transcription));
        return terms;
    }

    cdouble applied_reflection(const ReflectionCoefficient &preset, double zenith_in, PhaseModel model)
    {
        if (model == PhaseModel::IdealPhase)
            return preset.value();
        return effective_reflection(preset, zenith_in).value();
    }

    std::pair<cdouble, cdouble> element_pattern_v(const ElementGeometry &geom,
                                                  const SphericalAngle &in,
                                                  const SphericalAngle &out,
                                                  const ReflectionCoefficient &preset,
                                                  Transcription transcription)
    {
        const auto terms = element_pattern_terms(geom, in, out, transcription);
        const cdouble r = effective_reflection(preset, in.zenith).value();
        return {terms.vv(r), terms.vh(r)};
    }

    std::pair<cdouble, cdouble> element_pattern_h(const ElementGeometry &geom,
                                                  const SphericalAngle &in,
                                                  const SphericalAngle &out,
                                                  const ReflectionCoefficient &preset,
                                                  Transcription transcription)
    {
        const auto terms = element_pattern_terms(geom, in, out, transcription);
        const cdouble r = effective_reflection(preset, in.zenith).value();
        return {terms.hv(r), terms.hh(r)};
    }

    ElementPatternValue element_pattern_matrix(const ElementGeometry &geom,
                                               const SphericalAngle &in,
                                               const SphericalAngle &out,
                                               const ReflectionCoefficient &preset,
                                               PhaseModel model,
                                               Transcription transcription)
    {
        const auto terms = element_pattern_terms(geom, in, out, transcription);
        const cdouble r = applied_reflection(preset, in.zenith, model);
        return {terms.vv(r), terms.vh(r), terms.hv(r), terms.hh(r)};
    }

    const char *to_string(PhaseModel model)
    {
        return model == PhaseModel::NonIdeal ? "non_ideal" : "ideal";
    }
}

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

#ifndef RISCHAN_CONSTANTS_HPP
#define RISCHAN_CONSTANTS_HPP

#include <complex>
#include <numbers>

namespace rischan
{
    using cdouble = std::complex<double>;

    inline constexpr double pi = std::numbers::pi;
    inline constexpr double two_pi = 2.0 * std::numbers::pi;

    inline constexpr double speed_of_light = 299792458.0;  // m/s
    inline constexpr double mu0 = 1.25663706212e-6;        // H/m (CODATA 2018)
    inline constexpr double eps0 = 8.8541878128e-12;       // F/m (CODATA 2018)

    constexpr double deg2rad(double deg) { return deg * pi / 180.0; }
    constexpr double rad2deg(double rad) { return rad * 180.0 / pi; }

    inline double wavelength(double frequency_hz) { return speed_of_light / frequency_hz; }
}

#endif

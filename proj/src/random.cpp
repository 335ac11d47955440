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

#include "rischan/random.hpp"
#include "rischan/constants.hpp"

#include <algorithm>
#include <cmath>

namespace rischan
{
    double Rng::uniform()
    {
        return double(engine_() >> 11) * 0x1.0p-53;
    }

    double Rng::normal()
    {
        const double u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log1p(-u1)) * std::cos(two_pi * u2);
    }

    double Rng::laplace(double scale)
    {
        const double u = uniform() - 0.5;
        const double a = std::min(std::abs(u), 0.5 - 0x1.0p-54); // uniform() == 0 would give ln(0)
        const double mag = -std::log1p(-2.0 * a);
        return u < 0.0 ? -scale * mag : scale * mag;
    }

    std::uint64_t Rng::below(std::uint64_t n)
    {
        const std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % n);
        std::uint64_t x;
        do
            x = engine_();
        while (x >= limit);
        return x % n;
    }

    std::uint64_t mix64(std::uint64_t x)
    {
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

    std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index)
    {
        return mix64(mix64(master) ^ (index * 0xD1B54A32D192ED03ULL + 1));
    }
}

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

#ifndef RISCHAN_RANDOM_HPP
#define RISCHAN_RANDOM_HPP

#include <cstdint>
#include <random>

namespace rischan
{
    // Seedable generator with a fully specified output sequence.
    //
    // The engine is std::mt19937_64, whose sequence is fixed by the C++ standard. The
    // std:: distributions are implementation-defined, so the variates below are derived
    // from raw engine output with explicit formulas:
    //   uniform()  = (u64 >> 11) * 2^-53                    in [0, 1)
    //   normal()   = sqrt(-2 ln(1 - U1)) cos(2 pi U2)      Box-Muller, two draws, no caching
    //   laplace(b) = -b sgn(U - 1/2) ln(1 - 2 |U - 1/2|)
    // so a seed produces the same stream on every platform.
    class Rng
    {
    public:
        explicit Rng(std::uint64_t seed) : engine_(seed) {}

        std::uint64_t next_u64() { return engine_(); }

        double uniform();
        double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
        double normal();
        double normal(double mean, double stddev) { return mean + stddev * normal(); }
        double laplace(double scale);

        // Uniform integer in [0, n), n > 0, by rejection (no modulo bias)
        std::uint64_t below(std::uint64_t n);

    private:
        std::mt19937_64 engine_;
    };

    // splitmix64 finalizer
    std::uint64_t mix64(std::uint64_t x);

    // Seed of an independent stream for sweep point `index` under `master`
    std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);
}

#endif

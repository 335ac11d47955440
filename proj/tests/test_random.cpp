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

#include "doctest.h"

#include "rischan/random.hpp"

#include <cmath>
#include <set>
#include <vector>

using namespace rischan;

TEST_CASE("engine output is the standard mt19937_64 sequence")
{
    // 10000th output of a default-seeded mt19937_64, fixed by the C++ standard
    Rng rng(5489u);
    std::uint64_t x = 0;
    for (int i = 0; i < 10000; ++i)
        x = rng.next_u64();
    CHECK(x == 9981545732273789042ULL);
}

TEST_CASE("uniform variates")
{
    Rng a(42), b(42);
    double sum = 0.0, sum2 = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i)
    {
        const double u = a.uniform();
        CHECK(u == b.uniform());
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
        sum2 += u * u;
    }
    const double mean = sum / n;
    CHECK(mean == doctest::Approx(0.5).epsilon(0.01));
    CHECK(sum2 / n - mean * mean == doctest::Approx(1.0 / 12.0).epsilon(0.01));

    Rng c(42);
    const double lo = c.uniform(2.0, 3.0);
    CHECK(lo >= 2.0);
    CHECK(lo < 3.0);
}

TEST_CASE("normal and Laplace moments")
{
    Rng rng(7);
    const int n = 200000;
    double s1 = 0, s2 = 0, s4 = 0, l1 = 0, l2 = 0;
    for (int i = 0; i < n; ++i)
    {
        const double z = rng.normal();
        s1 += z;
        s2 += z * z;
        s4 += z * z * z * z;
        const double l = rng.laplace(2.0);
        l1 += std::abs(l);
        l2 += l * l;
    }
    CHECK(std::abs(s1 / n) < 0.01);
    CHECK(s2 / n == doctest::Approx(1.0).epsilon(0.02));
    CHECK(s4 / n == doctest::Approx(3.0).epsilon(0.05));
    // Laplace(b): E|X| = b, Var = 2 b^2
    CHECK(l1 / n == doctest::Approx(2.0).epsilon(0.02));
    CHECK(l2 / n == doctest::Approx(8.0).epsilon(0.03));

    Rng r2(7);
    CHECK(r2.normal(10.0, 0.0) == 10.0);
}

TEST_CASE("bounded integers")
{
    Rng rng(9);
    std::vector<int> hist(7, 0);
    for (int i = 0; i < 70000; ++i)
    {
        const auto k = rng.below(7);
        REQUIRE(k < 7);
        ++hist[std::size_t(k)];
    }
    for (int h : hist)
        CHECK(h == doctest::Approx(10000).epsilon(0.05));
    CHECK(rng.below(1) == 0);
}

TEST_CASE("derived seeds")
{
    std::set<std::uint64_t> seen;
    for (std::uint64_t m : {0ULL, 1ULL, 2ULL})
        for (std::uint64_t i = 0; i < 1000; ++i)
            seen.insert(derive_seed(m, i));
    CHECK(seen.size() == 3000);
    CHECK(derive_seed(5, 3) == derive_seed(5, 3));
    CHECK(mix64(0) != 0);
}

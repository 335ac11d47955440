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

#ifndef RISCHAN_CSV_HPP
#define RISCHAN_CSV_HPP

#include "rischan/cascade.hpp"
#include "rischan/experiments.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace rischan
{
    inline constexpr std::string_view pattern_cut_header = "strategy,model,pol_in,pol_out,theta_out_deg,gain_db";
    inline constexpr std::string_view snr_sweep_header = "freq_ghz,n_side,strategy,snr_db";
    inline constexpr std::string_view asa_sweep_header = "asa_deg,model,seed,snr_db";
    inline constexpr std::string_view channel_header = "p,q,tap_index,delay_s,amp_re,amp_im";

    // Shortest decimal string that reads back to the same double; "inf", "-inf", "nan" otherwise
    std::string format_double(double x);

    // CSV documents with a header line and '\n' line endings
    std::string to_csv(const SweepResult<PatternRow> &result);
    std::string to_csv(const SweepResult<SnrRow> &result);
    std::string to_csv(const SweepResult<AsaRow> &result);
    std::string to_csv(const CascadeChannel &channel);

    // Writes `content` to a sibling temporary file and renames it over `path`, so readers
    // see either the old file or the complete new one. Throws std::runtime_error on failure.
    void write_atomic(const std::filesystem::path &path, std::string_view content);
}

#endif

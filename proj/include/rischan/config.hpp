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

#ifndef RISCHAN_CONFIG_HPP
#define RISCHAN_CONFIG_HPP

#include "rischan/experiments.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rischan
{
    // Run configuration. Text form: one `section.key = value` per line, `#` starts a comment,
    // lists are comma separated. Omitted keys keep their defaults; see docs/config.md.
    struct RunConfig
    {
        std::string experiment = "pattern"; // pattern | snr-sweep | asa-sweep | dump-channel
        std::uint64_t seed = 1;
        std::string output_dir = "results";
        Transcription transcription = default_transcription;

        // panel
        int size_x = 32;
        int size_y = 32;
        double element_a = 0.0156; // m
        double element_b = 0.0156; // m
        double spacing = 0.0247;   // m
        double bearing_deg = 0.0;
        double downtilt_deg = 90.0;
        double slant_deg = 0.0;
        Strategy strategy = Strategy::Optimal;
        PhaseModel model = PhaseModel::NonIdeal;

        double carrier_hz = 6e9;
        double tx_power_dbm = 43.0;
        double noise_dbm = -117.0;

        Position3 tx{0.0, 0.0, 10.0};
        Position3 ris{-15.0, 15.0, 6.0};
        Position3 rx{-10.0, 30.0, 2.0};

        // radiation pattern
        double incidence_zenith_deg = 60.0;
        double incidence_azimuth_deg = 0.0;
        double target_zenith_deg = 30.0;
        double target_azimuth_deg = 270.0;
        double cut_step_deg = 0.5;

        // configuration sweep
        std::vector<double> sweep_freqs_ghz{3.0, 6.0};
        std::vector<int> sweep_sides{1, 2, 4, 8, 16, 32, 64};
        int full_scale_side = 100;
        std::vector<Strategy> sweep_strategies{Strategy::Optimal, Strategy::OneBit, Strategy::Specular};
        double element_ratio = 0.312;
        double spacing_ratio = 0.494;

        // angle spread sweep
        std::vector<double> asa_values_deg{1.0, 5.0, 10.0};
        int asa_seeds = 100;

        // stochastic Tx-RIS link
        ScenarioConfig scenario;

        bool operator==(const RunConfig &) const = default;

        // Cross-field checks; throws std::invalid_argument
        void validate() const;

        PatternSetup pattern_setup() const;
        ConfigSweepSetup config_sweep_setup(bool full_scale) const;
        AsaSweepSetup asa_setup() const;
    };

    class ConfigError : public std::runtime_error
    {
    public:
        ConfigError(int line, const std::string &key, const std::string &what);

        int line() const { return line_; } // 1-based; 0 when no single line is at fault
        const std::string &key() const { return key_; }

    private:
        int line_;
        std::string key_;
    };

    // Throws ConfigError on syntax errors, unknown or repeated keys, malformed values and
    // violated invariants, naming the line and key
    RunConfig parse_config(std::string_view text);

    // Every key, one per line, in a fixed order; parse_config(serialize_config(c)) == c
    std::string serialize_config(const RunConfig &cfg);

    // FNV-1a 64 of serialize_config, as 16 lowercase hex digits
    std::string config_hash(const RunConfig &cfg);

    PhaseModel parse_model(std::string_view s);
    Strategy parse_strategy(std::string_view s);
    Transcription parse_transcription(std::string_view s);
    const char *to_string(Transcription t);
}

#endif

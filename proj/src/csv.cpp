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

#include "rischan/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace rischan
{
    std::string format_double(double x)
    {
        if (std::isnan(x))
            return "nan";
        if (std::isinf(x))
            return x > 0.0 ? "inf" : "-inf";
        char buf[32];
        const auto r = std::to_chars(buf, buf + sizeof buf, x);
        return std::string(buf, r.ptr);
    }

    std::string to_csv(const SweepResult<PatternRow> &result)
    {
        std::string s(pattern_cut_header);
        s += '\n';
        for (const PatternRow &r : result.rows)
        {
            s += to_string(r.strategy);
            s += ',';
            s += to_string(r.model);
            s += ',';
            s += r.pol_in;
            s += ',';
            s += r.pol_out;
            s += ',' + format_double(r.theta_out_deg) + ',' + format_double(r.gain_db) + '\n';
        }
        return s;
    }

    std::string to_csv(const SweepResult<SnrRow> &result)
    {
        std::string s(snr_sweep_header);
        s += '\n';
        for (const SnrRow &r : result.rows)
            s += format_double(r.freq_ghz) + ',' + std::to_string(r.n_side) + ',' + to_string(r.strategy) + ',' +
                 format_double(r.snr_db) + '\n';
        return s;
    }

    std::string to_csv(const SweepResult<AsaRow> &result)
    {
        std::string s(asa_sweep_header);
        s += '\n';
        for (const AsaRow &r : result.rows)
            s += format_double(r.asa_deg) + ',' + to_string(r.model) + ',' + std::to_string(r.seed) + ',' +
                 format_double(r.snr_db) + '\n';
        return s;
    }

    std::string to_csv(const CascadeChannel &ch)
    {
        std::string s(channel_header);
        s += '\n';
        for (int p = 0; p < ch.num_rx; ++p)
            for (int q = 0; q < ch.num_tx; ++q)
            {
                const auto &taps = ch.pair(p, q);
                for (std::size_t i = 0; i < taps.size(); ++i)
                    s += std::to_string(p) + ',' + std::to_string(q) + ',' + std::to_string(i) + ',' +
                         format_double(taps[i].delay) + ',' + format_double(taps[i].amp.real()) + ',' +
                         format_double(taps[i].amp.imag()) + '\n';
            }
        return s;
    }

    void write_atomic(const std::filesystem::path &path, std::string_view content)
    {
        std::filesystem::path tmp = path;
        tmp += ".tmp";
        {
            std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
            if (!f)
                throw std::runtime_error("cannot open " + tmp.string() + " for writing");
            f.write(content.data(), std::streamsize(content.size()));
            f.flush();
            if (!f)
                throw std::runtime_error("write failed: " + tmp.string());
        }
        std::error_code ec;
        std::filesystem::rename(tmp, path, ec);
        if (ec)
        {
            std::filesystem::remove(tmp);
            throw std::runtime_error("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
        }
    }
}

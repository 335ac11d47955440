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

#include "rischan/config.hpp"
#include "rischan/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <set>

namespace rischan
{
    ConfigError::ConfigError(int line, const std::string &key, const std::string &what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + key + ": " + what
                                      : key + ": " + what),
          line_(line), key_(key)
    {
    }

    const char *to_string(Transcription t)
    {
        return t == Transcription::AsPrinted ? "as_printed" : "current_derived";
    }

    Transcription parse_transcription(std::string_view s)
    {
        if (s == "as_printed")
            return Transcription::AsPrinted;
        if (s == "current_derived")
            return Transcription::CurrentDerived;
        throw std::invalid_argument("expected as_printed or current_derived, got '" + std::string(s) + "'");
    }

    PhaseModel parse_model(std::string_view s)
    {
        if (s == "non_ideal")
            return PhaseModel::NonIdeal;
        if (s == "ideal")
            return PhaseModel::IdealPhase;
        throw std::invalid_argument("expected non_ideal or ideal, got '" + std::string(s) + "'");
    }

    Strategy parse_strategy(std::string_view s)
    {
        if (s == "optimal")
            return Strategy::Optimal;
        if (s == "1bit")
            return Strategy::OneBit;
        if (s == "specular")
            return Strategy::Specular;
        throw std::invalid_argument("expected optimal, 1bit or specular, got '" + std::string(s) + "'");
    }

    static Scenario parse_scenario(std::string_view s)
    {
        if (s == "umi")
            return Scenario::UMi;
        throw std::invalid_argument("only umi is supported, got '" + std::string(s) + "'");
    }

    static LinkState parse_link_state(std::string_view s)
    {
        if (s == "los")
            return LinkState::LOS;
        if (s == "nlos")
            return LinkState::NLOS;
        throw std::invalid_argument("expected los or nlos, got '" + std::string(s) + "'");
    }

    namespace
    {
        std::string_view trim(std::string_view s)
        {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string_view::npos)
                return {};
            const auto e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        }

        std::vector<std::string_view> split_list(std::string_view v)
        {
            std::vector<std::string_view> out;
            std::size_t pos = 0;
            while (true)
            {
                const auto c = v.find(',', pos);
                out.push_back(trim(v.substr(pos, c == std::string_view::npos ? v.npos : c - pos)));
                if (c == std::string_view::npos)
                    break;
                pos = c + 1;
            }
            for (auto item : out)
                if (item.empty())
                    throw std::invalid_argument("empty list item");
            return out;
        }

        double parse_double(std::string_view s)
        {
            double x = 0.0;
            const char *first = s.data();
            if (!s.empty() && s.front() == '+')
                ++first;
            const auto r = std::from_chars(first, s.data() + s.size(), x);
            if (s.empty() || r.ec != std::errc{} || r.ptr != s.data() + s.size() || !std::isfinite(x))
                throw std::invalid_argument("expected a finite number, got '" + std::string(s) + "'");
            return x;
        }

        long long parse_int(std::string_view s)
        {
            long long x = 0;
            const auto r = std::from_chars(s.data(), s.data() + s.size(), x);
            if (s.empty() || r.ec != std::errc{} || r.ptr != s.data() + s.size())
                throw std::invalid_argument("expected an integer, got '" + std::string(s) + "'");
            return x;
        }

        std::uint64_t parse_u64(std::string_view s)
        {
            std::uint64_t x = 0;
            const auto r = std::from_chars(s.data(), s.data() + s.size(), x);
            if (s.empty() || r.ec != std::errc{} || r.ptr != s.data() + s.size())
                throw std::invalid_argument("expected an unsigned 64-bit integer, got '" + std::string(s) + "'");
            return x;
        }

        template <class T, class F>
        std::string join(const std::vector<T> &v, F fmt)
        {
            std::string s;
            for (std::size_t i = 0; i < v.size(); ++i)
            {
                if (i)
                    s += ", ";
                s += fmt(v[i]);
            }
            return s;
        }

        struct Key
        {
            std::string name;
            std::function<void(RunConfig &, std::string_view)> set;
            std::function<std::string(const RunConfig &)> get;
        };

        void require(bool ok, const char *what)
        {
            if (!ok)
                throw std::invalid_argument(std::string("must be ") + what);
        }

        // `ref` is a generic lambda returning a reference into the config
        template <class Ref, class Ok>
        Key real(const char *name, Ref ref, Ok ok, const char *what)
        {
            return {name,
                    [=](RunConfig &c, std::string_view v)
                    {
                        const double x = parse_double(v);
                        require(ok(x), what);
                        ref(c) = x;
                    },
                    [=](const RunConfig &c) { return format_double(ref(c)); }};
        }

        template <class Ref, class Ok>
        Key integer(const char *name, Ref ref, Ok ok, const char *what)
        {
            return {name,
                    [=](RunConfig &c, std::string_view v)
                    {
                        const long long x = parse_int(v);
                        require(x >= -2147483647 && x <= 2147483647 && ok(int(x)), what);
                        ref(c) = int(x);
                    },
                    [=](const RunConfig &c) { return std::to_string(ref(c)); }};
        }

        template <class Ref>
        Key point(const char *name, Ref ref)
        {
            return {name,
                    [=](RunConfig &c, std::string_view v)
                    {
                        const auto items = split_list(v);
                        require(items.size() == 3, "three comma-separated coordinates x, y, z");
                        ref(c) = {parse_double(items[0]), parse_double(items[1]), parse_double(items[2])};
                    },
                    [=](const RunConfig &c)
                    {
                        const Position3 &p = ref(c);
                        return format_double(p.x) + ", " + format_double(p.y) + ", " + format_double(p.z);
                    }};
        }

        auto positive = [](double x) { return x > 0.0; };
        auto any_real = [](double) { return true; };
        auto non_negative = [](double x) { return x >= 0.0; };
        auto front_zenith = [](double x) { return x >= 0.0 && x < 90.0; };
        auto at_least_one = [](int x) { return x >= 1; };

        const std::vector<Key> &keys()
        {
            static const std::vector<Key> table = {
                {"run.experiment",
                 [](RunConfig &c, std::string_view v)
                 {
                     require(v == "pattern" || v == "snr-sweep" || v == "asa-sweep" || v == "dump-channel",
                             "one of pattern, snr-sweep, asa-sweep, dump-channel");
                     c.experiment = std::string(v);
                 },
                 [](const RunConfig &c) { return c.experiment; }},
                {"run.seed", [](RunConfig &c, std::string_view v) { c.seed = parse_u64(v); },
                 [](const RunConfig &c) { return std::to_string(c.seed); }},
                {"run.output_dir",
                 [](RunConfig &c, std::string_view v)
                 {
                     require(!v.empty(), "a non-empty path");
                     c.output_dir = std::string(v);
                 },
                 [](const RunConfig &c) { return c.output_dir; }},
                {"run.transcription", [](RunConfig &c, std::string_view v) { c.transcription = parse_transcription(v); },
                 [](const RunConfig &c) { return std::string(to_string(c.transcription)); }},

                integer("ris.size_x", [](auto &c) -> auto & { return c.size_x; }, at_least_one, ">= 1"),
                integer("ris.size_y", [](auto &c) -> auto & { return c.size_y; }, at_least_one, ">= 1"),
                real("ris.element_a", [](auto &c) -> auto & { return c.element_a; }, positive, "positive"),
                real("ris.element_b", [](auto &c) -> auto & { return c.element_b; }, positive, "positive"),
                real("ris.spacing", [](auto &c) -> auto & { return c.spacing; }, positive, "positive"),
                real("ris.bearing_deg", [](auto &c) -> auto & { return c.bearing_deg; }, any_real, "finite"),
                real("ris.downtilt_deg", [](auto &c) -> auto & { return c.downtilt_deg; }, any_real, "finite"),
                real("ris.slant_deg", [](auto &c) -> auto & { return c.slant_deg; }, any_real, "finite"),
                {"ris.strategy", [](RunConfig &c, std::string_view v) { c.strategy = parse_strategy(v); },
                 [](const RunConfig &c) { return std::string(to_string(c.strategy)); }},
                {"ris.model", [](RunConfig &c, std::string_view v) { c.model = parse_model(v); },
                 [](const RunConfig &c) { return std::string(to_string(c.model)); }},

                real("carrier.frequency_hz", [](auto &c) -> auto & { return c.carrier_hz; }, positive, "positive"),
                real("link.tx_power_dbm", [](auto &c) -> auto & { return c.tx_power_dbm; }, any_real, "finite"),
                real("link.noise_dbm", [](auto &c) -> auto & { return c.noise_dbm; }, any_real, "finite"),

                point("site.tx", [](auto &c) -> auto & { return c.tx; }),
                point("site.ris", [](auto &c) -> auto & { return c.ris; }),
                point("site.rx", [](auto &c) -> auto & { return c.rx; }),

                real("pattern.incidence_zenith_deg", [](auto &c) -> auto & { return c.incidence_zenith_deg; },
                     front_zenith, "in [0, 90)"),
                real("pattern.incidence_azimuth_deg", [](auto &c) -> auto & { return c.incidence_azimuth_deg; },
                     any_real, "finite"),
                real("pattern.target_zenith_deg", [](auto &c) -> auto & { return c.target_zenith_deg; },
                     front_zenith, "in [0, 90)"),
                real("pattern.target_azimuth_deg", [](auto &c) -> auto & { return c.target_azimuth_deg; },
                     any_real, "finite"),
                real("pattern.step_deg", [](auto &c) -> auto & { return c.cut_step_deg; },
                     [](double x) { return x > 0.0 && x <= 1.0; }, "in (0, 1]"),

                {"sweep.freqs_ghz",
                 [](RunConfig &c, std::string_view v)
                 {
                     std::vector<double> out;
                     for (auto item : split_list(v))
                     {
                         out.push_back(parse_double(item));
                         require(out.back() > 0.0, "a list of positive frequencies");
                     }
                     c.sweep_freqs_ghz = out;
                 },
                 [](const RunConfig &c) { return join(c.sweep_freqs_ghz, format_double); }},
                {"sweep.sides",
                 [](RunConfig &c, std::string_view v)
                 {
                     std::vector<int> out;
                     for (auto item : split_list(v))
                     {
                         const long long x = parse_int(item);
                         require(x >= 1 && x <= 4096, "a list of sides in [1, 4096]");
                         out.push_back(int(x));
                     }
                     c.sweep_sides = out;
                 },
                 [](const RunConfig &c) { return join(c.sweep_sides, [](int x) { return std::to_string(x); }); }},
                integer("sweep.full_scale_side", [](auto &c) -> auto & { return c.full_scale_side; },
                        [](int x) { return x >= 1 && x <= 4096; }, "in [1, 4096]"),
                {"sweep.strategies",
                 [](RunConfig &c, std::string_view v)
                 {
                     std::vector<Strategy> out;
                     for (auto item : split_list(v))
                         out.push_back(parse_strategy(item));
                     c.sweep_strategies = out;
                 },
                 [](const RunConfig &c)
                 { return join(c.sweep_strategies, [](Strategy s) { return std::string(to_string(s)); }); }},
                real("sweep.element_ratio", [](auto &c) -> auto & { return c.element_ratio; }, positive, "positive"),
                real("sweep.spacing_ratio", [](auto &c) -> auto & { return c.spacing_ratio; }, positive, "positive"),

                {"asa.values_deg",
                 [](RunConfig &c, std::string_view v)
                 {
                     std::vector<double> out;
                     for (auto item : split_list(v))
                     {
                         out.push_back(parse_double(item));
                         require(out.back() > 0.0, "a list of positive spreads");
                     }
                     c.asa_values_deg = out;
                 },
                 [](const RunConfig &c) { return join(c.asa_values_deg, format_double); }},
                integer("asa.seeds", [](auto &c) -> auto & { return c.asa_seeds; }, at_least_one, ">= 1"),

                {"scenario.name", [](RunConfig &c, std::string_view v) { c.scenario.scenario = parse_scenario(v); },
                 [](const RunConfig &) { return std::string("umi"); }},
                {"scenario.link_state",
                 [](RunConfig &c, std::string_view v) { c.scenario.link_state = parse_link_state(v); },
                 [](const RunConfig &c) { return std::string(to_string(c.scenario.link_state)); }},
                integer("scenario.clusters", [](auto &c) -> auto & { return c.scenario.clusters; }, at_least_one, ">= 1"),
                integer("scenario.rays_per_cluster", [](auto &c) -> auto & { return c.scenario.rays_per_cluster; },
                        at_least_one, ">= 1"),
                real("scenario.delay_spread_s", [](auto &c) -> auto & { return c.scenario.lsp.ds; }, positive, "positive"),
                real("scenario.asa_deg", [](auto &c) -> auto & { return c.scenario.lsp.asa; }, positive, "positive"),
                real("scenario.zsa_deg", [](auto &c) -> auto & { return c.scenario.lsp.zsa; }, positive, "positive"),
                real("scenario.asd_deg", [](auto &c) -> auto & { return c.scenario.lsp.asd; }, positive, "positive"),
                real("scenario.zsd_deg", [](auto &c) -> auto & { return c.scenario.lsp.zsd; }, positive, "positive"),
                real("scenario.shadow_fading_db", [](auto &c) -> auto & { return c.scenario.lsp.sf; }, any_real, "finite"),
                real("scenario.k_factor_db", [](auto &c) -> auto & { return c.scenario.lsp.k; }, any_real, "finite"),
                real("scenario.xpr_mean_db", [](auto &c) -> auto & { return c.scenario.xpr_mean_db; }, any_real, "finite"),
                real("scenario.xpr_std_db", [](auto &c) -> auto & { return c.scenario.xpr_std_db; }, non_negative, ">= 0"),
                real("scenario.delay_scaling", [](auto &c) -> auto & { return c.scenario.delay_scaling; },
                     [](double x) { return x >= 1.0; }, ">= 1"),
                real("scenario.cluster_shadowing_db", [](auto &c) -> auto & { return c.scenario.cluster_shadowing_db; },
                     non_negative, ">= 0"),
                real("scenario.intra_cluster_ratio", [](auto &c) -> auto & { return c.scenario.intra_cluster_ratio; },
                     non_negative, ">= 0"),
            };
            return table;
        }

        // First violated cross-field invariant as (key, message)
        std::optional<std::pair<std::string, std::string>> cross_check(const RunConfig &c)
        {
            if (c.spacing < std::max(c.element_a, c.element_b))
                return std::pair<std::string, std::string>{"ris.spacing", "must be >= the element dimensions"};
            if (c.element_ratio > c.spacing_ratio)
                return std::pair<std::string, std::string>{"sweep.element_ratio", "must not exceed sweep.spacing_ratio"};
            if (c.tx == c.ris)
                return std::pair<std::string, std::string>{"site.tx", "must differ from site.ris"};
            if (c.rx == c.ris)
                return std::pair<std::string, std::string>{"site.rx", "must differ from site.ris"};
            for (const auto &[key, p] : {std::pair{"site.tx", c.tx}, std::pair{"site.rx", c.rx}})
            {
                const Direction3 d = to_local(Pose{c.ris, deg2rad(c.bearing_deg), deg2rad(c.downtilt_deg), deg2rad(c.slant_deg)},
                                              direction_between(c.ris, p));
                if (!(d.z() > 0.0))
                    return std::pair<std::string, std::string>{key, "must lie in front of the panel"};
            }
            return std::nullopt;
        }
    }

    void RunConfig::validate() const
    {
        if (auto bad = cross_check(*this))
            throw std::invalid_argument(bad->first + ": " + bad->second);
    }

    RunConfig parse_config(std::string_view text)
    {
        std::map<std::string_view, const Key *> lookup;
        for (const Key &k : keys())
            lookup[k.name] = &k;

        RunConfig cfg;
        std::map<std::string, int> seen;
        int line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size())
        {
            const auto nl = text.find('\n', pos);
            std::string_view line = text.substr(pos, nl == text.npos ? text.npos : nl - pos);
            pos = nl == text.npos ? text.size() + 1 : nl + 1;
            ++line_no;

            if (const auto hash = line.find('#'); hash != line.npos)
                line = line.substr(0, hash);
            line = trim(line);
            if (line.empty())
                continue;

            const auto eq = line.find('=');
            if (eq == line.npos)
                throw ConfigError(line_no, std::string(line), "expected 'key = value'");
            const std::string key(trim(line.substr(0, eq)));
            const std::string_view value = trim(line.substr(eq + 1));

            const auto it = lookup.find(key);
            if (it == lookup.end())
                throw ConfigError(line_no, key, "unknown key");
            if (seen.count(key))
                throw ConfigError(line_no, key, "repeated key (first set on line " + std::to_string(seen[key]) + ")");
            seen[key] = line_no;

            try
            {
                it->second->set(cfg, value);
            }
            catch (const std::invalid_argument &e)
            {
                throw ConfigError(line_no, key, e.what());
            }
        }

        cfg.scenario.carrier = cfg.carrier_hz;
        cfg.scenario.seed = cfg.seed;

        if (auto bad = cross_check(cfg))
        {
            const auto it = seen.find(bad->first);
            throw ConfigError(it == seen.end() ? 0 : it->second, bad->first, bad->second);
        }
        return cfg;
    }

    std::string serialize_config(const RunConfig &cfg)
    {
        std::string s;
        for (const Key &k : keys())
            s += k.name + " = " + k.get(cfg) + '\n';
        return s;
    }

    std::string config_hash(const RunConfig &cfg)
    {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (unsigned char ch : serialize_config(cfg))
        {
            h ^= ch;
            h *= 0x100000001b3ULL;
        }
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
        return buf;
    }

    static Pose ris_orientation(const RunConfig &c)
    {
        return {c.ris, deg2rad(c.bearing_deg), deg2rad(c.downtilt_deg), deg2rad(c.slant_deg)};
    }

    static SiteGeometry site_of(const RunConfig &c)
    {
        SiteGeometry s;
        s.tx = c.tx;
        s.ris = c.ris;
        s.rx = c.rx;
        s.ris_pose = ris_orientation(c);
        return s;
    }

    static PanelConfig panel_of(const RunConfig &c)
    {
        PanelConfig p;
        p.size_x = c.size_x;
        p.size_y = c.size_y;
        p.spacing = c.spacing;
        p.element.length_a = c.element_a;
        p.element.width_b = c.element_b;
        p.element.wavelength = wavelength(c.carrier_hz);
        return p;
    }

    static ScenarioConfig scenario_of(const RunConfig &c)
    {
        ScenarioConfig s = c.scenario;
        s.carrier = c.carrier_hz;
        s.seed = c.seed;
        return s;
    }

    PatternSetup RunConfig::pattern_setup() const
    {
        PatternSetup s;
        s.panel = panel_of(*this);
        s.incidence = SphericalAngle::from_degrees(incidence_zenith_deg, incidence_azimuth_deg);
        s.target = SphericalAngle::from_degrees(target_zenith_deg, target_azimuth_deg);
        s.strategy = strategy;
        s.step_deg = cut_step_deg;
        s.transcription = transcription;
        return s;
    }

    ConfigSweepSetup RunConfig::config_sweep_setup(bool full_scale) const
    {
        ConfigSweepSetup s;
        s.site = site_of(*this);
        s.freqs_hz.clear();
        for (double f : sweep_freqs_ghz)
            s.freqs_hz.push_back(f * 1e9);
        s.sides = sweep_sides;
        if (full_scale && std::find(s.sides.begin(), s.sides.end(), full_scale_side) == s.sides.end())
            s.sides.push_back(full_scale_side);
        s.strategies = sweep_strategies;
        s.element_ratio = element_ratio;
        s.spacing_ratio = spacing_ratio;
        s.model = model;
        s.scenario = scenario_of(*this);
        s.budget = {tx_power_dbm, noise_dbm, 0.0};
        s.transcription = transcription;
        return s;
    }

    AsaSweepSetup RunConfig::asa_setup() const
    {
        AsaSweepSetup s;
        s.site = site_of(*this);
        s.panel = panel_of(*this);
        s.tx_ris = scenario_of(*this);
        s.asa_deg = asa_values_deg;
        s.seeds = asa_seeds;
        s.master_seed = seed;
        s.budget = {tx_power_dbm, noise_dbm, 0.0};
        s.transcription = transcription;
        return s;
    }
}

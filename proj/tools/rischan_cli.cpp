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
//
// Command-line front end:
//   rischan pattern      --config FILE --out DIR     -> DIR/pattern_cut.csv
//   rischan snr-sweep    [--full-scale]              -> DIR/snr_sweep.csv
//   rischan asa-sweep    [--seed N]                  -> DIR/asa_sweep.csv
//   rischan dump-channel [--seed N]                  -> DIR/channel.csv
// Every run also writes DIR/manifest.json and DIR/run.cfg (the resolved configuration).

#include "rischan/config.hpp"
#include "rischan/csv.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using namespace rischan;

namespace
{
    // One run per output directory
    class DirectoryLock
    {
    public:
        explicit DirectoryLock(const fs::path &dir) : path_(dir / ".rischan.lock")
        {
            fd_ = ::open(path_.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
            if (fd_ < 0)
                throw std::runtime_error("output directory is in use (lockfile " + path_.string() +
                                         " exists; remove it if no other run is active)");
            const std::string pid = std::to_string(::getpid()) + "\n";
            if (::write(fd_, pid.data(), pid.size()) < 0)
            {
                // the lock itself is what matters
            }
        }
        ~DirectoryLock()
        {
            ::close(fd_);
            std::error_code ec;
            fs::remove(path_, ec);
        }
        DirectoryLock(const DirectoryLock &) = delete;
        DirectoryLock &operator=(const DirectoryLock &) = delete;

    private:
        fs::path path_;
        int fd_ = -1;
    };

    std::string read_file(const std::string &path)
    {
        std::ifstream f(path, std::ios::binary);
        if (!f)
            throw std::runtime_error("cannot read config file " + path);
        std::ostringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }

    std::size_t count_rows(const std::string &csv)
    {
        return std::size_t(std::count(csv.begin(), csv.end(), '\n')) - 1;
    }

    // Deterministic manifest: no timestamps, no host information
    std::string manifest(const RunConfig &cfg, const std::string &command, bool full_scale,
                         const std::string &csv_name, std::size_t rows)
    {
        nlohmann::ordered_json m;
        m["tool"] = "rischan";
        m["version"] = "0.1.0";
        m["command"] = command;
        m["seed"] = cfg.seed;
        m["full_scale"] = full_scale;
        m["config_hash"] = config_hash(cfg);
        m["config_file"] = "run.cfg";
        m["config"] = serialize_config(cfg);
        m["outputs"] = nlohmann::ordered_json::array({{{"file", csv_name}, {"rows", rows}}});
        m["reproduce"] = "rischan " + command + " --config run.cfg" + (full_scale ? " --full-scale" : "");
        return m.dump(2) + "\n";
    }

    int run(const std::string &command, const std::string &config_path, const std::optional<std::uint64_t> &seed,
            const std::string &out, bool full_scale)
    {
        RunConfig cfg = config_path.empty() ? RunConfig{} : parse_config(read_file(config_path));
        cfg.experiment = command;
        if (seed)
        {
            cfg.seed = *seed;
            cfg.scenario.seed = *seed;
        }
        if (!out.empty())
            cfg.output_dir = out;

        const fs::path dir(cfg.output_dir);
        fs::create_directories(dir);
        DirectoryLock lock(dir);

        const std::string hash = config_hash(cfg);
        std::string csv, name;
        if (command == "pattern")
        {
            auto res = run_pattern_experiment(cfg.pattern_setup());
            res.seed = cfg.seed;
            res.config_hash = hash;
            csv = to_csv(res);
            name = "pattern_cut.csv";
        }
        else if (command == "snr-sweep")
        {
            auto res = run_config_sweep(cfg.config_sweep_setup(full_scale));
            res.seed = cfg.seed;
            res.config_hash = hash;
            csv = to_csv(res);
            name = "snr_sweep.csv";
        }
        else if (command == "asa-sweep")
        {
            auto res = run_asa_sweep(cfg.asa_setup());
            res.config_hash = hash;
            csv = to_csv(res);
            name = "asa_sweep.csv";
        }
        else
        {
            csv = to_csv(asa_channel(cfg.asa_setup(), cfg.seed, cfg.model));
            name = "channel.csv";
        }

        write_atomic(dir / name, csv);
        write_atomic(dir / "run.cfg", serialize_config(cfg));
        write_atomic(dir / "manifest.json", manifest(cfg, command, full_scale, name, count_rows(csv)));
        std::cout << (dir / name).string() << ": " << count_rows(csv) << " rows\n";
        return 0;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"rischan: cascaded Tx-RIS-Rx channel experiments"};
    app.require_subcommand(1);

    std::string config_path, out;
    std::uint64_t seed_value = 0;
    bool full_scale = false;

    const char *commands[][2] = {
        {"pattern", "radiation pattern cuts, ideal and non-ideal phase models"},
        {"snr-sweep", "SNR versus panel size, frequency and strategy"},
        {"asa-sweep", "SNR versus azimuth spread of arrival on the Tx-RIS link"},
        {"dump-channel", "cascaded impulse response of one realization"},
    };
    std::vector<CLI::Option *> seed_opts;
    for (auto &c : commands)
    {
        CLI::App *sub = app.add_subcommand(c[0], c[1]);
        sub->add_option("--config", config_path, "configuration file (defaults apply when omitted)")
            ->check(CLI::ExistingFile);
        seed_opts.push_back(sub->add_option("--seed", seed_value, "master seed, overrides run.seed"));
        sub->add_option("--out", out, "output directory, overrides run.output_dir");
        sub->add_flag("--full-scale", full_scale, "add the full-scale panel side to the size sweep");
    }

    CLI11_PARSE(app, argc, argv);

    const CLI::App *chosen = app.get_subcommands().front();
    std::optional<std::uint64_t> seed;
    for (auto *o : seed_opts)
        if (o->count() > 0)
            seed = seed_value;

    try
    {
        return run(chosen->get_name(), config_path, seed, out, full_scale);
    }
    catch (const ConfigError &e)
    {
        std::cerr << "rischan: config error: " << e.what() << '\n';
        return 2;
    }
    catch (const std::exception &e)
    {
        std::cerr << "rischan: error: " << e.what() << '\n';
        return 1;
    }
}

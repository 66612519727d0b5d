// Copyright 2026 The qauction Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>

#include "qauction/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Quantum sealed-bid auction simulator"};
    app.require_subcommand(1);

    std::string config_path;
    CLI::App* run = app.add_subcommand(
        "run", "Run one auction from a JSON config; writes the result JSON "
               "and the transcript JSONL named in the config");
    run->add_option("config", config_path, "Path to the run configuration")
        ->required();

    std::string battery;
    qauction::cli::VerifyOptions options;
    CLI::App* verify = app.add_subcommand(
        "verify", "Run a verification battery: claims, oracle, subspace, or "
                  "contrast");
    verify->add_option("battery", battery, "Battery name")->required();
    verify->add_option("--max-n", options.max_n, "Largest bidder count");
    verify->add_option("--max-b", options.max_b, "Largest qubits per bidder");
    verify->add_option("--max-m", options.max_m, "Largest item count");
    verify->add_option("--max-mp", options.max_mp, "Largest price bits");
    verify->add_option("--steps", options.steps, "Search steps (0 = default)");
    verify->add_option("--delta", options.delta, "Phase scale delta");
    verify->add_option("--seed", options.seed, "Random seed");
    verify->add_option("--out", options.out_path, "Write the JSON report here");

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) {
        return qauction::cli::run_command(config_path);
    }
    return qauction::cli::verify_command(battery, options);
}

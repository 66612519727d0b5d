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

#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "qauction/experiments.hpp"

namespace qauction::cli {

/// Field-precise configuration rejection; the field path names the JSON
/// location that failed (e.g. "auction.language.priceBits").
class ConfigError : public std::runtime_error {
  public:
    ConfigError(std::string field, const std::string& message)
        : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

  private:
    std::string field_;
};

inline constexpr int kOracleQubitCap = 12;

/// State-size cap: QAUCTION_MAX_QUBITS when set, else 20.
int effective_max_qubits();

struct RunConfig {
    AuctionConfig auction;
    std::vector<BidderStrategy> strategies;
    SearchSchedule schedule;
    AuctionPolicy policy;
    std::uint64_t seed = 1;
    std::string result_path = "result.json";
    std::string transcript_path = "transcript.jsonl";
};

/// Parses and validates a declarative run configuration. Every module
/// precondition is checked here; violations raise ConfigError with the
/// offending field path.
RunConfig parse_run_config(const nlohmann::json& j);
RunConfig load_run_config(const std::string& path);

nlohmann::ordered_json result_to_json(const AuctionResult& result,
                                      const AuctionConfig& config);

// Exit codes shared by the command entry points.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;    // verify battery assertion failed
inline constexpr int kExitValidation = 2; // bad config or caps exceeded
inline constexpr int kExitRuntime = 3;

/// Executes one auction from a config file and writes the result JSON and
/// the transcript JSONL. Returns an exit code.
int run_command(const std::string& config_path);

struct VerifyOptions {
    int max_n = 5;
    int max_b = 5;
    int max_m = 3;
    int max_mp = 3;
    int steps = 0; // 0 = battery default
    double delta = 1.0;
    std::uint64_t seed = 1;
    std::string out_path; // optional report file (JSON)
};

/// Batteries: "claims", "oracle", "subspace", "contrast". Prints a short
/// report, optionally writes JSON, and returns kExitOk only when every
/// assertion in the battery holds.
int verify_command(const std::string& battery, const VerifyOptions& options);

} // namespace qauction::cli

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

#include "qauction/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>

namespace qauction::cli {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

const json& require(const json& j, const std::string& key,
                    const std::string& path) {
    if (!j.is_object() || !j.contains(key)) {
        throw ConfigError(path + "." + key, "missing required field");
    }
    return j.at(key);
}

int require_int(const json& j, const std::string& key, const std::string& path) {
    const json& v = require(j, key, path);
    if (!v.is_number_integer()) {
        throw ConfigError(path + "." + key, "expected an integer");
    }
    return v.get<int>();
}

double require_number(const json& j, const std::string& key,
                      const std::string& path) {
    const json& v = require(j, key, path);
    if (!v.is_number()) {
        throw ConfigError(path + "." + key, "expected a number");
    }
    return v.get<double>();
}

std::string require_string(const json& j, const std::string& key,
                           const std::string& path) {
    const json& v = require(j, key, path);
    if (!v.is_string()) {
        throw ConfigError(path + "." + key, "expected a string");
    }
    return v.get<std::string>();
}

Complex parse_amplitude(const json& j, const std::string& path) {
    if (j.is_number()) {
        return Complex{j.get<double>(), 0.0};
    }
    if (j.is_object()) {
        double re = j.contains("re") ? j.at("re").get<double>() : 0.0;
        double im = j.contains("im") ? j.at("im").get<double>() : 0.0;
        return Complex{re, im};
    }
    throw ConfigError(path, "amplitude must be a number or {re, im}");
}

BidLanguage parse_language(const json& j, int bits, const std::string& path) {
    std::string mode = require_string(j, "mode", path);
    double scale = j.contains("priceScale")
                       ? require_number(j, "priceScale", path)
                       : 1.0;
    try {
        if (mode == "single-item") {
            int price_bits = require_int(j, "priceBits", path);
            if (price_bits != bits) {
                throw ConfigError(path + ".priceBits",
                                  "single-item price bits must equal bitsPerBidder");
            }
            std::string name = j.contains("items")
                                   ? j.at("items").at(0).get<std::string>()
                                   : "item";
            return BidLanguage::single_item(price_bits, scale, name);
        }
        if (mode == "combinatorial") {
            int item_bits = require_int(j, "itemBits", path);
            int price_bits = require_int(j, "priceBits", path);
            if (item_bits + price_bits != bits) {
                throw ConfigError(
                    path + ".itemBits",
                    "itemBits + priceBits must equal bitsPerBidder");
            }
            const json& items = require(j, "items", path);
            if (!items.is_array() ||
                static_cast<int>(items.size()) != item_bits) {
                throw ConfigError(path + ".items",
                                  "need exactly one item name per item bit");
            }
            std::vector<std::string> names;
            for (const json& name : items) {
                names.push_back(name.get<std::string>());
            }
            return BidLanguage::combinatorial(names, price_bits, scale);
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(path, e.what());
    }
    throw ConfigError(path + ".mode",
                      "unknown mode '" + mode +
                          "' (expected single-item or combinatorial)");
}

Bid parse_bid(const json& j, const BidLanguage& lang, const std::string& path) {
    if (j.contains("null") && j.at("null").is_boolean() &&
        j.at("null").get<bool>()) {
        return Bid::null();
    }
    std::vector<std::string> bundle;
    if (j.contains("bundle")) {
        if (!j.at("bundle").is_array()) {
            throw ConfigError(path + ".bundle", "expected an array of item names");
        }
        for (const json& name : j.at("bundle")) {
            bundle.push_back(name.get<std::string>());
        }
    }
    if (bundle.empty()) {
        return Bid::null();
    }
    double price = require_number(j, "price", path);
    if (price < 0.0) {
        throw ConfigError(path + ".price", "price must be nonnegative");
    }
    std::uint32_t mask;
    try {
        mask = lang.mask_for(bundle);
    } catch (const std::exception& e) {
        throw ConfigError(path + ".bundle", e.what());
    }
    if (lang.mode == BidMode::kSingleItem) {
        mask = 1;
    }
    return Bid::of(mask, price);
}

BidSuperposition parse_superposition(const json& j, const BidLanguage& lang,
                                     int first_bidder, int group_size,
                                     const std::string& path) {
    if (!j.is_array() || j.empty()) {
        throw ConfigError(path, "expected a nonempty array of terms");
    }
    BidSuperposition sup;
    sup.first_bidder = first_bidder;
    sup.group_size = group_size;
    for (std::size_t t = 0; t < j.size(); ++t) {
        const json& term = j.at(t);
        std::string term_path = path + "[" + std::to_string(t) + "]";
        WeightedBids weighted;
        weighted.amplitude = parse_amplitude(require(term, "amplitude", term_path),
                                             term_path + ".amplitude");
        if (group_size == 1) {
            weighted.bids.push_back(parse_bid(term, lang, term_path));
        } else {
            const json& bids = require(term, "bids", term_path);
            if (!bids.is_array() ||
                static_cast<int>(bids.size()) != group_size) {
                throw ConfigError(term_path + ".bids",
                                  "need one bid per group member");
            }
            for (std::size_t g = 0; g < bids.size(); ++g) {
                weighted.bids.push_back(
                    parse_bid(bids.at(g), lang,
                              term_path + ".bids[" + std::to_string(g) + "]"));
            }
        }
        sup.terms.push_back(std::move(weighted));
    }
    // Accept superpositions written with limited precision: renormalize
    // when within 1e-6 of unit norm, reject anything further off.
    double n2 = 0.0;
    for (const WeightedBids& term : sup.terms) {
        n2 += std::norm(term.amplitude);
    }
    double norm = std::sqrt(n2);
    if (std::abs(norm - 1.0) > 1e-6) {
        throw ConfigError(path, "term amplitudes are not normalized");
    }
    for (WeightedBids& term : sup.terms) {
        term.amplitude /= norm;
    }
    try {
        sup.validate(lang);
    } catch (const std::exception& e) {
        throw ConfigError(path, e.what());
    }
    return sup;
}

BidderStrategy parse_strategy(const json& j, const BidLanguage& lang,
                              int first_bidder, const std::string& path,
                              int& group_size) {
    std::string kind = require_string(j, "kind", path);
    group_size = 1;
    if (kind == "joint-group") {
        const json& members = require(j, "members", path);
        if (!members.is_array() || members.empty()) {
            throw ConfigError(path + ".members",
                              "expected a nonempty array of bidder numbers");
        }
        group_size = static_cast<int>(members.size());
        for (int g = 0; g < group_size; ++g) {
            if (members.at(g).get<int>() != first_bidder + g + 1) {
                throw ConfigError(path + ".members",
                                  "members must be contiguous and in order");
            }
        }
        return JointGroupStrategy{
            parse_superposition(require(j, "superposition", path), lang,
                                first_bidder, group_size,
                                path + ".superposition")};
    }
    if (kind == "honest") {
        return HonestStrategy{
            parse_superposition(require(j, "superposition", path), lang,
                                first_bidder, 1, path + ".superposition")};
    }
    if (kind == "null-excluder") {
        return NullExcluderStrategy{
            parse_superposition(require(j, "superposition", path), lang,
                                first_bidder, 1, path + ".superposition")};
    }
    if (kind == "init-deviator") {
        return InitDeviatorStrategy{
            parse_superposition(require(j, "init", path), lang, first_bidder, 1,
                                path + ".init"),
            parse_superposition(require(j, "search", path), lang, first_bidder,
                                1, path + ".search")};
    }
    if (kind == "operator-switcher") {
        OperatorSwitcherStrategy s{
            parse_superposition(require(j, "init", path), lang, first_bidder, 1,
                                path + ".init"),
            {}};
        const json& segments = require(j, "segments", path);
        if (!segments.is_array() || segments.empty()) {
            throw ConfigError(path + ".segments", "expected a nonempty array");
        }
        for (std::size_t i = 0; i < segments.size(); ++i) {
            std::string seg_path = path + ".segments[" + std::to_string(i) + "]";
            const json& seg = segments.at(i);
            s.segments.push_back(SwitchSegment{
                require_int(seg, "fromStep", seg_path),
                parse_superposition(require(seg, "superposition", seg_path),
                                    lang, first_bidder, 1,
                                    seg_path + ".superposition")});
        }
        return s;
    }
    throw ConfigError(path + ".kind", "unknown strategy kind '" + kind + "'");
}

} // namespace

int effective_max_qubits() {
    if (const char* env = std::getenv("QAUCTION_MAX_QUBITS")) {
        int v = std::atoi(env);
        if (v >= 1) {
            return v;
        }
    }
    return kDefaultMaxQubits;
}

RunConfig parse_run_config(const json& j) {
    const json& auction = require(j, "auction", "$");
    int n = require_int(auction, "bidders", "auction");
    int b = require_int(auction, "bitsPerBidder", "auction");
    if (n < 1) {
        throw ConfigError("auction.bidders", "need at least one bidder");
    }
    if (b < 1) {
        throw ConfigError("auction.bitsPerBidder", "need at least one qubit");
    }
    int cap = effective_max_qubits();
    if (n * b > cap) {
        throw ConfigError("auction",
                          "state of " + std::to_string(n * b) +
                              " qubits exceeds the cap of " +
                              std::to_string(cap) +
                              " (QAUCTION_MAX_QUBITS overrides)");
    }
    BidLanguage lang =
        parse_language(require(auction, "language", "auction"), b,
                       "auction.language");

    RunConfig config{AuctionConfig(RegisterLayout(n, b, cap), lang),
                     {},
                     {},
                     {},
                     1,
                     "result.json",
                     "transcript.jsonl"};

    const json& strategies = require(j, "strategies", "$");
    if (!strategies.is_array()) {
        throw ConfigError("strategies", "expected an array");
    }
    int next = 0;
    for (std::size_t i = 0; i < strategies.size(); ++i) {
        std::string path = "strategies[" + std::to_string(i) + "]";
        if (next >= n) {
            throw ConfigError(path, "more strategies than bidders");
        }
        int group_size = 1;
        config.strategies.push_back(
            parse_strategy(strategies.at(i), lang, next, path, group_size));
        next += group_size;
    }
    if (next != n) {
        throw ConfigError("strategies", "strategies must cover every bidder");
    }

    const json& schedule = require(j, "schedule", "$");
    config.schedule.steps = require_int(schedule, "steps", "schedule");
    config.schedule.delta = require_number(schedule, "delta", "schedule");
    std::string scheme = require_string(schedule, "scheme", "schedule");
    if (scheme == "hamming") {
        config.schedule.scheme = EigenvalueScheme::kHamming;
    } else if (scheme == "permuted") {
        config.schedule.scheme = EigenvalueScheme::kPermuted;
    } else {
        throw ConfigError("schedule.scheme",
                          "expected 'hamming' or 'permuted', got '" + scheme + "'");
    }
    try {
        config.schedule.validate();
    } catch (const std::exception& e) {
        throw ConfigError("schedule", e.what());
    }

    if (j.contains("policy")) {
        const json& policy = j.at("policy");
        if (policy.contains("nullCheckProb")) {
            config.policy.null_check_prob =
                require_number(policy, "nullCheckProb", "policy");
        }
        if (policy.contains("probeProb")) {
            config.policy.probe_prob = require_number(policy, "probeProb", "policy");
        }
        try {
            config.policy.validate();
        } catch (const std::exception& e) {
            throw ConfigError("policy", e.what());
        }
    }

    if (j.contains("seed")) {
        if (!j.at("seed").is_number_unsigned() && !j.at("seed").is_number_integer()) {
            throw ConfigError("seed", "expected an integer");
        }
        config.seed = j.at("seed").get<std::uint64_t>();
    }
    if (j.contains("output")) {
        const json& output = j.at("output");
        if (output.contains("result")) {
            config.result_path = output.at("result").get<std::string>();
        }
        if (output.contains("transcript")) {
            config.transcript_path = output.at("transcript").get<std::string>();
        }
    }

    // Dry-run the strategy compilation so operator-level preconditions
    // (unitarity, block sizes) also surface as validation errors.
    try {
        compile_strategies(config.auction, config.strategies, 1);
    } catch (const std::exception& e) {
        throw ConfigError("strategies", e.what());
    }
    return config;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("$", "cannot open config file '" + path + "'");
    }
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError("$", std::string("invalid JSON: ") + e.what());
    }
    return parse_run_config(j);
}

ordered_json result_to_json(const AuctionResult& result,
                            const AuctionConfig& config) {
    ordered_json j;
    j["seed"] = result.seed;
    j["outcome"]["index"] = result.outcome_index;
    j["outcome"]["allocation"] = ordered_json::array();
    for (const Bid& bid : result.allocation.bids) {
        ordered_json b;
        if (bid.is_null()) {
            b["null"] = true;
        } else {
            b["bundle"] = config.language.names_for(bid.bundle_mask);
            b["price"] = bid.price;
        }
        j["outcome"]["allocation"].push_back(b);
    }
    j["winners"] = ordered_json::array();
    for (const WinnerEntry& w : result.winners) {
        ordered_json entry;
        entry["bidder"] = w.bidder + 1;
        entry["bundle"] = config.language.names_for(w.bid.bundle_mask);
        entry["price"] = w.bid.price;
        j["winners"].push_back(entry);
    }
    j["payments"] = result.payments;
    j["flaggedBidders"] = ordered_json::array();
    for (int bidder : result.flagged_bidders) {
        j["flaggedBidders"].push_back(bidder + 1);
    }
    j["distribution"] = ordered_json::object();
    for (const auto& [x, p] : result.full_distribution) {
        j["distribution"][std::to_string(x)] = p;
    }
    j["degenerateGround"] = result.degenerate_ground;
    j["maxNormDrift"] = result.max_norm_drift;
    j["steps"] = {{"total", result.steps.total},
                  {"main", result.steps.main},
                  {"nullCheck", result.steps.null_check},
                  {"probes", result.steps.probes}};
    return j;
}

int run_command(const std::string& config_path) {
    try {
        RunConfig config = load_run_config(config_path);
        SeededRng rng(config.seed);
        AuctionResult result = run_auction(config.auction, config.strategies,
                                           config.schedule, config.policy, rng);
        std::ofstream result_out(config.result_path);
        if (!result_out) {
            std::cerr << "cannot write " << config.result_path << '\n';
            return kExitRuntime;
        }
        result_out << result_to_json(result, config.auction).dump(2) << '\n';
        std::ofstream transcript_out(config.transcript_path);
        if (!transcript_out) {
            std::cerr << "cannot write " << config.transcript_path << '\n';
            return kExitRuntime;
        }
        write_transcript_jsonl(result.transcript, transcript_out);
        std::cout << "outcome index " << result.outcome_index << "; ";
        if (result.winners.empty()) {
            std::cout << "no winner";
        } else {
            for (const WinnerEntry& w : result.winners) {
                std::cout << "bidder " << w.bidder + 1 << " pays " << w.bid.price
                          << " ";
            }
        }
        std::cout << "\nresult: " << config.result_path
                  << "\ntranscript: " << config.transcript_path << '\n';
        return kExitOk;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "runtime error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

namespace {

void maybe_write_report(const std::string& path, const ordered_json& report) {
    if (path.empty()) {
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write report to " + path);
    }
    out << report.dump(2) << '\n';
}

AuctionConfig canonical_config(int n, int b) {
    return AuctionConfig(RegisterLayout(n, b), BidLanguage::single_item(b));
}

std::vector<BidderStrategy> canonical_deviation_profile(
    const AuctionConfig& config) {
    // Bidder 1 intends the 2nd-highest bid but initializes with the
    // opposite-phase superposition; the remaining bidders are honest.
    Index levels = config.language.price_levels();
    std::vector<BidderStrategy> strategies;
    int n = config.layout.n_bidders();
    for (int i = 0; i < n; ++i) {
        Index k = i == 0 ? levels - 2 : levels - 1;
        if (k == 0) {
            k = 1;
        }
        Bid bid = decode_bid(k, config.language);
        BidSuperposition plus;
        plus.first_bidder = i;
        plus.terms = {WeightedBids{{Bid::null()}, Complex{M_SQRT1_2, 0.0}},
                      WeightedBids{{bid}, Complex{M_SQRT1_2, 0.0}}};
        if (i == 0) {
            BidSuperposition minus = plus;
            minus.terms[1].amplitude = Complex{-M_SQRT1_2, 0.0};
            strategies.push_back(InitDeviatorStrategy{minus, plus});
        } else {
            strategies.push_back(HonestStrategy{plus});
        }
    }
    return strategies;
}

} // namespace

int verify_command(const std::string& battery, const VerifyOptions& options) {
    try {
        if (battery == "claims") {
            if (options.max_n < 1 || options.max_b < 1 || options.max_m < 1 ||
                options.max_mp < 1) {
                std::cerr << "claims: ranges must be >= 1\n";
                return kExitValidation;
            }
            if (options.max_n > 12 || options.max_b > 10 || options.max_m > 8 ||
                options.max_mp > 8) {
                std::cerr << "claims: ranges exceed the desk-scale caps\n";
                return kExitValidation;
            }
            CountingReport report = verify_counting_claims(
                options.max_n, options.max_b, options.max_m, options.max_mp);
            std::cout << "counting rows: " << report.rows.size()
                      << ", deviation counts "
                      << (report.deviation_counts_match ? "match" : "MISMATCH")
                      << ", all claims " << (report.all_pass ? "hold" : "FAIL")
                      << '\n';
            maybe_write_report(options.out_path, to_json(report));
            return report.all_pass ? kExitOk : kExitFailure;
        }
        if (battery == "oracle") {
            int max_n = std::min(options.max_n, 3);
            int max_b = std::min(options.max_b, 3);
            int steps = options.steps > 0 ? options.steps : 50;
            double worst = 0.0;
            for (int n = 2; n <= std::max(2, max_n); ++n) {
                for (int b = 2; b <= std::max(2, max_b); ++b) {
                    if (n * b > kOracleQubitCap) {
                        continue;
                    }
                    AuctionConfig config = canonical_config(n, b);
                    for (EigenvalueScheme scheme :
                         {EigenvalueScheme::kHamming, EigenvalueScheme::kPermuted}) {
                        SearchSchedule schedule{steps, options.delta, scheme};
                        worst = std::max(
                            worst, oracle_compare(
                                       config,
                                       canonical_deviation_profile(config),
                                       schedule));
                    }
                }
            }
            std::cout << "oracle max |amplitude deviation| = " << worst << '\n';
            ordered_json report;
            report["maxAmplitudeDeviation"] = worst;
            report["pass"] = worst <= 1e-10;
            maybe_write_report(options.out_path, report);
            return worst <= 1e-10 ? kExitOk : kExitFailure;
        }
        if (battery == "subspace") {
            AuctionConfig config = canonical_config(2, 2);
            SearchSchedule schedule{options.steps > 0 ? options.steps : 60,
                                    options.delta, EigenvalueScheme::kPermuted};
            SubspaceReport report = verify_subspace_equivalence(config, schedule);
            int passed = 0;
            for (const SubspaceCase& c : report.cases) {
                if (c.max_amplitude_deviation <= 1e-9 &&
                    c.max_out_of_subspace < 1e-12) {
                    ++passed;
                }
            }
            std::cout << "subspace equivalence: " << passed << "/"
                      << report.cases.size() << " cases, max deviation "
                      << report.max_amplitude_deviation << ", max leakage "
                      << report.max_out_of_subspace << '\n';
            maybe_write_report(options.out_path, to_json(report));
            return report.pass ? kExitOk : kExitFailure;
        }
        if (battery == "contrast") {
            AuctionConfig config = canonical_config(2, 2);
            SearchSchedule schedule{options.steps > 0 ? options.steps : 4000,
                                    options.delta, EigenvalueScheme::kPermuted};
            ContrastReport report = scheme_contrast(
                config, canonical_deviation_profile(config), schedule);
            std::cout << "low-bid win probability: hamming "
                      << report.hamming_low_bid_win << ", permuted "
                      << report.permuted_low_bid_win << '\n';
            maybe_write_report(options.out_path, to_json(report));
            bool pass = report.permuted_low_bid_win < report.hamming_low_bid_win;
            return pass ? kExitOk : kExitFailure;
        }
        std::cerr << "unknown battery '" << battery
                  << "' (expected claims, oracle, subspace, or contrast)\n";
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "runtime error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

} // namespace qauction::cli

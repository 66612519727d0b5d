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

#include "qauction/protocol.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qauction {

namespace {

enum class StepKind { kMain, kNullCheck, kProbe };

const BidSuperposition& strategy_init(const BidderStrategy& strategy) {
    return std::visit(
        [](const auto& s) -> const BidSuperposition& {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, InitDeviatorStrategy>) {
                return s.init;
            } else if constexpr (std::is_same_v<T, OperatorSwitcherStrategy>) {
                return s.init;
            } else {
                return s.superposition;
            }
        },
        strategy);
}

const BidSuperposition& strategy_search_at(const BidderStrategy& strategy,
                                           int step) {
    return std::visit(
        [step](const auto& s) -> const BidSuperposition& {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, InitDeviatorStrategy>) {
                return s.search;
            } else if constexpr (std::is_same_v<T, OperatorSwitcherStrategy>) {
                const SwitchSegment* active = nullptr;
                for (const SwitchSegment& seg : s.segments) {
                    if (seg.from_step <= step) {
                        active = &seg;
                    }
                }
                if (active == nullptr) {
                    throw std::invalid_argument(
                        "OperatorSwitcher: no segment covers step " +
                        std::to_string(step));
                }
                return active->superposition;
            } else {
                return s.superposition;
            }
        },
        strategy);
}

void validate_strategy(const BidderStrategy& strategy, const BidLanguage& lang,
                       int expected_first, int& group_size) {
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, HonestStrategy>) {
                s.superposition.validate(lang);
                if (!s.superposition.contains_null(lang)) {
                    throw std::invalid_argument(
                        "honest strategy must include the null bid");
                }
                group_size = s.superposition.group_size;
            } else if constexpr (std::is_same_v<T, NullExcluderStrategy>) {
                s.superposition.validate(lang);
                if (s.superposition.contains_null(lang)) {
                    throw std::invalid_argument(
                        "null-excluder strategy must not include the null bid");
                }
                group_size = s.superposition.group_size;
            } else if constexpr (std::is_same_v<T, InitDeviatorStrategy>) {
                s.init.validate(lang);
                s.search.validate(lang);
                if (s.init.first_bidder != s.search.first_bidder ||
                    s.init.group_size != s.search.group_size) {
                    throw std::invalid_argument(
                        "init-deviator: init and search must own the same block");
                }
                group_size = s.search.group_size;
            } else if constexpr (std::is_same_v<T, OperatorSwitcherStrategy>) {
                s.init.validate(lang);
                if (s.segments.empty() || s.segments.front().from_step != 1) {
                    throw std::invalid_argument(
                        "operator-switcher: segments must start at step 1");
                }
                int prev = 0;
                for (const SwitchSegment& seg : s.segments) {
                    if (seg.from_step <= prev) {
                        throw std::invalid_argument(
                            "operator-switcher: segment steps must ascend");
                    }
                    prev = seg.from_step;
                    seg.superposition.validate(lang);
                    if (seg.superposition.first_bidder != s.init.first_bidder ||
                        seg.superposition.group_size != s.init.group_size) {
                        throw std::invalid_argument(
                            "operator-switcher: segments must own the init block");
                    }
                }
                group_size = s.init.group_size;
            } else if constexpr (std::is_same_v<T, JointGroupStrategy>) {
                s.superposition.validate(lang);
                if (s.superposition.group_size < 1) {
                    throw std::invalid_argument("joint group must not be empty");
                }
                group_size = s.superposition.group_size;
            }
            const BidSuperposition& owner = strategy_init(strategy);
            if (owner.first_bidder != expected_first) {
                throw std::invalid_argument(
                    "strategies must cover the bidders contiguously in order");
            }
        },
        strategy);
}

} // namespace

void AuctionPolicy::validate() const {
    if (null_check_prob < 0.0 || probe_prob < 0.0 ||
        null_check_prob + probe_prob > 1.0) {
        throw std::invalid_argument(
            "AuctionPolicy: step probabilities must be nonnegative and sum to <= 1");
    }
}

std::vector<BlockOperators> compile_strategies(
    const AuctionConfig& config, const std::vector<BidderStrategy>& strategies,
    int steps) {
    std::vector<BlockOperators> blocks;
    int next = 0;
    for (const BidderStrategy& strategy : strategies) {
        int group_size = 0;
        validate_strategy(strategy, config.language, next, group_size);
        UnitaryMatrix init =
            synthesize_joint_operator(strategy_init(strategy), config.language);
        std::vector<UnitaryMatrix> search_ops;
        if (std::holds_alternative<OperatorSwitcherStrategy>(strategy)) {
            search_ops.reserve(steps);
            for (int s = 1; s <= steps; ++s) {
                search_ops.push_back(synthesize_joint_operator(
                    strategy_search_at(strategy, s), config.language));
            }
            if (search_ops.empty()) {
                search_ops.push_back(synthesize_joint_operator(
                    strategy_search_at(strategy, 1), config.language));
            }
        } else {
            search_ops.push_back(synthesize_joint_operator(
                strategy_search_at(strategy, 1), config.language));
        }
        blocks.push_back(BlockOperators{std::move(init), std::move(search_ops)});
        next += group_size;
    }
    if (next != config.layout.n_bidders()) {
        throw std::invalid_argument("strategies must cover every bidder");
    }
    return blocks;
}

std::vector<std::set<Index>> search_supports(
    const AuctionConfig& config, const std::vector<BidderStrategy>& strategies) {
    int n = config.layout.n_bidders();
    int b = config.layout.bits_per_bidder();
    std::vector<std::set<Index>> supports(n);
    for (const BidderStrategy& strategy : strategies) {
        const BidSuperposition& sup = strategy_search_at(strategy, 1);
        for (Index joint : sup.term_indices(config.language)) {
            for (int g = 0; g < sup.group_size; ++g) {
                int shift = (sup.group_size - 1 - g) * b;
                Index digit = (joint >> shift) & (config.layout.block_dimension() - 1);
                supports[sup.first_bidder + g].insert(digit);
            }
        }
    }
    return supports;
}

double classical_ne_bid(double value, int n_bidders) {
    if (n_bidders < 1) {
        throw std::invalid_argument("classical_ne_bid: need at least one bidder");
    }
    if (value < 0.0 || value > 1.0) {
        throw std::invalid_argument("classical_ne_bid: value must lie in [0, 1]");
    }
    return (n_bidders - 1) * value / n_bidders;
}

AuctionResult run_auction(const AuctionConfig& config,
                          const std::vector<BidderStrategy>& strategies,
                          const SearchSchedule& schedule,
                          const AuctionPolicy& policy, SeededRng& rng) {
    schedule.validate();
    policy.validate();

    // Assign every combined step a purpose up front; bidders see only a
    // register and an operator request, never the purpose.
    std::vector<StepKind> kinds(schedule.steps);
    StepCounts counts;
    counts.total = schedule.steps;
    for (StepKind& kind : kinds) {
        double u = rng.next_double();
        if (u < policy.null_check_prob) {
            kind = StepKind::kNullCheck;
            ++counts.null_check;
        } else if (u < policy.null_check_prob + policy.probe_prob) {
            kind = StepKind::kProbe;
            ++counts.probes;
        } else {
            kind = StepKind::kMain;
            ++counts.main;
        }
    }

    std::vector<BlockOperators> blocks =
        compile_strategies(config, strategies, counts.main);
    PhaseModel main_phases =
        revenue_phase_model(config, EvaluationRule{}, schedule.scheme);
    PhaseModel null_phases = null_check_phase_model(config, schedule.scheme);

    AuctionResult result;
    result.seed = rng.seed();
    result.steps = counts;

    Transcript& transcript = result.transcript;
    auto log = [&](int step, double f, const std::string& actor,
                   const std::string& action, const std::string& reg,
                   double detail = 0.0) {
        transcript.events.push_back(TranscriptEvent{step, f, actor, action, reg,
                                                    rng.draw_count(), detail});
    };
    auto actor_name = [](const BlockOperators& block) {
        int first = block.init.first_bidder() + 1;
        if (block.init.bidder_count() == 1) {
            return "bidder:" + std::to_string(first);
        }
        return "bidders:" + std::to_string(first) + "-" +
               std::to_string(first + block.init.bidder_count() - 1);
    };

    // Both registers are initialized by the bidders' init operators.
    StateVector main_state = StateVector::ground_state(config.layout);
    StateVector null_state = StateVector::ground_state(config.layout);
    log(0, 0.0, "auctioneer", "send-register", "main");
    log(0, 0.0, "auctioneer", "send-register", "null-check");
    for (const BlockOperators& block : blocks) {
        apply_local_in_place(main_state, block.init);
        log(0, 0.0, actor_name(block), "apply-init-op", "main");
        apply_local_in_place(null_state, block.init);
        log(0, 0.0, actor_name(block), "apply-init-op", "null-check");
    }
    result.degenerate_ground = [&] {
        double best = std::numeric_limits<double>::infinity();
        int hits = 0;
        for (Index x = 0; x < main_state.amplitudes().size(); ++x) {
            if (std::norm(main_state.amplitude(x)) <= 1e-24) {
                continue;
            }
            double c = main_phases.cost(x);
            if (c < best - 1e-12) {
                best = c;
                hits = 1;
            } else if (c <= best + 1e-12) {
                ++hits;
            }
        }
        return hits > 1;
    }();

    double max_drift =
        std::max(std::abs(main_state.norm() - 1.0), std::abs(null_state.norm() - 1.0));
    std::set<int> flagged;

    int main_done = 0;
    int null_done = 0;
    for (int t = 1; t <= schedule.steps; ++t) {
        switch (kinds[t - 1]) {
        case StepKind::kMain: {
            ++main_done;
            double f = static_cast<double>(main_done) /
                       static_cast<double>(counts.main);
            apply_diagonal_phase_in_place(main_state, [&](Index x) {
                return f * main_phases.normalized_cost(x) * schedule.delta;
            });
            log(t, f, "auctioneer", "phase-cost", "main");
            for (const BlockOperators& block : blocks) {
                apply_local_in_place(main_state, block.search_at(main_done), true);
                log(t, f, actor_name(block), "apply-search-op-adjoint", "main");
            }
            apply_diagonal_phase_in_place(main_state, [&](Index x) {
                return (1.0 - f) * main_phases.normalized_drive(x) * schedule.delta;
            });
            log(t, f, "auctioneer", "phase-drive", "main");
            for (const BlockOperators& block : blocks) {
                apply_local_in_place(main_state, block.search_at(main_done), false);
                log(t, f, actor_name(block), "apply-search-op", "main");
            }
            break;
        }
        case StepKind::kNullCheck: {
            ++null_done;
            double f = static_cast<double>(null_done) /
                       static_cast<double>(counts.null_check);
            apply_diagonal_phase_in_place(null_state, [&](Index x) {
                return f * null_phases.normalized_cost(x) * schedule.delta;
            });
            log(t, f, "auctioneer", "phase-cost", "null-check");
            for (const BlockOperators& block : blocks) {
                // The bidder cannot tell this register from the main one and
                // applies the operator for its upcoming main step.
                int s = std::min(main_done + 1, std::max(counts.main, 1));
                apply_local_in_place(null_state, block.search_at(s), true);
                log(t, f, actor_name(block), "apply-search-op-adjoint",
                    "null-check");
            }
            apply_diagonal_phase_in_place(null_state, [&](Index x) {
                return (1.0 - f) * null_phases.normalized_drive(x) * schedule.delta;
            });
            log(t, f, "auctioneer", "phase-drive", "null-check");
            for (const BlockOperators& block : blocks) {
                int s = std::min(main_done + 1, std::max(counts.main, 1));
                apply_local_in_place(null_state, block.search_at(s), false);
                log(t, f, actor_name(block), "apply-search-op", "null-check");
            }
            break;
        }
        case StepKind::kProbe: {
            // Probe a random block with a fresh register in state V|0>; a
            // block that answers with a different operator than its previous
            // step's fails with probability 1 - |<phi|U' U^dagger|phi>|^2.
            auto target = static_cast<std::size_t>(rng.next_below(blocks.size()));
            const BlockOperators& block = blocks[target];
            int claimed_step = std::max(main_done, 1);
            int actual_step = std::min(main_done + 1, std::max(counts.main, 1));
            UnitaryMatrix probe_basis = random_unitary(
                block.init.dimension(), block.init.first_bidder(),
                block.init.bidder_count(), rng);
            log(t, 0.0, "auctioneer", "probe-send", "probe");
            ProbeResult probe = probe_test(block.search_at(claimed_step),
                                           block.search_at(actual_step),
                                           probe_basis, rng);
            log(t, 0.0, actor_name(block), "probe-return", "probe",
                probe.analytic_pass_prob);
            log(t, 0.0, "auctioneer",
                probe.passed ? "probe-pass" : "probe-fail", "probe",
                probe.analytic_pass_prob);
            if (!probe.passed) {
                for (int g = 0; g < block.init.bidder_count(); ++g) {
                    flagged.insert(block.init.first_bidder() + g);
                }
            }
            break;
        }
        }
        max_drift = std::max(max_drift,
                             std::max(std::abs(main_state.norm() - 1.0),
                                      std::abs(null_state.norm() - 1.0)));
    }

    result.full_distribution = outcome_distribution(main_state);
    result.outcome_index = measure(main_state, rng);
    log(counts.total, 1.0, "auctioneer", "measure", "main");
    if (counts.null_check > 0) {
        Index null_outcome = measure(null_state, rng);
        log(counts.total, 1.0, "auctioneer", "measure", "null-check");
        for (int i = 0; i < config.layout.n_bidders(); ++i) {
            if (config.layout.digit(null_outcome, i) != 0) {
                flagged.insert(i);
                log(counts.total, 1.0, "auctioneer", "flag-null-check",
                    "null-check", static_cast<double>(i + 1));
            }
        }
    }

    result.allocation = decode_allocation(result.outcome_index, config);
    result.flagged_bidders.assign(flagged.begin(), flagged.end());
    result.payments.assign(config.layout.n_bidders(), 0.0);
    if (flagged.empty()) {
        if (auto winners = winner_of(result.allocation, config)) {
            result.winners = *winners;
            for (const WinnerEntry& w : result.winners) {
                result.payments[w.bidder] = w.bid.price;
            }
        }
    }
    result.max_norm_drift = max_drift;
    return result;
}

void write_transcript_jsonl(const Transcript& transcript, std::ostream& out) {
    for (const TranscriptEvent& event : transcript.events) {
        nlohmann::ordered_json line;
        line["step"] = event.step;
        line["f"] = event.f;
        line["actor"] = event.actor;
        line["action"] = event.action;
        line["register"] = event.reg;
        line["seedState"] = event.seed_state;
        if (event.detail != 0.0) {
            line["detail"] = event.detail;
        }
        out << line.dump() << '\n';
    }
}

} // namespace qauction

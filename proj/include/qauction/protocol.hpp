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

#include <iosfwd>
#include <variant>

#include "qauction/search.hpp"

namespace qauction {

// Bidder strategies. Honest bidders use one operator everywhere and keep
// the null bid in their superposition; the other kinds model the paper's
// deviation families: dropping the null bid, using a different operator
// for initialization, switching operators mid-search, and entangled group
// bids.

struct HonestStrategy {
    BidSuperposition superposition;
};

struct NullExcluderStrategy {
    BidSuperposition superposition; // must not contain the null bid
};

struct InitDeviatorStrategy {
    BidSuperposition init;
    BidSuperposition search;
};

struct SwitchSegment {
    int from_step = 1; // first 1-based search step this superposition covers
    BidSuperposition superposition;
};

struct OperatorSwitcherStrategy {
    BidSuperposition init;
    std::vector<SwitchSegment> segments; // ascending from_step, first == 1
};

struct JointGroupStrategy {
    BidSuperposition superposition; // owner spans the whole group
};

using BidderStrategy =
    std::variant<HonestStrategy, NullExcluderStrategy, InitDeviatorStrategy,
                 OperatorSwitcherStrategy, JointGroupStrategy>;

/// Per-step Bernoulli mix of the auctioneer's step purposes.
struct AuctionPolicy {
    double null_check_prob = 0.0;
    double probe_prob = 0.0;

    void validate() const;
};

struct StepCounts {
    int total = 0;
    int main = 0;
    int null_check = 0;
    int probes = 0;
};

struct AuctionResult {
    Index outcome_index = 0;
    Allocation allocation;
    /// Empty when the allocation is infeasible or any bidder was flagged.
    std::vector<WinnerEntry> winners;
    /// Per-bidder first-price payments (zero for non-winners).
    std::vector<double> payments;
    std::map<Index, double> full_distribution;
    std::vector<int> flagged_bidders; // 0-based, sorted, unique
    Transcript transcript;
    std::uint64_t seed = 0;
    double max_norm_drift = 0.0;
    bool degenerate_ground = false;
    StepCounts steps;
};

/// Builds each block's init and per-step search operators from the
/// strategies. Blocks must cover bidders 0..n-1 contiguously; `steps` sizes
/// the per-step lists for switchers.
std::vector<BlockOperators> compile_strategies(
    const AuctionConfig& config, const std::vector<BidderStrategy>& strategies,
    int steps);

/// Basis indices each bidder's search superposition touches (the selected
/// subspace supports, pre-deviation); used to score outcomes.
std::vector<std::set<Index>> search_supports(
    const AuctionConfig& config, const std::vector<BidderStrategy>& strategies);

/// Runs one auction: initialization, then `schedule.steps` combined steps,
/// each independently a null-check step (separate register), a probe
/// against a random block, or a main search step, so bidders cannot tell
/// which register a step serves. Measures the main register, then the
/// null-check register; flagged bidders void the winner (no restart).
AuctionResult run_auction(const AuctionConfig& config,
                          const std::vector<BidderStrategy>& strategies,
                          const SearchSchedule& schedule,
                          const AuctionPolicy& policy, SeededRng& rng);

/// The classical first-price NE bid for values uniform on [0, 1]:
/// b(v) = (n-1) v / n.
double classical_ne_bid(double value, int n_bidders);

/// One JSON object per event: {step, f, actor, action, register, seedState}.
void write_transcript_jsonl(const Transcript& transcript, std::ostream& out);

} // namespace qauction

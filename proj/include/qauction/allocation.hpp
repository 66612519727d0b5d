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

#include <optional>
#include <vector>

#include "qauction/bidlang.hpp"
#include "qauction/statevec.hpp"

namespace qauction {

/// Auction instance: register geometry plus the announced bid language.
struct AuctionConfig {
    RegisterLayout layout;
    BidLanguage language;

    AuctionConfig(RegisterLayout layout_, BidLanguage language_)
        : layout(layout_), language(std::move(language_)) {
        language.validate();
        if (language.bits_per_bidder() != layout.bits_per_bidder()) {
            throw std::invalid_argument(
                "AuctionConfig: language bits do not match the register layout");
        }
    }
};

/// One bid per bidder, in layout order.
struct Allocation {
    std::vector<Bid> bids;
};

/// First-price revenue evaluation; infeasible allocations score strictly
/// below every feasible one.
struct EvaluationRule {
    double infeasible_value = -1.0;
};

struct WinnerEntry {
    int bidder; // 0-based layout position
    Bid bid;    // bundle won and the first-price payment
};

/// Splits the global index into base-2^b digits and decodes each.
Allocation decode_allocation(Index x, const AuctionConfig& config);
Index encode_allocation(const Allocation& a, const AuctionConfig& config);

/// Single item: exactly one non-null bid. Combinatorial: bundles pairwise
/// disjoint and not all null. (For single-item languages the two readings
/// coincide.)
bool is_feasible(const Allocation& a, const AuctionConfig& config);

/// Revenue of a feasible allocation (sum of non-null bid prices), else the
/// rule's infeasible value.
double evaluate(const Allocation& a, const EvaluationRule& rule);
/// cost(x) = -evaluate(decode_allocation(x)); drives the search's P phase.
double cost_of(Index x, const AuctionConfig& config, const EvaluationRule& rule);

/// Winners and first-price payments; empty for infeasible allocations.
std::optional<std::vector<WinnerEntry>> winner_of(const Allocation& a,
                                                  const AuctionConfig& config);

// Counting formulas and the feasibility conditions they feed.

/// Closed form: n (2^b - 1) single-item feasible allocations, or
/// ((n+1)^m - 1) 2^(n m_p) in the combinatorial language.
std::uint64_t count_feasible(const AuctionConfig& config);
/// Exhaustive cross-check; requires n*b <= 16.
std::uint64_t count_feasible_enumerated(const AuctionConfig& config);

/// C(n, k) (2^b - 1)^k basis states with exactly k nonzero digits.
std::uint64_t count_deviation_states(int n_bidders, int bits, int k);
std::uint64_t count_deviation_states_enumerated(int n_bidders, int bits, int k);

/// Single-item: #infeasible >= #single-deviation states.
bool check_condition(int n_bidders, int bits);
/// Stronger form covering up to n-1 joint deviators (holds for b >= 2).
bool check_collusion_condition(int n_bidders, int bits);
/// Combinatorial analogues (m items, m_p price bits).
bool check_multi_condition(int n_bidders, int n_items, int price_bits);
bool check_multi_collusion(int n_bidders, int n_items, int price_bits);

} // namespace qauction

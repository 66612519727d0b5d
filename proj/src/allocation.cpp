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

#include "qauction/allocation.hpp"

#include <stdexcept>

namespace qauction {

namespace {

// Checked integer helpers; the counting formulas are specified only up to
// 64-bit arithmetic.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) {
        throw std::overflow_error("counting formula overflows 64-bit arithmetic");
    }
    return a * b;
}

std::uint64_t checked_pow(std::uint64_t base, int exp) {
    std::uint64_t result = 1;
    for (int i = 0; i < exp; ++i) {
        result = checked_mul(result, base);
    }
    return result;
}

std::uint64_t checked_pow2(int exp) {
    if (exp < 0 || exp >= 64) {
        throw std::overflow_error("2^exp overflows 64-bit arithmetic");
    }
    return std::uint64_t{1} << exp;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        result = checked_mul(result, static_cast<std::uint64_t>(n - k + i)) /
                 static_cast<std::uint64_t>(i);
    }
    return result;
}

void require_positive(int v, const char* what) {
    if (v < 1) {
        throw std::invalid_argument(std::string(what) + " must be >= 1");
    }
}

} // namespace

Allocation decode_allocation(Index x, const AuctionConfig& config) {
    if (x >= config.layout.dimension()) {
        throw std::invalid_argument("decode_allocation: index out of range");
    }
    Allocation a;
    a.bids.reserve(config.layout.n_bidders());
    for (int i = 0; i < config.layout.n_bidders(); ++i) {
        a.bids.push_back(decode_bid(config.layout.digit(x, i), config.language));
    }
    return a;
}

Index encode_allocation(const Allocation& a, const AuctionConfig& config) {
    if (static_cast<int>(a.bids.size()) != config.layout.n_bidders()) {
        throw std::invalid_argument("encode_allocation: need one bid per bidder");
    }
    std::vector<Index> digits;
    digits.reserve(a.bids.size());
    for (const Bid& bid : a.bids) {
        digits.push_back(encode_bid(bid, config.language));
    }
    return config.layout.index_from_digits(digits);
}

bool is_feasible(const Allocation& a, const AuctionConfig& config) {
    if (static_cast<int>(a.bids.size()) != config.layout.n_bidders()) {
        throw std::invalid_argument("is_feasible: need one bid per bidder");
    }
    std::uint32_t seen = 0;
    int non_null = 0;
    for (const Bid& bid : a.bids) {
        if (bid.is_null()) {
            continue;
        }
        ++non_null;
        if (seen & bid.bundle_mask) {
            return false; // overlapping bundles
        }
        seen |= bid.bundle_mask;
    }
    if (config.language.mode == BidMode::kSingleItem) {
        return non_null == 1;
    }
    return non_null > 0;
}

double evaluate(const Allocation& a, const EvaluationRule& rule) {
    std::uint32_t seen = 0;
    int non_null = 0;
    double revenue = 0.0;
    bool overlap = false;
    for (const Bid& bid : a.bids) {
        if (bid.is_null()) {
            continue;
        }
        ++non_null;
        if (seen & bid.bundle_mask) {
            overlap = true;
        }
        seen |= bid.bundle_mask;
        revenue += bid.price;
    }
    // Single-item allocations always carry single-bit bundle masks, so the
    // overlap test doubles as the exactly-one-winner rule there.
    if (non_null == 0 || overlap) {
        return rule.infeasible_value;
    }
    return revenue;
}

double cost_of(Index x, const AuctionConfig& config,
               const EvaluationRule& rule) {
    return -evaluate(decode_allocation(x, config), rule);
}

std::optional<std::vector<WinnerEntry>> winner_of(const Allocation& a,
                                                  const AuctionConfig& config) {
    if (!is_feasible(a, config)) {
        return std::nullopt;
    }
    std::vector<WinnerEntry> winners;
    for (int i = 0; i < static_cast<int>(a.bids.size()); ++i) {
        if (!a.bids[i].is_null()) {
            winners.push_back(WinnerEntry{i, a.bids[i]});
        }
    }
    return winners;
}

std::uint64_t count_feasible(const AuctionConfig& config) {
    int n = config.layout.n_bidders();
    if (config.language.mode == BidMode::kSingleItem) {
        int b = config.layout.bits_per_bidder();
        return checked_mul(static_cast<std::uint64_t>(n), checked_pow2(b) - 1);
    }
    int m = config.language.item_bits;
    int mp = config.language.price_bits;
    std::uint64_t assignments = checked_pow(static_cast<std::uint64_t>(n) + 1, m);
    return checked_mul(assignments - 1, checked_pow2(n * mp));
}

std::uint64_t count_feasible_enumerated(const AuctionConfig& config) {
    if (config.layout.qubit_count() > 16) {
        throw std::invalid_argument(
            "count_feasible_enumerated: enumeration capped at 16 qubits");
    }
    std::uint64_t count = 0;
    for (Index x = 0; x < config.layout.dimension(); ++x) {
        if (is_feasible(decode_allocation(x, config), config)) {
            ++count;
        }
    }
    return count;
}

std::uint64_t count_deviation_states(int n_bidders, int bits, int k) {
    require_positive(n_bidders, "n_bidders");
    require_positive(bits, "bits");
    if (k < 0 || k > n_bidders) {
        throw std::invalid_argument("count_deviation_states: k out of range");
    }
    return checked_mul(binomial(n_bidders, k),
                       checked_pow(checked_pow2(bits) - 1, k));
}

std::uint64_t count_deviation_states_enumerated(int n_bidders, int bits, int k) {
    if (n_bidders * bits > 16) {
        throw std::invalid_argument(
            "count_deviation_states_enumerated: enumeration capped at 16 qubits");
    }
    RegisterLayout layout(n_bidders, bits);
    std::uint64_t count = 0;
    for (Index x = 0; x < layout.dimension(); ++x) {
        if (layout.nonzero_digit_count(x) == k) {
            ++count;
        }
    }
    return count;
}

bool check_condition(int n_bidders, int bits) {
    require_positive(n_bidders, "n_bidders");
    require_positive(bits, "bits");
    std::uint64_t total = checked_pow2(n_bidders * bits);
    std::uint64_t feasible = checked_mul(static_cast<std::uint64_t>(n_bidders),
                                         checked_pow2(bits) - 1);
    return total - feasible >= feasible;
}

bool check_collusion_condition(int n_bidders, int bits) {
    require_positive(n_bidders, "n_bidders");
    require_positive(bits, "bits");
    std::uint64_t total = checked_pow2(n_bidders * bits);
    std::uint64_t feasible = checked_mul(static_cast<std::uint64_t>(n_bidders),
                                         checked_pow2(bits) - 1);
    // Right-hand side: sum_{k=1..n-1} C(n,k)(2^b-1)^k = 2^(nb) - 1 - (2^b-1)^n.
    std::uint64_t deviations =
        total - 1 - checked_pow(checked_pow2(bits) - 1, n_bidders);
    return total - feasible >= deviations;
}

bool check_multi_condition(int n_bidders, int n_items, int price_bits) {
    require_positive(n_bidders, "n_bidders");
    require_positive(n_items, "n_items");
    require_positive(price_bits, "price_bits");
    int bits = n_items + price_bits;
    std::uint64_t total = checked_pow2(n_bidders * bits);
    std::uint64_t feasible = checked_mul(
        checked_pow(static_cast<std::uint64_t>(n_bidders) + 1, n_items) - 1,
        checked_pow2(n_bidders * price_bits));
    std::uint64_t single_dev = checked_mul(
        static_cast<std::uint64_t>(n_bidders), checked_pow2(bits) - 1);
    return total - feasible >= single_dev;
}

bool check_multi_collusion(int n_bidders, int n_items, int price_bits) {
    require_positive(n_bidders, "n_bidders");
    require_positive(n_items, "n_items");
    require_positive(price_bits, "price_bits");
    int bits = n_items + price_bits;
    std::uint64_t total = checked_pow2(n_bidders * bits);
    std::uint64_t feasible = checked_mul(
        checked_pow(static_cast<std::uint64_t>(n_bidders) + 1, n_items) - 1,
        checked_pow2(n_bidders * price_bits));
    std::uint64_t deviations =
        total - 1 - checked_pow(checked_pow2(bits) - 1, n_bidders);
    return total - feasible >= deviations;
}

} // namespace qauction

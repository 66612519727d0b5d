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

#include <doctest.h>

#include <algorithm>

#include "qauction/allocation.hpp"

using namespace qauction;

namespace {

AuctionConfig single_item_config(int n, int b) {
    return AuctionConfig(RegisterLayout(n, b), BidLanguage::single_item(b));
}

AuctionConfig combinatorial_config(int n, int m, int mp) {
    std::vector<std::string> items;
    for (int i = 0; i < m; ++i) {
        items.push_back(std::string(1, static_cast<char>('A' + i)));
    }
    return AuctionConfig(RegisterLayout(n, m + mp),
                         BidLanguage::combinatorial(items, mp));
}

} // namespace

TEST_CASE("decode_allocation splits the index into per-bidder digits") {
    AuctionConfig config = single_item_config(2, 2);

    Allocation all_null = decode_allocation(0, config);
    CHECK(all_null.bids[0].is_null());
    CHECK(all_null.bids[1].is_null());

    // x = 2*4 + 0 = 8 -> (bid index 2, null)
    Allocation a = decode_allocation(8, config);
    CHECK(!a.bids[0].is_null());
    CHECK(a.bids[0].price == 2.0);
    CHECK(a.bids[1].is_null());
}

TEST_CASE("decode/encode allocation round trips over the whole space") {
    for (const AuctionConfig& config :
         {single_item_config(2, 2), single_item_config(3, 2),
          combinatorial_config(2, 2, 2)}) {
        for (Index x = 0; x < config.layout.dimension(); ++x) {
            Allocation a = decode_allocation(x, config);
            Index back = encode_allocation(a, config);
            // indices whose bundle is empty but price bits are set decode to
            // null, which canonically re-encodes to digit 0
            Allocation again = decode_allocation(back, config);
            for (int i = 0; i < config.layout.n_bidders(); ++i) {
                CHECK(again.bids[i] == a.bids[i]);
            }
        }
    }
}

TEST_CASE("single-item feasibility requires exactly one non-null bid") {
    AuctionConfig config = single_item_config(2, 2);
    CHECK(is_feasible(Allocation{{Bid::null(), Bid::of(1, 3.0)}}, config));
    CHECK(!is_feasible(Allocation{{Bid::null(), Bid::null()}}, config));
    CHECK(!is_feasible(Allocation{{Bid::of(1, 2.0), Bid::of(1, 3.0)}}, config));
}

TEST_CASE("combinatorial feasibility means pairwise-disjoint bundles") {
    AuctionConfig config = combinatorial_config(2, 3, 1);
    const BidLanguage& lang = config.language;
    // Alice {A,B}, Bob {B,C} overlap at B
    CHECK(!is_feasible(Allocation{{Bid::of(lang.mask_for({"A", "B"}), 1.0),
                                   Bid::of(lang.mask_for({"B", "C"}), 1.0)}},
                       config));
    CHECK(is_feasible(Allocation{{Bid::of(lang.mask_for({"A", "B"}), 1.0),
                                  Bid::of(lang.mask_for({"C"}), 1.0)}},
                      config));
    // all-null is infeasible; a single bundle suffices
    CHECK(!is_feasible(Allocation{{Bid::null(), Bid::null()}}, config));
    CHECK(is_feasible(Allocation{{Bid::of(lang.mask_for({"A"}), 0.0), Bid::null()}},
                      config));
}

TEST_CASE("evaluate sums prices on feasible allocations, else -1") {
    EvaluationRule rule;
    AuctionConfig config = single_item_config(2, 2);

    Allocation feasible{{Bid::null(), Bid::of(1, 3.0)}};
    CHECK(evaluate(feasible, rule) == 3.0);
    CHECK(cost_of(encode_allocation(feasible, config), config, rule) == -3.0);

    Allocation infeasible{{Bid::of(1, 2.0), Bid::of(1, 3.0)}};
    CHECK(evaluate(infeasible, rule) == -1.0);
    CHECK(cost_of(encode_allocation(infeasible, config), config, rule) == 1.0);

    AuctionConfig multi = combinatorial_config(2, 2, 2);
    Allocation both{{Bid::of(multi.language.mask_for({"A"}), 1.0),
                     Bid::of(multi.language.mask_for({"B"}), 2.0)}};
    CHECK(evaluate(both, EvaluationRule{}) == 3.0);
}

TEST_CASE("zero-price bids are feasible with value zero") {
    AuctionConfig config = combinatorial_config(2, 2, 2);
    Allocation a{{Bid::of(config.language.mask_for({"A"}), 0.0), Bid::null()}};
    CHECK(is_feasible(a, config));
    CHECK(evaluate(a, EvaluationRule{}) == 0.0);
}

TEST_CASE("winner_of names every non-null bidder with first-price payments") {
    AuctionConfig config = single_item_config(2, 2);

    auto winners = winner_of(Allocation{{Bid::null(), Bid::of(1, 3.0)}}, config);
    REQUIRE(winners.has_value());
    REQUIRE(winners->size() == 1);
    CHECK((*winners)[0].bidder == 1);
    CHECK((*winners)[0].bid.price == 3.0);

    CHECK(!winner_of(Allocation{{Bid::of(1, 2.0), Bid::of(1, 3.0)}}, config)
               .has_value());
    CHECK(!winner_of(Allocation{{Bid::null(), Bid::null()}}, config).has_value());

    AuctionConfig multi = combinatorial_config(2, 2, 2);
    auto pair = winner_of(Allocation{{Bid::of(multi.language.mask_for({"A"}), 1.0),
                                      Bid::of(multi.language.mask_for({"B"}), 2.0)}},
                          multi);
    REQUIRE(pair.has_value());
    CHECK(pair->size() == 2);
}

TEST_CASE("closed-form feasible counts match the worked examples") {
    CHECK(count_feasible(single_item_config(2, 2)) == 6);
    // ((n+1)^m - 1) 2^(n mp) = (3^2 - 1) * 2^4 = 128 of 256 states
    AuctionConfig multi = combinatorial_config(2, 2, 2);
    CHECK(count_feasible(multi) == 128);
    CHECK(count_feasible_enumerated(multi) == 128);
}

TEST_CASE("enumerated counts equal closed forms over the small grid") {
    for (int n = 1; n <= 4; ++n) {
        for (int b = 1; n * b <= 16 && b <= 4; ++b) {
            AuctionConfig config = single_item_config(n, b);
            CHECK(count_feasible(config) == count_feasible_enumerated(config));
        }
    }
    for (int n = 1; n <= 3; ++n) {
        for (int m = 1; m <= 3; ++m) {
            for (int mp = 1; n * (m + mp) <= 16 && mp <= 3; ++mp) {
                AuctionConfig config = combinatorial_config(n, m, mp);
                CHECK(count_feasible(config) == count_feasible_enumerated(config));
            }
        }
    }
}

TEST_CASE("k-deviation state counts match the closed form") {
    for (int n = 1; n <= 4; ++n) {
        for (int b = 1; n * b <= 16 && b <= 4; ++b) {
            std::uint64_t total = 0;
            for (int k = 0; k <= n; ++k) {
                std::uint64_t closed = count_deviation_states(n, b, k);
                CHECK(closed == count_deviation_states_enumerated(n, b, k));
                total += closed;
            }
            CHECK(total == (std::uint64_t{1} << (n * b)));
        }
    }
    CHECK(count_deviation_states(2, 2, 1) == 6);
    CHECK(count_deviation_states(3, 2, 2) == 27);
}

TEST_CASE("the single-item condition holds whenever there is competition") {
    // With a single bidder and b >= 2 there is exactly one infeasible state
    // (all-null) but 2^b - 1 single-deviation states, so the inequality
    // fails; it holds for every n >= 2 and for b = 1.
    for (int n = 1; n <= 6; ++n) {
        for (int b = 1; b <= 6; ++b) {
            CHECK(check_condition(n, b) == (n >= 2 || b == 1));
        }
    }
}

TEST_CASE("the collusion strengthening holds for b >= 2") {
    for (int n = 1; n <= 6; ++n) {
        for (int b = 2; b <= 6; ++b) {
            CHECK(check_collusion_condition(n, b));
        }
    }
    // with a single qubit per bidder it fails once n > 2
    CHECK(check_collusion_condition(2, 1));
    CHECK(!check_collusion_condition(3, 1));
}

TEST_CASE("the combinatorial condition holds for n >= 2 and fails at n = 1") {
    for (int m = 1; m <= 4; ++m) {
        for (int mp = 1; mp <= 4; ++mp) {
            CHECK(!check_multi_condition(1, m, mp));
            for (int n = 2; n <= 5; ++n) {
                CHECK(check_multi_condition(n, m, mp));
            }
        }
    }
    // the collusion form on its claimed n, m >= 2 domain
    for (int n = 2; n <= 5; ++n) {
        for (int m = 2; m <= 4; ++m) {
            for (int mp = 1; mp <= 4; ++mp) {
                CHECK(check_multi_collusion(n, m, mp));
            }
        }
    }
}

TEST_CASE("evaluate is strictly lower on infeasible than on feasible states") {
    for (const AuctionConfig& config :
         {single_item_config(2, 2), single_item_config(3, 2),
          combinatorial_config(2, 2, 1)}) {
        EvaluationRule rule;
        double min_feasible = 1e300;
        double max_infeasible = -1e300;
        for (Index x = 0; x < config.layout.dimension(); ++x) {
            Allocation a = decode_allocation(x, config);
            double v = evaluate(a, rule);
            if (is_feasible(a, config)) {
                min_feasible = std::min(min_feasible, v);
            } else {
                max_infeasible = std::max(max_infeasible, v);
            }
        }
        CHECK(max_infeasible < min_feasible);
    }
}

TEST_CASE("feasibility is covariant under bidder permutation") {
    AuctionConfig config = combinatorial_config(3, 2, 1);
    for (Index x = 0; x < config.layout.dimension(); ++x) {
        Allocation a = decode_allocation(x, config);
        Allocation rotated{{a.bids[2], a.bids[0], a.bids[1]}};
        CHECK(is_feasible(a, config) == is_feasible(rotated, config));
    }
}

TEST_CASE("counting guards against 64-bit overflow") {
    CHECK_THROWS_AS(check_condition(9, 8), std::overflow_error);
    CHECK_THROWS_AS(count_deviation_states(70, 1, 35), std::overflow_error);
}

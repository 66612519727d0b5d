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
#include <vector>

#include "qauction/statevec.hpp"

namespace qauction {

enum class BidMode {
    kSingleItem,   // whole index is the price code; index 0 is the null bid
    kCombinatorial // high bits are a bundle membership mask, low bits a price
};

/// Announced interpretation of each bidder's 2^b basis states.
///
/// Single-item: item_bits = 0, price_bits = b; basis index k > 0 means a bid
/// of k * price_scale for the one item, index 0 is the null bid.
/// Combinatorial: index = bundle_mask * 2^price_bits + price_code with
/// items[i] owning bundle bit i (items[0] = lowest bit); an empty bundle is
/// the null bid no matter what the price bits say.
struct BidLanguage {
    BidMode mode = BidMode::kSingleItem;
    int item_bits = 0;
    int price_bits = 0;
    double price_scale = 1.0;
    std::vector<std::string> items; // size item_bits (combinatorial), else 1

    int bits_per_bidder() const { return item_bits + price_bits; }
    Index price_levels() const { return Index{1} << price_bits; }
    double max_price() const {
        return static_cast<double>(price_levels() - 1) * price_scale;
    }

    static BidLanguage single_item(int price_bits, double price_scale = 1.0,
                                   std::string item_name = "item");
    static BidLanguage combinatorial(std::vector<std::string> items,
                                     int price_bits, double price_scale = 1.0);

    void validate() const;
    std::uint32_t mask_for(const std::vector<std::string>& bundle) const;
    std::vector<std::string> names_for(std::uint32_t mask) const;
};

/// One bid: a bundle (empty = null) and a price. Null bids canonicalize the
/// price to zero.
struct Bid {
    std::uint32_t bundle_mask = 0;
    double price = 0.0;

    bool is_null() const { return bundle_mask == 0; }

    static Bid null() { return Bid{}; }
    static Bid of(std::uint32_t bundle_mask, double price) {
        return bundle_mask == 0 ? Bid{} : Bid{bundle_mask, price};
    }

    bool operator==(const Bid&) const = default;
};

/// A weighted set of distinct bids for one bidder or one contiguous bidder
/// group; `bids` holds one Bid per group member.
struct WeightedBids {
    std::vector<Bid> bids;
    Complex amplitude;
};

struct BidSuperposition {
    int first_bidder = 0;
    int group_size = 1;
    std::vector<WeightedBids> terms;

    /// Checks unit norm (1e-12), per-term arity, and distinctness of the
    /// encoded basis indices.
    void validate(const BidLanguage& lang) const;
    bool contains_null(const BidLanguage& lang) const;
    /// Encoded joint index of each term, in term order.
    std::vector<Index> term_indices(const BidLanguage& lang) const;
};

/// index = bundle_mask * 2^price_bits + price_code. Null bids map to index
/// 0. Throws on unexpressible prices and unknown bundle bits.
Index encode_bid(const Bid& bid, const BidLanguage& lang);

/// Inverse of encode_bid on canonical indices; any index with an empty
/// bundle decodes to the null bid (price bits ignored).
Bid decode_bid(Index index, const BidLanguage& lang);

/// Unitary on one bidder's 2^b block whose first column realizes the
/// target superposition. Completion is a deterministic Householder
/// reflection, so identical targets give identical matrices.
UnitaryMatrix synthesize_operator(const BidSuperposition& target,
                                  const BidLanguage& lang);

/// Joint unitary on a contiguous group's 2^(g b) block; the first column
/// realizes the joint (possibly entangled) superposition.
UnitaryMatrix synthesize_joint_operator(const BidSuperposition& target,
                                        const BidLanguage& lang);

} // namespace qauction

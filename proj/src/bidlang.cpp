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

#include "qauction/bidlang.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace qauction {

BidLanguage BidLanguage::single_item(int price_bits, double price_scale,
                                     std::string item_name) {
    BidLanguage lang;
    lang.mode = BidMode::kSingleItem;
    lang.item_bits = 0;
    lang.price_bits = price_bits;
    lang.price_scale = price_scale;
    lang.items = {std::move(item_name)};
    lang.validate();
    return lang;
}

BidLanguage BidLanguage::combinatorial(std::vector<std::string> items,
                                       int price_bits, double price_scale) {
    BidLanguage lang;
    lang.mode = BidMode::kCombinatorial;
    lang.item_bits = static_cast<int>(items.size());
    lang.price_bits = price_bits;
    lang.price_scale = price_scale;
    lang.items = std::move(items);
    lang.validate();
    return lang;
}

void BidLanguage::validate() const {
    if (price_bits < 1) {
        throw std::invalid_argument("BidLanguage: price_bits must be >= 1");
    }
    if (price_scale <= 0.0) {
        throw std::invalid_argument("BidLanguage: price_scale must be positive");
    }
    if (mode == BidMode::kSingleItem) {
        if (item_bits != 0) {
            throw std::invalid_argument(
                "BidLanguage: single-item mode has no item bits");
        }
        if (items.size() != 1) {
            throw std::invalid_argument(
                "BidLanguage: single-item mode names exactly one item");
        }
    } else {
        if (item_bits < 1) {
            throw std::invalid_argument(
                "BidLanguage: combinatorial mode needs item_bits >= 1");
        }
        if (static_cast<int>(items.size()) != item_bits) {
            throw std::invalid_argument(
                "BidLanguage: need one item name per item bit");
        }
    }
    std::set<std::string> unique(items.begin(), items.end());
    if (unique.size() != items.size()) {
        throw std::invalid_argument("BidLanguage: duplicate item names");
    }
}

std::uint32_t BidLanguage::mask_for(
    const std::vector<std::string>& bundle) const {
    std::uint32_t mask = 0;
    for (const std::string& name : bundle) {
        auto it = std::find(items.begin(), items.end(), name);
        if (it == items.end()) {
            throw std::invalid_argument("BidLanguage: unknown item '" + name + "'");
        }
        mask |= 1u << (it - items.begin());
    }
    return mask;
}

std::vector<std::string> BidLanguage::names_for(std::uint32_t mask) const {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (mask & (1u << i)) {
            names.push_back(items[i]);
        }
    }
    return names;
}

Index encode_bid(const Bid& bid, const BidLanguage& lang) {
    if (bid.is_null()) {
        return 0;
    }
    int bundle_bits = lang.mode == BidMode::kSingleItem ? 1 : lang.item_bits;
    if (bid.bundle_mask >= (1u << bundle_bits)) {
        throw std::invalid_argument("encode_bid: bundle contains unknown items");
    }
    double steps = bid.price / lang.price_scale;
    auto code = static_cast<long long>(std::llround(steps));
    if (std::abs(steps - static_cast<double>(code)) > 1e-9) {
        throw std::invalid_argument(
            "encode_bid: price is not a multiple of the price scale");
    }
    if (code < 0 || code >= static_cast<long long>(lang.price_levels())) {
        throw std::invalid_argument("encode_bid: price overflows the price bits");
    }
    if (lang.mode == BidMode::kSingleItem) {
        // The whole index is the price code; code 0 would collide with null.
        if (code == 0) {
            throw std::invalid_argument(
                "encode_bid: single-item bids need price >= one price step");
        }
        return static_cast<Index>(code);
    }
    return (static_cast<Index>(bid.bundle_mask) << lang.price_bits) |
           static_cast<Index>(code);
}

Bid decode_bid(Index index, const BidLanguage& lang) {
    if (index >= (Index{1} << lang.bits_per_bidder())) {
        throw std::invalid_argument("decode_bid: index out of range");
    }
    if (lang.mode == BidMode::kSingleItem) {
        if (index == 0) {
            return Bid::null();
        }
        return Bid{1u, static_cast<double>(index) * lang.price_scale};
    }
    auto mask = static_cast<std::uint32_t>(index >> lang.price_bits);
    if (mask == 0) {
        return Bid::null(); // the price bits are irrelevant
    }
    Index code = index & (lang.price_levels() - 1);
    return Bid{mask, static_cast<double>(code) * lang.price_scale};
}

std::vector<Index> BidSuperposition::term_indices(const BidLanguage& lang) const {
    int b = lang.bits_per_bidder();
    std::vector<Index> indices;
    indices.reserve(terms.size());
    for (const WeightedBids& term : terms) {
        if (static_cast<int>(term.bids.size()) != group_size) {
            throw std::invalid_argument(
                "BidSuperposition: each term needs one bid per group member");
        }
        Index joint = 0;
        for (const Bid& bid : term.bids) {
            joint = (joint << b) | encode_bid(bid, lang);
        }
        indices.push_back(joint);
    }
    return indices;
}

void BidSuperposition::validate(const BidLanguage& lang) const {
    if (group_size < 1 || first_bidder < 0) {
        throw std::invalid_argument("BidSuperposition: invalid owner block");
    }
    if (terms.empty()) {
        throw std::invalid_argument("BidSuperposition: no terms");
    }
    std::vector<Index> indices = term_indices(lang);
    std::set<Index> unique(indices.begin(), indices.end());
    if (unique.size() != indices.size()) {
        throw std::invalid_argument(
            "BidSuperposition: terms must be distinct basis states");
    }
    double n2 = 0.0;
    for (const WeightedBids& term : terms) {
        n2 += std::norm(term.amplitude);
    }
    if (std::abs(std::sqrt(n2) - 1.0) > 1e-12) {
        throw std::invalid_argument("BidSuperposition: amplitudes not normalized");
    }
}

bool BidSuperposition::contains_null(const BidLanguage& lang) const {
    for (Index idx : term_indices(lang)) {
        if (idx == 0) {
            return true;
        }
    }
    return false;
}

UnitaryMatrix synthesize_joint_operator(const BidSuperposition& target,
                                        const BidLanguage& lang) {
    target.validate(lang);
    int block_bits = target.group_size * lang.bits_per_bidder();
    if (block_bits > 12) {
        throw std::invalid_argument(
            "synthesize_joint_operator: block exceeds the 2^12 dense-operator cap");
    }
    Index dim = Index{1} << block_bits;
    std::vector<Complex> column(dim, Complex{0.0, 0.0});
    std::vector<Index> indices = target.term_indices(lang);
    for (std::size_t t = 0; t < indices.size(); ++t) {
        column[indices[t]] = target.terms[t].amplitude;
    }
    return unitary_from_first_column(std::move(column), target.first_bidder,
                                     target.group_size);
}

UnitaryMatrix synthesize_operator(const BidSuperposition& target,
                                  const BidLanguage& lang) {
    if (target.group_size != 1) {
        throw std::invalid_argument(
            "synthesize_operator: owner must be a single bidder");
    }
    return synthesize_joint_operator(target, lang);
}

} // namespace qauction

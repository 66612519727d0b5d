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

#include <cmath>

#include "qauction/bidlang.hpp"
#include "test_helpers.hpp"

using namespace qauction;

namespace {

// Two items X, Y with X on the low bundle bit; two price bits.
BidLanguage xy_language() { return BidLanguage::combinatorial({"X", "Y"}, 2); }

BidSuperposition uniform_null_plus(Index bid_index, const BidLanguage& lang,
                                   int bidder = 0) {
    BidSuperposition sup;
    sup.first_bidder = bidder;
    sup.terms = {WeightedBids{{Bid::null()}, Complex{M_SQRT1_2, 0.0}},
                 WeightedBids{{decode_bid(bid_index, lang)},
                              Complex{M_SQRT1_2, 0.0}}};
    return sup;
}

} // namespace

TEST_CASE("encode examples from the two-item layout") {
    BidLanguage lang = xy_language();
    CHECK(encode_bid(Bid::null(), lang) == 0);
    // ({X}, 1): bundle 01, price 01 -> index 5
    CHECK(encode_bid(Bid::of(lang.mask_for({"X"}), 1.0), lang) == 5);
    // ({X,Y}, 2): bundle 11, price 10 -> index 14
    CHECK(encode_bid(Bid::of(lang.mask_for({"X", "Y"}), 2.0), lang) == 14);
}

TEST_CASE("null bids canonicalize their price to zero") {
    Bid null_bid = Bid::of(0, 3.0);
    CHECK(null_bid.is_null());
    CHECK(null_bid.price == 0.0);
}

TEST_CASE("decode examples and the null-with-price-bits rule") {
    BidLanguage lang = xy_language();
    CHECK(decode_bid(0, lang).is_null());
    Bid five = decode_bid(5, lang);
    CHECK(five.bundle_mask == lang.mask_for({"X"}));
    CHECK(five.price == 1.0);
    // bundle mask 0 with nonzero price bits decodes to null
    for (Index idx : {Index{1}, Index{2}, Index{3}}) {
        CHECK(decode_bid(idx, lang).is_null());
    }
}

TEST_CASE("encode/decode round trip over every canonical bid") {
    for (int item_bits = 1; item_bits <= 3; ++item_bits) {
        for (int price_bits = 1; price_bits + item_bits <= 8; ++price_bits) {
            std::vector<std::string> items;
            for (int i = 0; i < item_bits; ++i) {
                items.push_back(std::string(1, static_cast<char>('A' + i)));
            }
            BidLanguage lang = BidLanguage::combinatorial(items, price_bits, 0.5);
            for (Index idx = 0; idx < (Index{1} << lang.bits_per_bidder());
                 ++idx) {
                Bid bid = decode_bid(idx, lang);
                Index expected = bid.is_null() ? 0 : idx;
                CHECK(encode_bid(bid, lang) == expected);
            }
        }
    }
    // single-item languages
    for (int b = 1; b <= 8; ++b) {
        BidLanguage lang = BidLanguage::single_item(b, 2.0);
        for (Index idx = 0; idx < (Index{1} << b); ++idx) {
            CHECK(encode_bid(decode_bid(idx, lang), lang) == idx);
        }
    }
}

TEST_CASE("encode rejects overflowing prices and unknown items") {
    BidLanguage lang = xy_language();
    CHECK_THROWS_AS(encode_bid(Bid::of(1, 4.0), lang), std::invalid_argument);
    CHECK_THROWS_AS(encode_bid(Bid::of(1, 1.5), lang), std::invalid_argument);
    CHECK_THROWS_AS(encode_bid(Bid::of(8, 1.0), lang), std::invalid_argument);
    CHECK_THROWS_AS(lang.mask_for({"Z"}), std::invalid_argument);
    BidLanguage single = BidLanguage::single_item(2);
    CHECK_THROWS_AS(encode_bid(Bid::of(1, 0.0), single), std::invalid_argument);
}

TEST_CASE("synthesize_operator: null-only target yields the identity") {
    BidLanguage lang = BidLanguage::single_item(2);
    BidSuperposition sup;
    sup.terms = {WeightedBids{{Bid::null()}, Complex{1.0, 0.0}}};
    UnitaryMatrix op = synthesize_operator(sup, lang);
    for (Index r = 0; r < 4; ++r) {
        CHECK(std::abs(op.at(r, 0) - (r == 0 ? 1.0 : 0.0)) < 1e-12);
    }
}

TEST_CASE("synthesize_operator reproduces the paper's uniform column") {
    BidLanguage lang = BidLanguage::single_item(2);
    UnitaryMatrix op = synthesize_operator(uniform_null_plus(2, lang), lang);
    const double s = M_SQRT1_2;
    CHECK(std::abs(op.at(0, 0) - s) < 1e-12);
    CHECK(std::abs(op.at(1, 0)) < 1e-12);
    CHECK(std::abs(op.at(2, 0) - s) < 1e-12);
    CHECK(std::abs(op.at(3, 0)) < 1e-12);
}

TEST_CASE("synthesized bid operators carry the A_k block structure") {
    // For each two-qubit bid value k, the operator restricted to rows and
    // columns {0, k} is a 2x2 unitary and rows/columns 0 and k vanish
    // elsewhere.
    BidLanguage lang = BidLanguage::single_item(2);
    for (Index k : {Index{1}, Index{2}, Index{3}}) {
        UnitaryMatrix op = synthesize_operator(uniform_null_plus(k, lang), lang);
        for (Index r = 0; r < 4; ++r) {
            for (Index c = 0; c < 4; ++c) {
                bool in_pair = (r == 0 || r == k) && (c == 0 || c == k);
                bool touches_pair = (r == 0 || r == k) || (c == 0 || c == k);
                if (in_pair) {
                    continue;
                }
                if (touches_pair) {
                    CHECK(std::abs(op.at(r, c)) < 1e-12);
                } else {
                    // outside the pair the completion is the identity
                    CHECK(std::abs(op.at(r, c) - (r == c ? 1.0 : 0.0)) < 1e-12);
                }
            }
        }
        Complex a = op.at(0, 0), b = op.at(0, k);
        Complex c = op.at(k, 0), d = op.at(k, k);
        CHECK(std::abs(std::norm(a) + std::norm(b) - 1.0) < 1e-12);
        CHECK(std::abs(std::norm(c) + std::norm(d) - 1.0) < 1e-12);
        CHECK(std::abs(a * std::conj(c) + b * std::conj(d)) < 1e-12);
    }
}

TEST_CASE("synthesis is deterministic bit for bit") {
    BidLanguage lang = BidLanguage::single_item(3);
    BidSuperposition sup = uniform_null_plus(5, lang);
    UnitaryMatrix a = synthesize_operator(sup, lang);
    UnitaryMatrix b = synthesize_operator(sup, lang);
    REQUIRE(a.entries().size() == b.entries().size());
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        CHECK(a.entries()[i] == b.entries()[i]);
    }
}

TEST_CASE("synthesis rejects malformed superpositions") {
    BidLanguage lang = BidLanguage::single_item(2);

    BidSuperposition unnormalized;
    unnormalized.terms = {WeightedBids{{Bid::null()}, Complex{0.5, 0.0}},
                          WeightedBids{{decode_bid(2, lang)}, Complex{0.5, 0.0}}};
    CHECK_THROWS_AS(synthesize_operator(unnormalized, lang),
                    std::invalid_argument);

    BidSuperposition duplicated;
    duplicated.terms = {
        WeightedBids{{decode_bid(2, lang)}, Complex{M_SQRT1_2, 0.0}},
        WeightedBids{{decode_bid(2, lang)}, Complex{M_SQRT1_2, 0.0}}};
    CHECK_THROWS_AS(synthesize_operator(duplicated, lang), std::invalid_argument);

    BidSuperposition grouped = uniform_null_plus(2, lang);
    grouped.group_size = 2;
    CHECK_THROWS_AS(synthesize_operator(grouped, lang), std::invalid_argument);
}

TEST_CASE("random two-term targets synthesize to unitary operators") {
    BidLanguage lang = BidLanguage::single_item(3);
    SeededRng rng(29);
    for (int trial = 0; trial < 25; ++trial) {
        Index k = 1 + rng.next_below(7);
        double t = rng.next_double() * M_PI;
        double phase = rng.next_double() * 2.0 * M_PI;
        BidSuperposition sup;
        sup.terms = {
            WeightedBids{{Bid::null()}, Complex{std::cos(t), 0.0}},
            WeightedBids{{decode_bid(k, lang)},
                         std::sin(t) * Complex{std::cos(phase), std::sin(phase)}}};
        // UnitaryMatrix construction validates unitarity; reaching here is
        // the assertion.
        UnitaryMatrix op = synthesize_operator(sup, lang);
        CHECK(std::abs(op.at(0, 0) - Complex{std::cos(t), 0.0}) < 1e-12);
    }
}

TEST_CASE("joint partnership bid: three uniform terms, Schmidt rank 3") {
    // Alice and Bob bid jointly: nothing, or X@1 with Y@2, or Y@3 with X@1.
    BidLanguage lang = xy_language();
    BidSuperposition joint;
    joint.first_bidder = 0;
    joint.group_size = 2;
    double a = 1.0 / std::sqrt(3.0);
    joint.terms = {
        WeightedBids{{Bid::null(), Bid::null()}, Complex{a, 0.0}},
        WeightedBids{{Bid::of(lang.mask_for({"X"}), 1.0),
                      Bid::of(lang.mask_for({"Y"}), 2.0)},
                     Complex{a, 0.0}},
        WeightedBids{{Bid::of(lang.mask_for({"Y"}), 3.0),
                      Bid::of(lang.mask_for({"X"}), 1.0)},
                     Complex{a, 0.0}}};
    UnitaryMatrix op = synthesize_joint_operator(joint, lang);
    REQUIRE(op.dimension() == 256);

    int nonzero = 0;
    for (Index r = 0; r < 256; ++r) {
        double mag = std::abs(op.at(r, 0));
        if (mag > 1e-12) {
            ++nonzero;
            CHECK(std::abs(mag - a) < 1e-12);
        }
    }
    CHECK(nonzero == 3);

    // Schmidt rank across the two bidders via the Gram matrix of the 16x16
    // amplitude matrix M: the three terms sit at distinct rows and columns,
    // so M M^dagger must have exactly three eigenvalues 1/3.
    std::vector<Complex> m(16 * 16, Complex{0.0, 0.0});
    for (Index r = 0; r < 256; ++r) {
        m[(r >> 4) * 16 + (r & 15)] = op.at(r, 0);
    }
    double off_diag = 0.0;
    int diag_hits = 0;
    for (Index i = 0; i < 16; ++i) {
        for (Index j = 0; j < 16; ++j) {
            Complex g = 0.0;
            for (Index k = 0; k < 16; ++k) {
                g += m[i * 16 + k] * std::conj(m[j * 16 + k]);
            }
            if (i == j) {
                if (std::abs(g) > 1e-12) {
                    ++diag_hits;
                    CHECK(std::abs(g - Complex{1.0 / 3.0, 0.0}) < 1e-12);
                }
            } else {
                off_diag = std::max(off_diag, std::abs(g));
            }
        }
    }
    CHECK(diag_hits == 3);
    CHECK(off_diag < 1e-12);
}

TEST_CASE("a group of one matches synthesize_operator exactly") {
    BidLanguage lang = BidLanguage::single_item(2);
    BidSuperposition sup = uniform_null_plus(3, lang);
    UnitaryMatrix single = synthesize_operator(sup, lang);
    UnitaryMatrix joint = synthesize_joint_operator(sup, lang);
    REQUIRE(single.entries().size() == joint.entries().size());
    for (std::size_t i = 0; i < single.entries().size(); ++i) {
        CHECK(single.entries()[i] == joint.entries()[i]);
    }
}

TEST_CASE("contains_null sees through joint terms") {
    BidLanguage lang = BidLanguage::single_item(2);
    BidSuperposition sup = uniform_null_plus(2, lang);
    CHECK(sup.contains_null(lang));
    BidSuperposition no_null;
    no_null.terms = {WeightedBids{{decode_bid(2, lang)}, Complex{1.0, 0.0}}};
    CHECK(!no_null.contains_null(lang));
}

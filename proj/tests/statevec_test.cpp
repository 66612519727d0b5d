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

#include "qauction/statevec.hpp"
#include "test_helpers.hpp"

using namespace qauction;
using test::DenseMat;
using test::embed_block;
using test::matvec;
using test::max_amp_diff;

namespace {

StateVector random_state(const RegisterLayout& layout, SeededRng& rng) {
    std::vector<Complex> amps(layout.dimension());
    double n2 = 0.0;
    for (Complex& a : amps) {
        a = Complex{rng.next_gaussian(), rng.next_gaussian()};
        n2 += std::norm(a);
    }
    double inv = 1.0 / std::sqrt(n2);
    for (Complex& a : amps) {
        a *= inv;
    }
    return StateVector::from_amplitudes(layout, std::move(amps));
}

} // namespace

TEST_CASE("register layout digit round trip is a bijection") {
    RegisterLayout layout(3, 2);
    CHECK(layout.dimension() == 64);
    for (Index x = 0; x < layout.dimension(); ++x) {
        std::vector<Index> digits;
        for (int i = 0; i < 3; ++i) {
            digits.push_back(layout.digit(x, i));
        }
        CHECK(layout.index_from_digits(digits) == x);
    }
    // bidder 0 is the most significant digit
    CHECK(layout.digit(0b100100, 0) == 2);
    CHECK(layout.digit(0b100100, 1) == 1);
    CHECK(layout.digit(0b100100, 2) == 0);
}

TEST_CASE("register layout rejects oversized registers") {
    CHECK_THROWS_AS(RegisterLayout(3, 7), std::invalid_argument);
    CHECK_NOTHROW(RegisterLayout(3, 7, 24));
    CHECK_THROWS_AS(RegisterLayout(0, 2), std::invalid_argument);
}

TEST_CASE("unitarity is validated at construction") {
    std::vector<Complex> not_unitary = {{1, 0}, {1, 0}, {0, 0}, {1, 0}};
    CHECK_THROWS_AS(UnitaryMatrix(std::move(not_unitary), 0, 1),
                    std::invalid_argument);
    CHECK_NOTHROW(UnitaryMatrix::identity(4, 0, 1));
}

TEST_CASE("identity operator leaves any state unchanged") {
    RegisterLayout layout(2, 2);
    SeededRng rng(11);
    StateVector state = random_state(layout, rng);
    for (int bidder = 0; bidder < 2; ++bidder) {
        StateVector out =
            apply_local(state, UnitaryMatrix::identity(4, bidder, 1));
        CHECK(max_amp_diff(out.amplitudes(), state.amplitudes()) == 0.0);
    }
}

TEST_CASE("paper example: uniform bid operators on |0000>") {
    RegisterLayout layout(2, 2);
    StateVector state = StateVector::ground_state(layout);
    apply_local_in_place(state, test::example_two_qubit_bid_op(0));
    apply_local_in_place(state, test::example_two_qubit_bid_op(1));
    // (|00> + |10>)/sqrt(2) per bidder: amplitude 1/2 on indices 0, 2, 8, 10.
    for (Index x = 0; x < 16; ++x) {
        bool support = x == 0 || x == 2 || x == 8 || x == 10;
        CHECK(std::abs(state.amplitude(x) - (support ? 0.5 : 0.0)) < 1e-12);
    }
}

TEST_CASE("adjoint application inverts a random unitary") {
    RegisterLayout layout(3, 2);
    SeededRng rng(42);
    StateVector state = random_state(layout, rng);
    for (int bidder = 0; bidder < 3; ++bidder) {
        UnitaryMatrix op = random_unitary(4, bidder, 1, rng);
        StateVector roundtrip = apply_local(apply_local(state, op), op, true);
        CHECK(max_amp_diff(roundtrip.amplitudes(), state.amplitudes()) < 1e-10);
    }
}

TEST_CASE("apply_local matches the dense Kronecker oracle") {
    SeededRng rng(7);
    for (auto [n, b] : {std::pair{2, 2}, {3, 2}, {2, 3}, {4, 2}, {3, 4}}) {
        RegisterLayout layout(n, b);
        StateVector state = random_state(layout, rng);
        for (int bidder = 0; bidder < n; ++bidder) {
            UnitaryMatrix op = random_unitary(layout.block_dimension(), bidder,
                                              1, rng);
            StateVector engine = apply_local(state, op);
            std::vector<Complex> dense = matvec(
                embed_block(op, layout),
                {state.amplitudes().begin(), state.amplitudes().end()});
            CHECK(max_amp_diff(engine.amplitudes(), dense) < 1e-10);

            StateVector engine_adj = apply_local(state, op, true);
            std::vector<Complex> dense_adj = matvec(
                embed_block(op, layout),
                {state.amplitudes().begin(), state.amplitudes().end()}, true);
            CHECK(max_amp_diff(engine_adj.amplitudes(), dense_adj) < 1e-10);
        }
        // two-bidder joint block
        if (2 * b <= 6) {
            UnitaryMatrix op =
                random_unitary(Index{1} << (2 * b), n - 2, 2, rng);
            StateVector engine = apply_local(state, op);
            std::vector<Complex> dense = matvec(
                embed_block(op, layout),
                {state.amplitudes().begin(), state.amplitudes().end()});
            CHECK(max_amp_diff(engine.amplitudes(), dense) < 1e-10);
        }
    }
}

TEST_CASE("apply_local rejects mismatched blocks") {
    RegisterLayout layout(2, 2);
    StateVector state = StateVector::ground_state(layout);
    CHECK_THROWS_AS(apply_local(state, UnitaryMatrix::identity(8, 0, 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(apply_local(state, UnitaryMatrix::identity(4, 2, 1)),
                    std::invalid_argument);
}

TEST_CASE("zero phase and global phase leave the distribution unchanged") {
    RegisterLayout layout(2, 2);
    SeededRng rng(3);
    StateVector state = random_state(layout, rng);

    StateVector unchanged = apply_diagonal_phase(state, [](Index) { return 0.0; });
    CHECK(max_amp_diff(unchanged.amplitudes(), state.amplitudes()) == 0.0);

    StateVector flipped = apply_diagonal_phase(state, [](Index) { return M_PI; });
    for (Index x = 0; x < layout.dimension(); ++x) {
        CHECK(std::abs(flipped.amplitude(x) + state.amplitude(x)) < 1e-12);
    }
    auto d0 = outcome_distribution(state);
    auto d1 = outcome_distribution(flipped);
    REQUIRE(d0.size() == d1.size());
    for (const auto& [x, p] : d0) {
        CHECK(std::abs(d1.at(x) - p) < 1e-12);
    }
}

TEST_CASE("diagonal phase matches a dense diagonal-matrix multiply") {
    RegisterLayout layout(2, 2);
    SeededRng rng(5);
    StateVector state = random_state(layout, rng);
    auto cost = [](Index x) { return static_cast<double>(x % 5) - 1.0; };
    double f = 0.5, delta = 1.0;

    StateVector engine = apply_diagonal_phase(
        state, [&](Index x) { return f * cost(x) * delta; });

    DenseMat diag = DenseMat::identity(layout.dimension());
    for (Index x = 0; x < layout.dimension(); ++x) {
        double p = f * cost(x) * delta;
        diag.a[x * diag.dim + x] = Complex{std::cos(p), -std::sin(p)};
    }
    std::vector<Complex> dense =
        matvec(diag, {state.amplitudes().begin(), state.amplitudes().end()});
    CHECK(max_amp_diff(engine.amplitudes(), dense) < 1e-12);
}

TEST_CASE("norm is conserved across long random operator sequences") {
    RegisterLayout layout(3, 2);
    SeededRng rng(17);
    StateVector state = StateVector::ground_state(layout);
    for (int round = 0; round < 50; ++round) {
        int bidder = static_cast<int>(rng.next_below(3));
        apply_local_in_place(state, random_unitary(4, bidder, 1, rng));
        apply_diagonal_phase_in_place(
            state, [&](Index x) { return 0.1 * static_cast<double>(x); });
        CHECK(std::abs(state.norm() - 1.0) <= 1e-9);
    }
}

TEST_CASE("measurement of a basis state is deterministic") {
    RegisterLayout layout(2, 2);
    std::vector<Complex> amps(16, Complex{0.0, 0.0});
    amps[13] = 1.0;
    StateVector state = StateVector::from_amplitudes(layout, std::move(amps));
    SeededRng rng(99);
    for (int i = 0; i < 20; ++i) {
        CHECK(measure(state, rng) == 13);
    }
}

TEST_CASE("measurement frequencies of a uniform state stay within 3 sigma") {
    RegisterLayout layout(2, 1);
    std::vector<Complex> amps(4, Complex{0.5, 0.0});
    StateVector state = StateVector::from_amplitudes(layout, std::move(amps));
    SeededRng rng(12345);
    const int trials = 10000;
    int counts[4] = {0, 0, 0, 0};
    for (int i = 0; i < trials; ++i) {
        counts[measure(state, rng)]++;
    }
    double sigma = std::sqrt(trials * 0.25 * 0.75);
    for (int c : counts) {
        CHECK(std::abs(c - trials * 0.25) <= 3.0 * sigma);
    }
}

TEST_CASE("zero-amplitude outcomes never occur") {
    RegisterLayout layout(2, 2);
    std::vector<Complex> amps(16, Complex{0.0, 0.0});
    amps[0] = M_SQRT1_2;
    amps[2] = M_SQRT1_2;
    StateVector state = StateVector::from_amplitudes(layout, std::move(amps));
    SeededRng rng(8);
    for (int i = 0; i < 200; ++i) {
        Index outcome = measure(state, rng);
        CHECK((outcome == 0 || outcome == 2));
    }
}

TEST_CASE("measurement with a fixed seed replays bit for bit") {
    RegisterLayout layout(3, 2);
    SeededRng state_rng(21);
    StateVector state = random_state(layout, state_rng);
    std::vector<Index> first;
    {
        SeededRng rng(777);
        for (int i = 0; i < 50; ++i) {
            first.push_back(measure(state, rng));
        }
    }
    SeededRng rng(777);
    for (int i = 0; i < 50; ++i) {
        CHECK(measure(state, rng) == first[i]);
    }
}

TEST_CASE("norm violations are rejected") {
    RegisterLayout layout(1, 1);
    CHECK_THROWS_AS(StateVector::from_amplitudes(
                        layout, {Complex{0.9, 0.0}, Complex{0.1, 0.0}}),
                    std::invalid_argument);
}

TEST_CASE("outcome distribution matches |amplitude|^2 and sums to one") {
    RegisterLayout layout(2, 2);

    SUBCASE("basis state") {
        StateVector state = StateVector::ground_state(layout);
        auto dist = outcome_distribution(state);
        REQUIRE(dist.size() == 1);
        CHECK(dist.at(0) == 1.0);
    }

    SUBCASE("paper two-bidder product state") {
        // (|0,0> + |bA,0> + |0,bB> + |bA,bB>)/2 with bA = 2, bB = 3.
        std::vector<Complex> amps(16, Complex{0.0, 0.0});
        amps[0] = amps[2 * 4] = amps[3] = amps[2 * 4 + 3] = 0.5;
        auto dist = outcome_distribution(
            StateVector::from_amplitudes(layout, std::move(amps)));
        REQUIRE(dist.size() == 4);
        for (Index x : {Index{0}, Index{8}, Index{3}, Index{11}}) {
            CHECK(std::abs(dist.at(x) - 0.25) < 1e-12);
        }
    }

    SUBCASE("random state sums to one") {
        SeededRng rng(31);
        auto dist = outcome_distribution(random_state(layout, rng));
        double total = 0.0;
        for (const auto& [x, p] : dist) {
            total += p;
        }
        CHECK(std::abs(total - 1.0) <= 1e-9);
    }
}

TEST_CASE("householder completion has the target as its first column") {
    SeededRng rng(63);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Complex> target(8);
        double n2 = 0.0;
        for (Complex& a : target) {
            a = Complex{rng.next_gaussian(), rng.next_gaussian()};
            n2 += std::norm(a);
        }
        for (Complex& a : target) {
            a /= std::sqrt(n2);
        }
        UnitaryMatrix u = unitary_from_first_column(target, 0, 1);
        for (Index r = 0; r < 8; ++r) {
            CHECK(std::abs(u.at(r, 0) - target[r]) < 1e-12);
        }
    }
}

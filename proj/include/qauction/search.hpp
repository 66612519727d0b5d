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

#include <set>
#include <string>

#include "qauction/allocation.hpp"
#include "qauction/statevec.hpp"

namespace qauction {

/// Initial-Hamiltonian eigenvalue assignment d(x).
///
/// Hamming: the conventional choice, d(x) = popcount(x) over all n*b bits.
/// Permuted: d(x) = (-r(x)) mod (n+1) with r(x) the nonzero-digit count,
/// which pins d = 0 on the ground state and the maximum value n on every
/// single-deviation state.
enum class EigenvalueScheme { kHamming, kPermuted };

struct SearchSchedule {
    int steps = 100;
    double delta = 1.0;
    EigenvalueScheme scheme = EigenvalueScheme::kPermuted;

    /// Protocol-level schedules need steps >= 1 and delta in (0, pi];
    /// the raw engine also accepts steps = 0 (returns the initial state).
    void validate() const;
};

double d_hamming(Index x);
double d_permuted(Index x, const RegisterLayout& layout);

/// Raw cost/drive functions plus the normalization constants the engine
/// applies before scaling by delta: costs map affinely onto [0, 1] over
/// the enumerated range, drive values divide by their maximum. Phases stay
/// unaliased for delta <= pi that way.
struct PhaseModel {
    std::function<double(Index)> cost;
    double cost_min = 0.0;
    double cost_max = 1.0;
    std::function<double(Index)> drive;
    double drive_max = 1.0;

    double normalized_cost(Index x) const {
        return cost_max > cost_min ? (cost(x) - cost_min) / (cost_max - cost_min)
                                   : 0.0;
    }
    double normalized_drive(Index x) const {
        return drive_max > 0.0 ? drive(x) / drive_max : 0.0;
    }
};

/// Main-search phases: cost = -F(x) with its enumerated min/max, drive per
/// the scheme.
PhaseModel revenue_phase_model(const AuctionConfig& config,
                               const EvaluationRule& rule,
                               EigenvalueScheme scheme);
/// Null-check phases: cost = r(x), the count of non-null digits.
PhaseModel null_check_phase_model(const AuctionConfig& config,
                                  EigenvalueScheme scheme);

/// Operators for one strategy block: the init operator plus either a single
/// search operator (the honest case) or one per step.
struct BlockOperators {
    UnitaryMatrix init;
    std::vector<UnitaryMatrix> search_ops;

    /// Operator for 1-based search step s; a single entry applies to all.
    const UnitaryMatrix& search_at(int step) const;
};

struct TranscriptEvent {
    int step = 0;        // 0 = initialization
    double f = 0.0;      // fraction of steps completed
    std::string actor;   // "auctioneer" or "bidder:<k>" (1-based)
    std::string action;
    std::string reg;     // "main", "null-check", or "probe"
    std::uint64_t seed_state = 0; // rng draws consumed before the event
    double detail = 0.0; // action-specific (probe pass prob, norm, ...)
};

struct Transcript {
    std::vector<TranscriptEvent> events;
};

using StepObserver = std::function<void(int step, const StateVector&)>;

struct SearchResult {
    StateVector state;
    std::map<Index, double> distribution;
    Transcript transcript;
    double max_norm_drift = 0.0;
    /// True when the minimum cost over the initial state's support is
    /// attained by more than one basis state (tied top bids).
    bool degenerate_ground = false;
};

/// The discrete adiabatic distributed search:
///   Psi_0 = (init ops) |0...0>,
///   Psi_s = U D(f) U^dagger P(f) Psi_{s-1},  f = s/S,
/// with P(f) = exp(-i f c(x) delta) and D(f) = exp(-i (1-f) d(x) delta)
/// on the normalized c and d. The observer, when set, sees Psi_0 and every
/// Psi_s. Blocks may carry per-step operators to model switching.
SearchResult run_search_with_phases(const RegisterLayout& layout,
                                    const std::vector<BlockOperators>& blocks,
                                    const SearchSchedule& schedule,
                                    const PhaseModel& phases,
                                    const StepObserver& observer = {},
                                    const std::string& register_name = "main");

/// Main search against the first-price revenue criterion.
SearchResult run_search(const AuctionConfig& config,
                        const std::vector<BlockOperators>& blocks,
                        const SearchSchedule& schedule,
                        const EvaluationRule& rule = {},
                        const StepObserver& observer = {});

struct NullCheckResult {
    Index outcome = 0;
    std::set<int> flagged_bidders; // 0-based; digit != 0 in the outcome
    SearchResult search;
};

/// The second search, for the allocation with the most null values: same
/// protocol on a separate register with cost = r(x). Any bidder whose digit
/// in the measured outcome is nonzero gets flagged.
NullCheckResult run_null_check(const AuctionConfig& config,
                               const std::vector<BlockOperators>& blocks,
                               const SearchSchedule& schedule, SeededRng& rng);

struct ProbeResult {
    bool passed = false;
    double analytic_pass_prob = 0.0;
};

/// Probe step: the auctioneer sends phi = V|0>, the bidder returns
/// actual * claimed^dagger * phi, the auctioneer applies V^dagger and
/// measures; outcome 0 passes. The analytic pass probability
/// |<phi| actual claimed^dagger |phi>|^2 is computed exactly.
ProbeResult probe_test(const UnitaryMatrix& claimed, const UnitaryMatrix& actual,
                       const UnitaryMatrix& probe_basis, SeededRng& rng);

/// One bidder's two-dimensional {null, bid} subspace with its first-column
/// amplitudes (uniform by default).
struct SubspaceBid {
    Index bid_index = 1;
    Complex amp_null = Complex{M_SQRT1_2, 0.0};
    Complex amp_bid = Complex{M_SQRT1_2, 0.0};
};

/// Reference search in the 2^n subspace spanned by the bidders' {null, bid}
/// choices: the same update recurrence with per-bidder 2x2 blocks, subspace
/// Hamming weight as d, and the induced costs normalized with the
/// full-space constants. Serves as the oracle for subspace equivalence.
SearchResult subspace_reference_search(const AuctionConfig& config,
                                       const std::vector<SubspaceBid>& bids,
                                       const SearchSchedule& schedule,
                                       const EvaluationRule& rule = {},
                                       const StepObserver& observer = {});

/// Full-space index of subspace state `s` (bit i set = bidder i bids).
Index embed_subspace_state(Index s, const std::vector<SubspaceBid>& bids,
                           const RegisterLayout& layout);

} // namespace qauction

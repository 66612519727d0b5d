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

#include <nlohmann/json.hpp>

#include "qauction/protocol.hpp"

namespace qauction {

/// Splits outcome probability into p_h (a best feasible allocation within
/// the bidders' selected subspace wins), p_inf (infeasible outcome), and
/// p_o (some other feasible allocation wins). Rows always sum to one.
struct OutcomeMetrics {
    double p_best = 0.0;
    double p_infeasible = 0.0;
    double p_other = 0.0;
};

OutcomeMetrics classify_distribution(
    const AuctionConfig& config, const std::map<Index, double>& distribution,
    const std::vector<std::set<Index>>& supports,
    const EvaluationRule& rule = {});

/// Explicit dense 2^(n b) matrices for one search instance: U per step and
/// the diagonal P(f)/D(f) factors, built by literal Kronecker products.
/// Kept to n*b <= 12; this is the independent verification path.
class DenseOracle {
  public:
    DenseOracle(const AuctionConfig& config,
                const std::vector<BidderStrategy>& strategies,
                const SearchSchedule& schedule, const EvaluationRule& rule = {});

    /// States Psi_0..Psi_S of the recurrence run with dense matrix-vector
    /// products only.
    std::vector<std::vector<Complex>> run() const;

  private:
    std::vector<Complex> dense_step_operator(int step) const;

    AuctionConfig config_;
    SearchSchedule schedule_;
    std::vector<BlockOperators> blocks_;
    PhaseModel phases_;
    bool per_step_ops_ = false;
};

/// Runs the same instance through the tensor-structured engine and the
/// dense oracle; returns the max |amplitude difference| over all steps.
double oracle_compare(const AuctionConfig& config,
                      const std::vector<BidderStrategy>& strategies,
                      const SearchSchedule& schedule,
                      const EvaluationRule& rule = {});

// Deviation-gain sweep (the epsilon-equilibrium surrogate).

/// How the deviant bidder alters its initial operator while searching with
/// the honest one.
enum class InitDeviationKind {
    kNone,        // honest baseline
    kMinusPhase,  // (|0> - |b>)/sqrt(2) instead of (|0> + |b>)/sqrt(2)
    kPureBid      // |b> with no null component
};

struct GainSweepParams {
    std::vector<int> step_grid = {10, 100, 1000};
    int value_draws = 400;
    std::uint64_t seed = 1;
    int deviant_bidder = 0;
    InitDeviationKind deviation = InitDeviationKind::kMinusPhase;
};

struct GainSweepRow {
    int steps = 0;
    OutcomeMetrics honest; // averaged over value draws
    double delta = 0.0;    // measured p_o under honest play
    double gain = 0.0;     // mean deviant payoff - mean honest payoff
    double gain_sigma = 0.0;
    double bound = 0.0;    // delta * v_bar
    bool within_bound = false;
};

struct GainSweepReport {
    GainSweepParams params;
    double value_bound = 0.0; // v_bar, the max expressible bid
    std::vector<GainSweepRow> rows;
    bool converging = false;  // delta at the largest S < delta at the smallest
    bool all_within_bound = false;
};

/// Draws private values uniformly on the expressible price grid, bids the
/// classical NE function rounded to the grid, and Monte-Carlo estimates the
/// deviation gain at each step count. Payoffs per draw are exact (computed
/// from the final distribution); only the value draws are sampled.
GainSweepReport deviation_gain_sweep(const AuctionConfig& config,
                                     const GainSweepParams& params);

// Counting-claim verification.

struct CountingRow {
    std::string family; // "single-item" or "combinatorial"
    int n = 0;
    int b = 0;  // single-item qubits, or m + m_p
    int m = 0;  // combinatorial items
    int mp = 0; // combinatorial price bits
    std::uint64_t feasible_closed = 0;
    std::uint64_t feasible_enumerated = 0; // 0 when beyond the 16-qubit cap
    bool enumerated = false;
    bool counts_match = true;
    bool condition = false;
    bool collusion_condition = false;
    bool pass = true;
};

struct CountingReport {
    std::vector<CountingRow> rows;
    bool deviation_counts_match = true;
    /// (n, b) cells where the single-item condition fails; nonempty exactly
    /// when the grid includes a lone bidder with b >= 2.
    std::vector<std::pair<int, int>> claim1_counterexamples;
    bool all_pass = true;
};

/// Sweeps the grid, cross-checking closed forms against enumeration where
/// n*b <= 16 and asserting each inequality on its claimed domain: the
/// single-item condition everywhere, its collusion form for b >= 2, the
/// combinatorial condition for n >= 2 (and its failure for n = 1), and the
/// combinatorial collusion form for n, m >= 2.
CountingReport verify_counting_claims(int max_n, int max_b, int max_m,
                                      int max_mp);

// Hamming-versus-permuted scheme contrast.

struct ContrastReport {
    int steps = 0;
    OutcomeMetrics hamming;
    OutcomeMetrics permuted;
    /// p_other under each scheme: the probability some feasible allocation
    /// below the best subspace allocation wins.
    double hamming_low_bid_win = 0.0;
    double permuted_low_bid_win = 0.0;
    bool permuted_not_worse = false; // permuted <= hamming
};

/// Runs one deviation instance under both schemes at the same schedule.
ContrastReport scheme_contrast(const AuctionConfig& config,
                               const std::vector<BidderStrategy>& strategies,
                               const SearchSchedule& schedule);

// Subspace-equivalence battery.

struct SubspaceCase {
    std::vector<Index> bid_indices;
    double max_amplitude_deviation = 0.0;
    double max_out_of_subspace = 0.0;
};

struct SubspaceReport {
    std::vector<SubspaceCase> cases;
    double max_amplitude_deviation = 0.0;
    double max_out_of_subspace = 0.0;
    bool pass = false;
};

/// For every choice of per-bidder bids, runs the full-space search with
/// d(x) = r(x) (the nonzero-digit count) and the 2^n reference search and
/// compares amplitudes on the subspace at every step, plus the leaked
/// out-of-subspace probability. Tolerances: 1e-9 on amplitudes, 1e-12 on
/// leakage.
SubspaceReport verify_subspace_equivalence(const AuctionConfig& config,
                                           const SearchSchedule& schedule);

// Report serialization. CSV columns are documented in the README.

nlohmann::ordered_json to_json(const GainSweepReport& report);
nlohmann::ordered_json to_json(const CountingReport& report);
nlohmann::ordered_json to_json(const ContrastReport& report);
nlohmann::ordered_json to_json(const SubspaceReport& report);

void write_csv(const GainSweepReport& report, std::ostream& out);
void write_csv(const CountingReport& report, std::ostream& out);

} // namespace qauction

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

#include "qauction/search.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qauction {

void SearchSchedule::validate() const {
    if (steps < 1) {
        throw std::invalid_argument("SearchSchedule: steps must be >= 1");
    }
    if (!(delta > 0.0) || delta > M_PI) {
        throw std::invalid_argument(
            "SearchSchedule: delta must lie in (0, pi]; larger phases alias");
    }
}

double d_hamming(Index x) { return static_cast<double>(std::popcount(x)); }

double d_permuted(Index x, const RegisterLayout& layout) {
    int n = layout.n_bidders();
    int r = layout.nonzero_digit_count(x);
    return static_cast<double>(((-r) % (n + 1) + (n + 1)) % (n + 1));
}

namespace {

std::pair<double, double> cost_range(const RegisterLayout& layout,
                                     const std::function<double(Index)>& cost) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (Index x = 0; x < layout.dimension(); ++x) {
        double c = cost(x);
        lo = std::min(lo, c);
        hi = std::max(hi, c);
    }
    return {lo, hi};
}

std::function<double(Index)> drive_function(const RegisterLayout& layout,
                                            EigenvalueScheme scheme) {
    if (scheme == EigenvalueScheme::kHamming) {
        return [](Index x) { return d_hamming(x); };
    }
    return [layout](Index x) { return d_permuted(x, layout); };
}

double drive_maximum(const RegisterLayout& layout, EigenvalueScheme scheme) {
    return scheme == EigenvalueScheme::kHamming
               ? static_cast<double>(layout.qubit_count())
               : static_cast<double>(layout.n_bidders());
}

void check_blocks(const RegisterLayout& layout,
                  const std::vector<BlockOperators>& blocks, int steps) {
    int next = 0;
    for (const BlockOperators& block : blocks) {
        if (block.init.first_bidder() != next) {
            throw std::invalid_argument(
                "run_search: operator blocks must tile the bidders in order");
        }
        if (block.search_ops.empty()) {
            throw std::invalid_argument("run_search: block has no search operator");
        }
        if (block.search_ops.size() != 1 &&
            static_cast<int>(block.search_ops.size()) != steps) {
            throw std::invalid_argument(
                "run_search: per-step operator list must match the step count");
        }
        for (const UnitaryMatrix& op : block.search_ops) {
            if (op.first_bidder() != block.init.first_bidder() ||
                op.bidder_count() != block.init.bidder_count() ||
                op.dimension() != block.init.dimension()) {
                throw std::invalid_argument(
                    "run_search: search operator block mismatch with init");
            }
        }
        next += block.init.bidder_count();
    }
    if (next != layout.n_bidders()) {
        throw std::invalid_argument("run_search: blocks must cover every bidder");
    }
}

std::string block_actor(const BlockOperators& block) {
    int first = block.init.first_bidder() + 1; // 1-based in transcripts
    if (block.init.bidder_count() == 1) {
        return "bidder:" + std::to_string(first);
    }
    return "bidders:" + std::to_string(first) + "-" +
           std::to_string(first + block.init.bidder_count() - 1);
}

bool ground_is_degenerate(const StateVector& init, const PhaseModel& phases) {
    double best = std::numeric_limits<double>::infinity();
    int hits = 0;
    for (Index x = 0; x < init.amplitudes().size(); ++x) {
        if (std::norm(init.amplitude(x)) <= 1e-24) {
            continue;
        }
        double c = phases.cost(x);
        if (c < best - 1e-12) {
            best = c;
            hits = 1;
        } else if (c <= best + 1e-12) {
            ++hits;
        }
    }
    return hits > 1;
}

} // namespace

const UnitaryMatrix& BlockOperators::search_at(int step) const {
    if (search_ops.size() == 1) {
        return search_ops.front();
    }
    if (step < 1 || step > static_cast<int>(search_ops.size())) {
        throw std::invalid_argument("BlockOperators: step out of range");
    }
    return search_ops[step - 1];
}

PhaseModel revenue_phase_model(const AuctionConfig& config,
                               const EvaluationRule& rule,
                               EigenvalueScheme scheme) {
    PhaseModel model;
    model.cost = [config, rule](Index x) { return cost_of(x, config, rule); };
    auto [lo, hi] = cost_range(config.layout, model.cost);
    model.cost_min = lo;
    model.cost_max = hi;
    model.drive = drive_function(config.layout, scheme);
    model.drive_max = drive_maximum(config.layout, scheme);
    return model;
}

PhaseModel null_check_phase_model(const AuctionConfig& config,
                                  EigenvalueScheme scheme) {
    PhaseModel model;
    RegisterLayout layout = config.layout;
    model.cost = [layout](Index x) {
        return static_cast<double>(layout.nonzero_digit_count(x));
    };
    model.cost_min = 0.0;
    model.cost_max = static_cast<double>(layout.n_bidders());
    model.drive = drive_function(layout, scheme);
    model.drive_max = drive_maximum(layout, scheme);
    return model;
}

SearchResult run_search_with_phases(const RegisterLayout& layout,
                                    const std::vector<BlockOperators>& blocks,
                                    const SearchSchedule& schedule,
                                    const PhaseModel& phases,
                                    const StepObserver& observer,
                                    const std::string& register_name) {
    if (schedule.steps < 0) {
        throw std::invalid_argument("run_search: negative step count");
    }
    check_blocks(layout, blocks, schedule.steps);

    StateVector state = StateVector::ground_state(layout);
    Transcript transcript;
    auto log = [&](int step, double f, const std::string& actor,
                   const std::string& action) {
        transcript.events.push_back(
            TranscriptEvent{step, f, actor, action, register_name, 0, 0.0});
    };

    for (const BlockOperators& block : blocks) {
        apply_local_in_place(state, block.init);
        log(0, 0.0, block_actor(block), "apply-init-op");
    }
    bool degenerate = ground_is_degenerate(state, phases);
    double max_drift = std::abs(state.norm() - 1.0);
    if (observer) {
        observer(0, state);
    }

    const int total = schedule.steps;
    for (int s = 1; s <= total; ++s) {
        double f = static_cast<double>(s) / static_cast<double>(total);
        double delta = schedule.delta;
        apply_diagonal_phase_in_place(state, [&](Index x) {
            return f * phases.normalized_cost(x) * delta;
        });
        log(s, f, "auctioneer", "phase-cost");
        for (const BlockOperators& block : blocks) {
            apply_local_in_place(state, block.search_at(s), /*adjoint=*/true);
            log(s, f, block_actor(block), "apply-search-op-adjoint");
        }
        apply_diagonal_phase_in_place(state, [&](Index x) {
            return (1.0 - f) * phases.normalized_drive(x) * delta;
        });
        log(s, f, "auctioneer", "phase-drive");
        for (const BlockOperators& block : blocks) {
            apply_local_in_place(state, block.search_at(s), /*adjoint=*/false);
            log(s, f, block_actor(block), "apply-search-op");
        }
        max_drift = std::max(max_drift, std::abs(state.norm() - 1.0));
        if (observer) {
            observer(s, state);
        }
    }

    SearchResult result{std::move(state), {}, std::move(transcript), max_drift,
                        degenerate};
    result.distribution = outcome_distribution(result.state);
    return result;
}

SearchResult run_search(const AuctionConfig& config,
                        const std::vector<BlockOperators>& blocks,
                        const SearchSchedule& schedule,
                        const EvaluationRule& rule,
                        const StepObserver& observer) {
    PhaseModel phases = revenue_phase_model(config, rule, schedule.scheme);
    return run_search_with_phases(config.layout, blocks, schedule, phases,
                                  observer, "main");
}

NullCheckResult run_null_check(const AuctionConfig& config,
                               const std::vector<BlockOperators>& blocks,
                               const SearchSchedule& schedule, SeededRng& rng) {
    PhaseModel phases = null_check_phase_model(config, schedule.scheme);
    SearchResult search = run_search_with_phases(config.layout, blocks, schedule,
                                                 phases, {}, "null-check");
    Index outcome = measure(search.state, rng);
    std::set<int> flagged;
    for (int i = 0; i < config.layout.n_bidders(); ++i) {
        if (config.layout.digit(outcome, i) != 0) {
            flagged.insert(i);
        }
    }
    return NullCheckResult{outcome, std::move(flagged), std::move(search)};
}

ProbeResult probe_test(const UnitaryMatrix& claimed, const UnitaryMatrix& actual,
                       const UnitaryMatrix& probe_basis, SeededRng& rng) {
    Index d = claimed.dimension();
    if (actual.dimension() != d || probe_basis.dimension() != d) {
        throw std::invalid_argument("probe_test: operator dimensions differ");
    }
    // phi = V |0> is the first column of V.
    std::vector<Complex> phi(d);
    for (Index r = 0; r < d; ++r) {
        phi[r] = probe_basis.at(r, 0);
    }
    auto matvec = [d](const UnitaryMatrix& m, const std::vector<Complex>& v,
                      bool adjoint) {
        std::vector<Complex> out(d, Complex{0.0, 0.0});
        for (Index r = 0; r < d; ++r) {
            Complex acc = 0.0;
            for (Index c = 0; c < d; ++c) {
                acc += (adjoint ? std::conj(m.at(c, r)) : m.at(r, c)) * v[c];
            }
            out[r] = acc;
        }
        return out;
    };
    std::vector<Complex> returned = matvec(actual, matvec(claimed, phi, true), false);
    std::vector<Complex> rotated = matvec(probe_basis, returned, true);

    ProbeResult result;
    result.analytic_pass_prob = std::norm(rotated[0]);
    double total = 0.0;
    for (const Complex& a : rotated) {
        total += std::norm(a);
    }
    double target = rng.next_double() * total;
    double acc = 0.0;
    Index outcome = d - 1;
    for (Index x = 0; x < d; ++x) {
        acc += std::norm(rotated[x]);
        if (acc > target) {
            outcome = x;
            break;
        }
    }
    result.passed = outcome == 0;
    return result;
}

Index embed_subspace_state(Index s, const std::vector<SubspaceBid>& bids,
                           const RegisterLayout& layout) {
    std::vector<Index> digits(layout.n_bidders(), 0);
    for (int i = 0; i < layout.n_bidders(); ++i) {
        if (s >> (layout.n_bidders() - 1 - i) & 1) {
            digits[i] = bids[i].bid_index;
        }
    }
    return layout.index_from_digits(digits);
}

SearchResult subspace_reference_search(const AuctionConfig& config,
                                       const std::vector<SubspaceBid>& bids,
                                       const SearchSchedule& schedule,
                                       const EvaluationRule& rule,
                                       const StepObserver& observer) {
    int n = config.layout.n_bidders();
    if (static_cast<int>(bids.size()) != n) {
        throw std::invalid_argument(
            "subspace_reference_search: need one subspace bid per bidder");
    }
    for (const SubspaceBid& bid : bids) {
        if (bid.bid_index == 0 || bid.bid_index >= config.layout.block_dimension()) {
            throw std::invalid_argument(
                "subspace_reference_search: bid index must be a nonzero digit");
        }
        double n2 = std::norm(bid.amp_null) + std::norm(bid.amp_bid);
        if (std::abs(std::sqrt(n2) - 1.0) > 1e-12) {
            throw std::invalid_argument(
                "subspace_reference_search: subspace amplitudes not normalized");
        }
    }

    // One qubit per bidder; per-bidder 2x2 blocks completed by the same
    // Householder rule as the full-space operators, so the reference block
    // equals the full operator's restriction exactly.
    RegisterLayout sub_layout(n, 1);
    std::vector<BlockOperators> blocks;
    blocks.reserve(n);
    for (int i = 0; i < n; ++i) {
        UnitaryMatrix op = unitary_from_first_column(
            {bids[i].amp_null, bids[i].amp_bid}, i, 1);
        blocks.push_back(BlockOperators{op, {op}});
    }

    // Induced costs carry the full-space normalization so both searches
    // apply identical phases on corresponding states.
    PhaseModel full = revenue_phase_model(config, rule, schedule.scheme);
    PhaseModel phases;
    RegisterLayout full_layout = config.layout;
    auto bids_copy = bids;
    phases.cost = [full, bids_copy, full_layout](Index s) {
        return full.cost(embed_subspace_state(s, bids_copy, full_layout));
    };
    phases.cost_min = full.cost_min;
    phases.cost_max = full.cost_max;
    phases.drive = [](Index s) { return d_hamming(s); };
    phases.drive_max = static_cast<double>(n);

    return run_search_with_phases(sub_layout, blocks, schedule, phases, observer,
                                  "subspace-reference");
}

} // namespace qauction

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

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "qauction/rng.hpp"

namespace qauction {

using Complex = std::complex<double>;
using Index = std::uint64_t;

inline constexpr int kDefaultMaxQubits = 20;
inline constexpr double kUnitarityTolerance = 1e-9;
inline constexpr double kStateNormTolerance = 1e-9;
inline constexpr double kMeasureNormTolerance = 1e-6;
inline constexpr double kDistributionCutoff = 1e-15;

/// Register geometry for n bidders with b qubits each.
///
/// Bidder 0 occupies the most significant b bits of the global index, so a
/// global index x reads as the base-2^b digit string (x_0, ..., x_{n-1}).
/// The bit/digit order is a fixed convention of this implementation.
class RegisterLayout {
  public:
    RegisterLayout(int n_bidders, int bits_per_bidder,
                   int max_qubits = kDefaultMaxQubits);

    int n_bidders() const { return n_bidders_; }
    int bits_per_bidder() const { return bits_per_bidder_; }
    int qubit_count() const { return n_bidders_ * bits_per_bidder_; }
    Index dimension() const { return Index{1} << qubit_count(); }
    Index block_dimension() const { return Index{1} << bits_per_bidder_; }

    /// Base-2^b digit of bidder `bidder` within global index x.
    Index digit(Index x, int bidder) const;
    Index index_from_digits(std::span<const Index> digits) const;
    /// Number of nonzero digits, the paper's r(x).
    int nonzero_digit_count(Index x) const;

    bool operator==(const RegisterLayout&) const = default;

  private:
    int n_bidders_;
    int bits_per_bidder_;
};

/// Dense unitary acting on the contiguous bidder block
/// [first_bidder, first_bidder + bidder_count). Entries are row-major.
/// Construction rejects matrices whose U U^dagger deviates from the
/// identity by more than kUnitarityTolerance in any entry.
class UnitaryMatrix {
  public:
    UnitaryMatrix(std::vector<Complex> entries, int first_bidder,
                  int bidder_count);

    static UnitaryMatrix identity(Index dimension, int first_bidder,
                                  int bidder_count);

    Index dimension() const { return dimension_; }
    int first_bidder() const { return first_bidder_; }
    int bidder_count() const { return bidder_count_; }

    const Complex& at(Index row, Index col) const {
        return entries_[row * dimension_ + col];
    }
    std::span<const Complex> entries() const { return entries_; }

    bool operator==(const UnitaryMatrix&) const = default;

  private:
    std::vector<Complex> entries_;
    Index dimension_;
    int first_bidder_;
    int bidder_count_;
};

/// Normalized amplitude vector over the 2^(n b) joint basis states.
/// Values are immutable through the public surface; the in-place kernels
/// below mutate an exclusively owned buffer.
class StateVector {
  public:
    static StateVector ground_state(const RegisterLayout& layout);
    /// Validates length and unit norm (within kStateNormTolerance).
    static StateVector from_amplitudes(const RegisterLayout& layout,
                                       std::vector<Complex> amplitudes);

    const RegisterLayout& layout() const { return layout_; }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    Complex amplitude(Index x) const { return amplitudes_[x]; }
    double norm() const;

  private:
    StateVector(RegisterLayout layout, std::vector<Complex> amplitudes)
        : layout_(layout), amplitudes_(std::move(amplitudes)) {}

    RegisterLayout layout_;
    std::vector<Complex> amplitudes_;

    friend void apply_local_in_place(StateVector&, const UnitaryMatrix&, bool);
    friend void apply_diagonal_phase_in_place(
        StateVector&, const std::function<double(Index)>&);
};

/// Applies op (or its adjoint) to its bidder block without forming the
/// full Kronecker product: result = (I (x) ... (x) U (x) ... (x) I) state.
void apply_local_in_place(StateVector& state, const UnitaryMatrix& op,
                          bool adjoint = false);
StateVector apply_local(const StateVector& state, const UnitaryMatrix& op,
                        bool adjoint = false);

/// Multiplies amplitude[x] by exp(-i phase(x)).
void apply_diagonal_phase_in_place(StateVector& state,
                                   const std::function<double(Index)>& phase);
StateVector apply_diagonal_phase(const StateVector& state,
                                 const std::function<double(Index)>& phase);

/// Projective measurement in the computational basis; deterministic for a
/// given rng stream position. Rejects states whose norm is off by more
/// than kMeasureNormTolerance.
Index measure(const StateVector& state, SeededRng& rng);

/// Exact analysis counterpart of measure: |amplitude|^2 per basis state,
/// omitting entries below kDistributionCutoff.
std::map<Index, double> outcome_distribution(const StateVector& state);

/// Deterministic unitary completion of a unit column vector: returns a
/// unitary whose first column equals `target`, built from a single
/// Householder reflection with a fixed sign convention.
UnitaryMatrix unitary_from_first_column(std::vector<Complex> target,
                                        int first_bidder, int bidder_count);

/// Haar-ish random unitary from a complex Gaussian matrix via modified
/// Gram-Schmidt with positive-diagonal phase fixing.
UnitaryMatrix random_unitary(Index dimension, int first_bidder,
                             int bidder_count, SeededRng& rng);

} // namespace qauction

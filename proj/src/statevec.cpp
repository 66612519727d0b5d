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

#include "qauction/statevec.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qauction {

namespace {

bool is_power_of_two(Index v) { return v != 0 && (v & (v - 1)) == 0; }

} // namespace

RegisterLayout::RegisterLayout(int n_bidders, int bits_per_bidder,
                               int max_qubits)
    : n_bidders_(n_bidders), bits_per_bidder_(bits_per_bidder) {
    if (n_bidders < 1 || bits_per_bidder < 1) {
        throw std::invalid_argument(
            "RegisterLayout: bidder count and bits per bidder must be >= 1");
    }
    if (n_bidders * bits_per_bidder > max_qubits) {
        throw std::invalid_argument(
            "RegisterLayout: " + std::to_string(n_bidders * bits_per_bidder) +
            " qubits exceeds the configured maximum of " +
            std::to_string(max_qubits));
    }
}

Index RegisterLayout::digit(Index x, int bidder) const {
    int shift = (n_bidders_ - 1 - bidder) * bits_per_bidder_;
    return (x >> shift) & (block_dimension() - 1);
}

Index RegisterLayout::index_from_digits(std::span<const Index> digits) const {
    if (static_cast<int>(digits.size()) != n_bidders_) {
        throw std::invalid_argument("index_from_digits: need one digit per bidder");
    }
    Index x = 0;
    for (Index d : digits) {
        if (d >= block_dimension()) {
            throw std::invalid_argument("index_from_digits: digit out of range");
        }
        x = (x << bits_per_bidder_) | d;
    }
    return x;
}

int RegisterLayout::nonzero_digit_count(Index x) const {
    int count = 0;
    for (int i = 0; i < n_bidders_; ++i) {
        if (digit(x, i) != 0) {
            ++count;
        }
    }
    return count;
}

UnitaryMatrix::UnitaryMatrix(std::vector<Complex> entries, int first_bidder,
                             int bidder_count)
    : entries_(std::move(entries)),
      first_bidder_(first_bidder),
      bidder_count_(bidder_count) {
    if (first_bidder < 0 || bidder_count < 1) {
        throw std::invalid_argument("UnitaryMatrix: invalid bidder block");
    }
    Index n = static_cast<Index>(std::llround(std::sqrt(
        static_cast<double>(entries_.size()))));
    if (n * n != entries_.size() || !is_power_of_two(n)) {
        throw std::invalid_argument(
            "UnitaryMatrix: entry count must be a square power of two");
    }
    dimension_ = n;
    // Max-entry check of U U^dagger against the identity.
    for (Index r = 0; r < n; ++r) {
        for (Index c = r; c < n; ++c) {
            Complex acc = 0.0;
            for (Index k = 0; k < n; ++k) {
                acc += entries_[r * n + k] * std::conj(entries_[c * n + k]);
            }
            Complex expect = (r == c) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
            if (std::abs(acc - expect) > kUnitarityTolerance) {
                throw std::invalid_argument(
                    "UnitaryMatrix: matrix is not unitary within tolerance");
            }
        }
    }
}

UnitaryMatrix UnitaryMatrix::identity(Index dimension, int first_bidder,
                                      int bidder_count) {
    std::vector<Complex> e(dimension * dimension, Complex{0.0, 0.0});
    for (Index i = 0; i < dimension; ++i) {
        e[i * dimension + i] = 1.0;
    }
    return UnitaryMatrix(std::move(e), first_bidder, bidder_count);
}

StateVector StateVector::ground_state(const RegisterLayout& layout) {
    std::vector<Complex> amps(layout.dimension(), Complex{0.0, 0.0});
    amps[0] = 1.0;
    return StateVector(layout, std::move(amps));
}

StateVector StateVector::from_amplitudes(const RegisterLayout& layout,
                                         std::vector<Complex> amplitudes) {
    if (amplitudes.size() != layout.dimension()) {
        throw std::invalid_argument(
            "StateVector: amplitude count does not match layout dimension");
    }
    double n2 = 0.0;
    for (const Complex& a : amplitudes) {
        n2 += std::norm(a);
    }
    if (std::abs(std::sqrt(n2) - 1.0) > kStateNormTolerance) {
        throw std::invalid_argument("StateVector: amplitudes are not normalized");
    }
    return StateVector(layout, std::move(amplitudes));
}

double StateVector::norm() const {
    double n2 = 0.0;
    for (const Complex& a : amplitudes_) {
        n2 += std::norm(a);
    }
    return std::sqrt(n2);
}

void apply_local_in_place(StateVector& state, const UnitaryMatrix& op,
                          bool adjoint) {
    const RegisterLayout& layout = state.layout_;
    int first = op.first_bidder();
    int count = op.bidder_count();
    if (first + count > layout.n_bidders()) {
        throw std::invalid_argument("apply_local: bidder block out of range");
    }
    int block_bits = count * layout.bits_per_bidder();
    Index block_dim = Index{1} << block_bits;
    if (op.dimension() != block_dim) {
        throw std::invalid_argument(
            "apply_local: operator dimension does not match the bidder block");
    }

    // Global index decomposes as (high, block, low) with the block digits
    // in the middle; bidder 0 is most significant.
    int low_bits = (layout.n_bidders() - first - count) * layout.bits_per_bidder();
    Index low_dim = Index{1} << low_bits;
    Index high_dim = layout.dimension() >> (low_bits + block_bits);

    std::vector<Complex>& amps = state.amplitudes_;
    std::vector<Complex> in(block_dim);
    std::vector<Complex> out(block_dim);
    const Index d = block_dim;
    for (Index h = 0; h < high_dim; ++h) {
        for (Index l = 0; l < low_dim; ++l) {
            Index base = (h * d) * low_dim + l;
            for (Index m = 0; m < d; ++m) {
                in[m] = amps[base + m * low_dim];
            }
            for (Index r = 0; r < d; ++r) {
                Complex acc = 0.0;
                if (adjoint) {
                    for (Index c = 0; c < d; ++c) {
                        acc += std::conj(op.at(c, r)) * in[c];
                    }
                } else {
                    for (Index c = 0; c < d; ++c) {
                        acc += op.at(r, c) * in[c];
                    }
                }
                out[r] = acc;
            }
            for (Index m = 0; m < d; ++m) {
                amps[base + m * low_dim] = out[m];
            }
        }
    }
}

StateVector apply_local(const StateVector& state, const UnitaryMatrix& op,
                        bool adjoint) {
    StateVector result = state;
    apply_local_in_place(result, op, adjoint);
    return result;
}

void apply_diagonal_phase_in_place(StateVector& state,
                                   const std::function<double(Index)>& phase) {
    std::vector<Complex>& amps = state.amplitudes_;
    for (Index x = 0; x < amps.size(); ++x) {
        double p = phase(x);
        amps[x] *= Complex{std::cos(p), -std::sin(p)};
    }
}

StateVector apply_diagonal_phase(const StateVector& state,
                                 const std::function<double(Index)>& phase) {
    StateVector result = state;
    apply_diagonal_phase_in_place(result, phase);
    return result;
}

Index measure(const StateVector& state, SeededRng& rng) {
    double total = 0.0;
    for (const Complex& a : state.amplitudes()) {
        total += std::norm(a);
    }
    if (std::abs(std::sqrt(total) - 1.0) > kMeasureNormTolerance) {
        throw std::invalid_argument("measure: state is not normalized");
    }
    double target = rng.next_double() * total;
    double acc = 0.0;
    Index last_nonzero = 0;
    for (Index x = 0; x < state.amplitudes().size(); ++x) {
        double p = std::norm(state.amplitude(x));
        if (p > 0.0) {
            last_nonzero = x;
        }
        acc += p;
        if (acc > target) {
            return x;
        }
    }
    return last_nonzero; // rounding tail
}

std::map<Index, double> outcome_distribution(const StateVector& state) {
    std::map<Index, double> dist;
    for (Index x = 0; x < state.amplitudes().size(); ++x) {
        double p = std::norm(state.amplitude(x));
        if (p >= kDistributionCutoff) {
            dist.emplace(x, p);
        }
    }
    return dist;
}

UnitaryMatrix unitary_from_first_column(std::vector<Complex> target,
                                        int first_bidder, int bidder_count) {
    Index d = target.size();
    if (d == 0 || !is_power_of_two(d)) {
        throw std::invalid_argument(
            "unitary_from_first_column: dimension must be a power of two");
    }
    double n2 = 0.0;
    for (const Complex& a : target) {
        n2 += std::norm(a);
    }
    double n = std::sqrt(n2);
    if (std::abs(n - 1.0) > 1e-12) {
        throw std::invalid_argument(
            "unitary_from_first_column: target must be a unit vector");
    }
    for (Complex& a : target) {
        a /= n;
    }

    // QR-style Householder: H maps target to beta e_0 with |beta| = 1; the
    // result is H with its first column scaled by beta, so column 0 equals
    // the target exactly and the completion is deterministic.
    Complex x0 = target[0];
    Complex beta = (std::abs(x0) > 1e-300)
                       ? Complex{-x0.real() / std::abs(x0), -x0.imag() / std::abs(x0)}
                       : Complex{-1.0, 0.0};
    std::vector<Complex> v = target;
    v[0] -= beta;
    double vv = 0.0;
    for (const Complex& a : v) {
        vv += std::norm(a);
    }

    std::vector<Complex> m(d * d, Complex{0.0, 0.0});
    for (Index i = 0; i < d; ++i) {
        m[i * d + i] = 1.0;
    }
    if (vv > 1e-30) {
        double scale = 2.0 / vv;
        for (Index r = 0; r < d; ++r) {
            for (Index c = 0; c < d; ++c) {
                m[r * d + c] -= scale * v[r] * std::conj(v[c]);
            }
        }
    }
    for (Index r = 0; r < d; ++r) {
        m[r * d] *= beta;
    }
    return UnitaryMatrix(std::move(m), first_bidder, bidder_count);
}

UnitaryMatrix random_unitary(Index dimension, int first_bidder,
                             int bidder_count, SeededRng& rng) {
    Index d = dimension;
    std::vector<Complex> a(d * d);
    for (Complex& e : a) {
        e = Complex{rng.next_gaussian(), rng.next_gaussian()};
    }
    // Modified Gram-Schmidt on columns with the R diagonal's phase folded
    // back in, which makes the distribution Haar for Gaussian input.
    for (Index c = 0; c < d; ++c) {
        for (Index prev = 0; prev < c; ++prev) {
            Complex proj = 0.0;
            for (Index r = 0; r < d; ++r) {
                proj += std::conj(a[r * d + prev]) * a[r * d + c];
            }
            for (Index r = 0; r < d; ++r) {
                a[r * d + c] -= proj * a[r * d + prev];
            }
        }
        double col_norm2 = 0.0;
        for (Index r = 0; r < d; ++r) {
            col_norm2 += std::norm(a[r * d + c]);
        }
        double inv = 1.0 / std::sqrt(col_norm2);
        for (Index r = 0; r < d; ++r) {
            a[r * d + c] *= inv;
        }
    }
    return UnitaryMatrix(std::move(a), first_bidder, bidder_count);
}

} // namespace qauction

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
#include <vector>

#include "qauction/statevec.hpp"

// Test-side oracles, written against the mathematical definitions and kept
// independent of the engine's tensor-structured application path.

namespace qauction::test {

struct DenseMat {
    Index dim = 0;
    std::vector<Complex> a; // row-major

    static DenseMat identity(Index d) {
        DenseMat m{d, std::vector<Complex>(d * d, Complex{0.0, 0.0})};
        for (Index i = 0; i < d; ++i) {
            m.a[i * d + i] = 1.0;
        }
        return m;
    }
};

inline DenseMat kron(const DenseMat& x, const DenseMat& y) {
    DenseMat out{x.dim * y.dim,
                 std::vector<Complex>(x.dim * y.dim * x.dim * y.dim)};
    for (Index rx = 0; rx < x.dim; ++rx) {
        for (Index cx = 0; cx < x.dim; ++cx) {
            for (Index ry = 0; ry < y.dim; ++ry) {
                for (Index cy = 0; cy < y.dim; ++cy) {
                    out.a[(rx * y.dim + ry) * out.dim + (cx * y.dim + cy)] =
                        x.a[rx * x.dim + cx] * y.a[ry * y.dim + cy];
                }
            }
        }
    }
    return out;
}

inline std::vector<Complex> matvec(const DenseMat& m,
                                   const std::vector<Complex>& v,
                                   bool adjoint = false) {
    std::vector<Complex> out(m.dim, Complex{0.0, 0.0});
    for (Index r = 0; r < m.dim; ++r) {
        Complex acc = 0.0;
        for (Index c = 0; c < m.dim; ++c) {
            acc += (adjoint ? std::conj(m.a[c * m.dim + r]) : m.a[r * m.dim + c]) *
                   v[c];
        }
        out[r] = acc;
    }
    return out;
}

inline DenseMat from_unitary(const UnitaryMatrix& u) {
    return DenseMat{u.dimension(),
                    std::vector<Complex>(u.entries().begin(), u.entries().end())};
}

/// Embeds a block operator into the full space:
/// I_(before) (x) U (x) I_(after).
inline DenseMat embed_block(const UnitaryMatrix& op, const RegisterLayout& layout) {
    Index before =
        Index{1} << (op.first_bidder() * layout.bits_per_bidder());
    int after_bits = (layout.n_bidders() - op.first_bidder() - op.bidder_count()) *
                     layout.bits_per_bidder();
    Index after = Index{1} << after_bits;
    return kron(kron(DenseMat::identity(before), from_unitary(op)),
                DenseMat::identity(after));
}

inline double max_amp_diff(std::span<const Complex> a,
                           std::span<const Complex> b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

/// The paper-style uniform bid operator for two qubits: first column
/// (1,0,1,0)/sqrt(2), i.e. (|00> + |10>)/sqrt(2).
inline UnitaryMatrix example_two_qubit_bid_op(int bidder) {
    double s = M_SQRT1_2;
    std::vector<Complex> u = {
        {s, 0}, {0, 0}, {s, 0},  {0, 0}, //
        {0, 0}, {s, 0}, {0, 0},  {s, 0}, //
        {s, 0}, {0, 0}, {-s, 0}, {0, 0}, //
        {0, 0}, {s, 0}, {0, 0},  {-s, 0},
    };
    return UnitaryMatrix(std::move(u), bidder, 1);
}

} // namespace qauction::test

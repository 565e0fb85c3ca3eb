// Copyright 2026 The qpovm Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qpovm/density_op.hpp"

#include <cmath>
#include <string>

#include "qpovm/error.hpp"

namespace qpovm {

DensityOp::DensityOp(const HermitianOp &op) : op_(op) {
    const double tr = op.trace();
    if (std::abs(tr - 1.0) > kTraceTol) {
        throw Error(ErrorKind::InvalidState,
                    "trace " + std::to_string(tr) + " differs from 1");
    }
    const double lmin = min_eigenvalue(op);
    if (lmin < -kNegTol) {
        throw Error(ErrorKind::InvalidState,
                    "min eigenvalue " + std::to_string(lmin));
    }
}

DensityOp DensityOp::maximally_mixed(std::size_t dim) {
    return DensityOp((1.0 / static_cast<double>(dim)) * HermitianOp::identity(dim));
}

DensityOp DensityOp::pure(const std::vector<Complex> &psi) {
    double n2 = 0.0;
    for (const Complex &c : psi) {
        n2 += std::norm(c);
    }
    if (n2 == 0.0) {
        throw Error(ErrorKind::InvalidState, "zero state vector");
    }
    CMatrix m(psi.size());
    for (std::size_t i = 0; i < psi.size(); ++i) {
        for (std::size_t j = 0; j < psi.size(); ++j) {
            m(i, j) = psi[i] * std::conj(psi[j]) / n2;
        }
    }
    return DensityOp(HermitianOp(m));
}

} // namespace qpovm

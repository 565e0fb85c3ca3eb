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

#pragma once

#include <vector>

#include "qpovm/linalg.hpp"

namespace qpovm {

/// Hermitian operator with unit trace (1e-10) and min eigenvalue ≥ -1e-10.
class DensityOp {
  public:
    static constexpr double kTraceTol = 1e-10;
    static constexpr double kNegTol = 1e-10;

    explicit DensityOp(const HermitianOp &op);

    static DensityOp maximally_mixed(std::size_t dim);
    /// |ψ⟩⟨ψ| for a (not necessarily normalized) nonzero vector.
    static DensityOp pure(const std::vector<Complex> &psi);

    [[nodiscard]] const HermitianOp &op() const noexcept { return op_; }
    [[nodiscard]] std::size_t dim() const noexcept { return op_.dim(); }

  private:
    HermitianOp op_;
};

} // namespace qpovm

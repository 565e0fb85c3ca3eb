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

#include "qpovm/joint_table.hpp"

#include <cmath>
#include <string>

#include "qpovm/error.hpp"

namespace qpovm {

JointProbTable::JointProbTable(std::vector<double> values_a,
                               std::vector<double> values_b,
                               std::vector<std::vector<double>> p)
    : values_a_(std::move(values_a)), values_b_(std::move(values_b)),
      p_(std::move(p)) {
    if (values_a_.empty() || values_b_.empty() || p_.size() != values_a_.size()) {
        throw Error(ErrorKind::InvalidTable, "table shape mismatch");
    }
    double total = 0.0;
    for (auto &row : p_) {
        if (row.size() != values_b_.size()) {
            throw Error(ErrorKind::InvalidTable, "ragged table");
        }
        for (double &v : row) {
            if (!std::isfinite(v) || v < -kClamp) {
                throw Error(ErrorKind::NegativeProbability,
                            "table entry " + std::to_string(v));
            }
            v = v < 0.0 ? 0.0 : v;
            total += v;
        }
    }
    if (std::abs(total - 1.0) > kTotalTol) {
        throw Error(ErrorKind::InvalidTable,
                    "table sums to " + std::to_string(total));
    }
}

std::vector<double> JointProbTable::marginal_a() const {
    std::vector<double> m(rows(), 0.0);
    for (std::size_t i = 0; i < rows(); ++i) {
        for (std::size_t j = 0; j < cols(); ++j) {
            m[i] += p_[i][j];
        }
    }
    return m;
}

std::vector<double> JointProbTable::marginal_b() const {
    std::vector<double> m(cols(), 0.0);
    for (std::size_t i = 0; i < rows(); ++i) {
        for (std::size_t j = 0; j < cols(); ++j) {
            m[j] += p_[i][j];
        }
    }
    return m;
}

JointProbTable JointProbTable::transposed() const {
    std::vector<std::vector<double>> t(cols(), std::vector<double>(rows()));
    for (std::size_t i = 0; i < rows(); ++i) {
        for (std::size_t j = 0; j < cols(); ++j) {
            t[j][i] = p_[i][j];
        }
    }
    return JointProbTable(values_b_, values_a_, std::move(t));
}

} // namespace qpovm

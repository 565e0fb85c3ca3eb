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

#include "qpovm/error.hpp"

namespace qpovm {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::BadDim:
        return "BadDim";
    case ErrorKind::NotHermitian:
        return "NotHermitian";
    case ErrorKind::NotPSD:
        return "NotPSD";
    case ErrorKind::ResultDimUnsupported:
        return "ResultDimUnsupported";
    case ErrorKind::DimMismatch:
        return "DimMismatch";
    case ErrorKind::EtaOutOfRange:
        return "EtaOutOfRange";
    case ErrorKind::InvalidAxis:
        return "InvalidAxis";
    case ErrorKind::InvalidEffect:
        return "InvalidEffect";
    case ErrorKind::InvalidPovm:
        return "InvalidPovm";
    case ErrorKind::InvalidState:
        return "InvalidState";
    case ErrorKind::ZeroProbabilityBranch:
        return "ZeroProbabilityBranch";
    case ErrorKind::NegativeProbability:
        return "NegativeProbability";
    case ErrorKind::UnsupportedArity:
        return "UnsupportedArity";
    case ErrorKind::POutOfRange:
        return "POutOfRange";
    case ErrorKind::BadN:
        return "BadN";
    case ErrorKind::InvalidTable:
        return "InvalidTable";
    case ErrorKind::NonConvergence:
        return "NonConvergence";
    case ErrorKind::InternalDefect:
        return "InternalDefect";
    }
    return "Unknown";
}

} // namespace qpovm

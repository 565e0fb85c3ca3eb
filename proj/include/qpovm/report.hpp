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

/**
 * @file
 * Machine-readable command reports. The JSON layout is described by
 * docs/report.schema.json; floating-point values are rounded to 12
 * significant digits on serialization.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace qpovm {

inline constexpr const char *kVersion = "0.1.0";

using Json = nlohmann::ordered_json;

/// Rounds x to `digits` significant decimal digits.
[[nodiscard]] double round_significant(double x, int digits = 12);

struct Report {
    std::string command;
    Json inputs = Json::object();
    Json results = Json::object();
    std::string version = kVersion;
    std::optional<std::uint64_t> seed;

    [[nodiscard]] Json to_json() const;
    [[nodiscard]] static Report from_json(const Json &j);

    [[nodiscard]] std::string to_json_string() const;
    /// "key,value" header, then one record per (flattened) result key.
    [[nodiscard]] std::string to_csv() const;

    friend bool operator==(const Report &, const Report &) = default;
};

} // namespace qpovm

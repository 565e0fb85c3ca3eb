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

#include "qpovm/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace qpovm {

namespace {

Json rounded(const Json &j) {
    if (j.is_number_float()) {
        return round_significant(j.get<double>());
    }
    if (j.is_array()) {
        Json out = Json::array();
        for (const Json &e : j) {
            out.push_back(rounded(e));
        }
        return out;
    }
    if (j.is_object()) {
        Json out = Json::object();
        for (const auto &[k, v] : j.items()) {
            out[k] = rounded(v);
        }
        return out;
    }
    return j;
}

std::string format_scalar(const Json &j) {
    if (j.is_number_float()) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", j.get<double>());
        return buf;
    }
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s.find_first_of(",\"\n") == std::string::npos) {
            return s;
        }
        std::string quoted = "\"";
        for (char c : s) {
            if (c == '"') {
                quoted += '"';
            }
            quoted += c;
        }
        return quoted + "\"";
    }
    return j.dump();
}

void flatten(const std::string &prefix, const Json &j, std::ostringstream &out) {
    if (j.is_object()) {
        for (const auto &[k, v] : j.items()) {
            flatten(prefix.empty() ? k : prefix + "." + k, v, out);
        }
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            flatten(prefix + "[" + std::to_string(i) + "]", j[i], out);
        }
    } else {
        out << prefix << ',' << format_scalar(j) << '\n';
    }
}

} // namespace

double round_significant(double x, int digits) {
    if (!std::isfinite(x) || x == 0.0) {
        return x;
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return std::strtod(buf, nullptr);
}

Json Report::to_json() const {
    Json meta = Json::object();
    meta["version"] = version;
    meta["seed"] = seed ? Json(*seed) : Json(nullptr);
    Json j = Json::object();
    j["command"] = command;
    j["inputs"] = rounded(inputs);
    j["results"] = rounded(results);
    j["meta"] = meta;
    return j;
}

Report Report::from_json(const Json &j) {
    Report r;
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs");
    r.results = j.at("results");
    if (!r.inputs.is_object() || !r.results.is_object()) {
        throw std::invalid_argument("inputs and results must be objects");
    }
    const Json &meta = j.at("meta");
    r.version = meta.at("version").get<std::string>();
    if (!meta.at("seed").is_null()) {
        r.seed = meta.at("seed").get<std::uint64_t>();
    }
    return r;
}

std::string Report::to_json_string() const { return to_json().dump(2) + "\n"; }

std::string Report::to_csv() const {
    std::ostringstream out;
    out << "key,value\n";
    flatten("", rounded(results), out);
    return out.str();
}

} // namespace qpovm

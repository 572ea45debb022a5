// Copyright 2026 The oragg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "oragg/input_json.hpp"

#include "oragg/errors.hpp"

namespace oragg {

VerificationInput input_from_json(const nlohmann::json& j) {
    if (!j.is_object() || j.size() != 1) {
        throw MalformedData("verification input must be a single-key object");
    }
    if (j.contains("atom")) {
        const auto& v = j.at("atom");
        if (!v.is_string()) {
            throw MalformedData("'atom' must be a hex digest string");
        }
        const auto digest = digest_from_hex(v.get<std::string>());
        if (!digest) {
            throw MalformedData("'atom' is not a 64-character hex digest");
        }
        return VerificationInput::atom(*digest);
    }
    if (j.contains("and")) {
        const auto& v = j.at("and");
        if (!v.is_array()) {
            throw MalformedData("'and' must be an array");
        }
        std::vector<VerificationInput> children;
        children.reserve(v.size());
        for (const auto& child : v) {
            children.push_back(input_from_json(child));
        }
        return VerificationInput::and_of(std::move(children));
    }
    if (j.contains("or")) {
        const auto& v = j.at("or");
        if (!v.is_object() || !v.contains("selected") || !v.contains("input") ||
            !v.at("selected").is_number_unsigned()) {
            throw MalformedData("'or' must be {\"selected\": k, \"input\": ...}");
        }
        return VerificationInput::or_branch(v.at("selected").get<std::size_t>(),
                                            input_from_json(v.at("input")));
    }
    throw MalformedData("verification input key must be one of atom/and/or");
}

nlohmann::json input_to_json(const VerificationInput& input) {
    switch (input.kind()) {
        case VerificationInput::Kind::Atom:
            return {{"atom", to_hex(input.digest())}};
        case VerificationInput::Kind::And: {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& child : input.children()) {
                arr.push_back(input_to_json(child));
            }
            return {{"and", std::move(arr)}};
        }
        case VerificationInput::Kind::Or:
            return {{"or",
                     {{"selected", input.selected()}, {"input", input_to_json(input.inner())}}}};
    }
    throw MalformedData("unreachable input kind");
}

}  // namespace oragg

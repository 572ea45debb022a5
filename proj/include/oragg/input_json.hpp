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

#pragma once

#include <json.hpp>

#include "oragg/public_input.hpp"

namespace oragg {

// Wire shape: {"atom": "<hex digest>"} | {"and": [ ... ]}
//           | {"or": {"selected": k, "input": ...}}

/// Throws MalformedData on any shape or encoding violation.
VerificationInput input_from_json(const nlohmann::json& j);

nlohmann::json input_to_json(const VerificationInput& input);

}  // namespace oragg

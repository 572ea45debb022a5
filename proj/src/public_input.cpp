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

#include "oragg/public_input.hpp"

namespace oragg {

VerificationInput VerificationInput::atom(const Digest& digest) {
    VerificationInput v;
    v.kind_ = Kind::Atom;
    v.digest_ = digest;
    return v;
}

VerificationInput VerificationInput::and_of(std::vector<VerificationInput> children) {
    VerificationInput v;
    v.kind_ = Kind::And;
    v.children_ = std::move(children);
    return v;
}

VerificationInput VerificationInput::or_branch(std::size_t selected, VerificationInput inner) {
    VerificationInput v;
    v.kind_ = Kind::Or;
    v.selected_ = selected;
    v.children_.push_back(std::move(inner));
    return v;
}

PublicInput PublicInput::single(const Digest& digest) {
    PublicInput p;
    p.kind_ = Kind::Single;
    p.digest_ = digest;
    return p;
}

PublicInput PublicInput::tuple(std::vector<Digest> digests) {
    PublicInput p;
    p.kind_ = Kind::Tuple;
    p.digests_ = std::move(digests);
    return p;
}

PublicInput PublicInput::structured(VerificationInput input) {
    PublicInput p;
    p.kind_ = Kind::Structured;
    p.inputs_.push_back(std::move(input));
    return p;
}

}  // namespace oragg

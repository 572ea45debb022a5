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

#include <span>
#include <vector>

#include "oragg/digest.hpp"

namespace oragg {

/// Verification input mirroring a predicate tree: a digest at an atom, one
/// input per conjunct, or a selected disjunct. The selector keeps OR
/// verification one-pass; the verifier names the branch it satisfies.
class VerificationInput {
  public:
    enum class Kind : Byte { Atom = 1, And = 2, Or = 3 };

    static VerificationInput atom(const Digest& digest);
    static VerificationInput and_of(std::vector<VerificationInput> children);
    static VerificationInput or_branch(std::size_t selected, VerificationInput inner);

    Kind kind() const { return kind_; }
    const Digest& digest() const { return digest_; }                       // Atom
    std::span<const VerificationInput> children() const { return children_; }  // And
    std::size_t selected() const { return selected_; }                     // Or
    const VerificationInput& inner() const { return children_[0]; }        // Or

  private:
    VerificationInput() = default;

    Kind kind_ = Kind::Atom;
    Digest digest_{};
    std::size_t selected_ = 0;
    std::vector<VerificationInput> children_;
};

/// What the verifier supplies: a single digest, an ordered digest tuple, or
/// a structured input for nested predicates.
class PublicInput {
  public:
    enum class Kind : Byte { Single = 1, Tuple = 2, Structured = 3 };

    static PublicInput single(const Digest& digest);
    static PublicInput tuple(std::vector<Digest> digests);
    static PublicInput structured(VerificationInput input);

    Kind kind() const { return kind_; }
    const Digest& digest() const { return digest_; }
    std::span<const Digest> digests() const { return digests_; }
    const VerificationInput& input() const { return inputs_[0]; }

  private:
    PublicInput() = default;

    Kind kind_ = Kind::Single;
    Digest digest_{};
    std::vector<Digest> digests_;
    std::vector<VerificationInput> inputs_;
};

}  // namespace oragg

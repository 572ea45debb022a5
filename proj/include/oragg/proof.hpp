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

#include "oragg/digest.hpp"

namespace oragg {

enum class BackendId : Byte {
    // Designated-verifier backend: the verifier shares the key and the
    // statement transcript with the prover infrastructure.
    IdealTranscript = 1,
    // Leaf-specific backend carrying a Merkle path in aux, checked against
    // a trusted root.
    PathEmbedded = 2,
};

enum class ProofKind : Byte {
    Leaf = 1,
    Or = 2,
    And = 3,
    Expr = 4,
    Embedded = 5,
};

/// ASCII label mixed into the authenticator; binds the kind byte to the tag.
BytesView kind_label(ProofKind kind);

/// Certified object with a constant-size core. The core (backend id, kind,
/// descriptor, authenticator) is 66 bytes for every proof regardless of how
/// many leaves the certified predicate covers; aux is empty for the
/// transcript backend and holds a serialized Merkle path for the embedded
/// backend.
struct Proof {
    BackendId backend_id = BackendId::IdealTranscript;
    ProofKind kind = ProofKind::Leaf;
    Digest descriptor{};      // digest of the canonical statement encoding
    Digest authenticator{};   // 32-byte tag over (kind label || descriptor [|| aux])
    Bytes aux;

    friend bool operator==(const Proof&, const Proof&) = default;
};

inline constexpr std::size_t kProofCoreSize = 2 + kDigestSize + kDigestSize;

/// Byte size of the constant core; aux is accounted separately.
inline std::size_t proof_core_size(const Proof&) {
    return kProofCoreSize;
}

}  // namespace oragg

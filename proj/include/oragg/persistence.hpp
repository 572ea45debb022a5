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

#include <memory>

#include "oragg/backend.hpp"
#include "oragg/merkle.hpp"
#include "oragg/proof.hpp"

namespace oragg {

// Single-object binary formats, versioned, all multi-byte integers
// big-endian. Every save/load pair is a bijection on the valid-value set,
// and loading re-validates the value's structural invariants.
//
//   proof       "OAGP" 0x01 | u8 backend | u8 kind | descriptor | tag
//               | u32 aux length | aux
//   tree        "MTRE" 0x01 | u8 depth | u32 original leaf count
//               | levels 0..depth as raw digests, leaves first
//   transcript  "OTRS" 0x01 | u32 entry count
//               | entries of (descriptor | u32 length | statement encoding)

Bytes save_proof(const Proof& proof);
Proof load_proof(BytesView bytes);

Bytes save_tree(const MerkleTree& tree);
MerkleTree load_tree(BytesView bytes);

Bytes save_transcript(const Transcript& transcript);
std::shared_ptr<Transcript> load_transcript(BytesView bytes);

/// Exact byte length save_transcript would produce, without materializing.
std::uint64_t transcript_serialized_size(const Transcript& transcript);

}  // namespace oragg

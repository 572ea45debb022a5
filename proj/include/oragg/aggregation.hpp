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

#include "oragg/backend.hpp"
#include "oragg/merkle.hpp"

namespace oragg {

/// Conjunction of the given proofs, in order. The aggregate verifies
/// against a digest tuple iff every constituent verifies against its slot.
Proof aggregate_and(ProvingContext& ctx, std::span<const Proof> proofs);

/// Disjunction of two proofs. The aggregate verifies against a digest iff
/// either constituent does.
Proof aggregate_or(ProvingContext& ctx, const Proof& left, const Proof& right);

/// Left fold of pairwise OR aggregation; one proof is returned unchanged.
Proof aggregate_or_many(ProvingContext& ctx, std::span<const Proof> proofs);

/// Proves each original block's leaf, then OR-aggregates pairwise up the
/// tree's sibling structure. PAD positions carry no proof: a parent with
/// one present child inherits it unchanged. The returned root proof
/// verifies with any single original leaf digest and nothing else, and its
/// serialized size does not depend on the leaf count.
Proof build_universal_proof(ProvingContext& ctx, const MerkleTree& tree,
                            std::span<const DataBlock> blocks);

/// Leaf-specific proof with the leaf's Merkle path embedded in aux; the
/// authenticator binds the path to the leaf's atom descriptor.
Proof build_embedded_proof(ProvingContext& ctx, const MerkleTree& tree, std::size_t index);

/// True iff the authenticator recomputes, the aux path folds `leaf` to the
/// context's trusted root, and `leaf` matches the descriptor's atom.
/// Throws MalformedAux when aux fails to parse.
bool verify_embedded(const VerifyingContext& vctx, const Proof& proof, const Digest& leaf);

/// Baseline verifier for an AND aggregate over a full leaf set: recomputes
/// the Merkle root from every leaf digest and compares it to `tree_root`,
/// then checks the aggregate against the full tuple.
bool naive_and_inclusion_verify(const Digest& tree_root, std::span<const Digest> all_leaf_digests,
                                const Proof& proof, const VerifyingContext& vctx);

// Aux wire format: u8 depth, then per level (leaf level first) a record of
// u8 direction (0x00 sibling right, 0x01 sibling left) and the 32-byte
// sibling digest.
Bytes serialize_path(const MerklePath& path);
MerklePath parse_path(BytesView bytes);  // throws MalformedAux

}  // namespace oragg

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

#include "oragg/aggregation.hpp"

#include <optional>

namespace oragg {

namespace {

// Resolves a constituent's statement, enforcing the transcript-backend
// preconditions shared by every aggregation entry point.
StatementPtr resolve_constituent(const ProvingContext& ctx, const Proof& proof) {
    if (proof.backend_id != BackendId::IdealTranscript) {
        throw BackendMismatch("aggregation requires transcript-backend constituents");
    }
    StatementPtr statement = ctx.transcript().find(proof.descriptor);
    if (!statement) {
        throw UnknownConstituent("constituent descriptor " + to_hex(proof.descriptor) +
                                 " not present in transcript");
    }
    return statement;
}

Proof emit(ProvingContext& ctx, ProofKind kind, StatementPtr statement) {
    ctx.transcript().record(statement);
    Proof proof;
    proof.backend_id = BackendId::IdealTranscript;
    proof.kind = kind;
    proof.descriptor = statement->descriptor();
    proof.authenticator = make_authenticator(ctx.secret_key(), kind, proof.descriptor);
    return proof;
}

}  // namespace

Proof aggregate_and(ProvingContext& ctx, std::span<const Proof> proofs) {
    if (proofs.empty()) {
        throw EmptyAggregation("AND aggregation over zero proofs");
    }
    std::vector<StatementPtr> children;
    children.reserve(proofs.size());
    for (const Proof& p : proofs) {
        children.push_back(resolve_constituent(ctx, p));
    }
    return emit(ctx, ProofKind::And, Statement::all_of(std::move(children)));
}

Proof aggregate_or(ProvingContext& ctx, const Proof& left, const Proof& right) {
    std::vector<StatementPtr> children;
    children.reserve(2);
    children.push_back(resolve_constituent(ctx, left));
    children.push_back(resolve_constituent(ctx, right));
    return emit(ctx, ProofKind::Or, Statement::any_of(std::move(children)));
}

Proof aggregate_or_many(ProvingContext& ctx, std::span<const Proof> proofs) {
    if (proofs.empty()) {
        throw EmptyAggregation("OR aggregation over zero proofs");
    }
    Proof acc = proofs[0];
    for (std::size_t i = 1; i < proofs.size(); ++i) {
        acc = aggregate_or(ctx, acc, proofs[i]);
    }
    return acc;
}

Proof build_universal_proof(ProvingContext& ctx, const MerkleTree& tree,
                            std::span<const DataBlock> blocks) {
    if (blocks.size() != tree.original_leaf_count()) {
        throw TreeMismatch("block count " + std::to_string(blocks.size()) +
                           " does not match tree's original leaf count " +
                           std::to_string(tree.original_leaf_count()));
    }
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (leaf_hash(blocks[i]) != tree.leaf(i)) {
            throw TreeMismatch("block " + std::to_string(i) + " does not hash to tree leaf");
        }
    }

    std::vector<std::optional<Proof>> level;
    level.reserve(tree.leaf_count());
    for (const DataBlock& block : blocks) {
        level.emplace_back(prove_leaf(ctx, block));
    }
    level.resize(tree.leaf_count());  // PAD positions carry no proof

    while (level.size() > 1) {
        std::vector<std::optional<Proof>> parents;
        parents.reserve(level.size() / 2);
        for (std::size_t j = 0; j + 1 < level.size(); j += 2) {
            auto& left = level[j];
            auto& right = level[j + 1];
            if (left && right) {
                parents.emplace_back(aggregate_or(ctx, *left, *right));
            } else if (left) {
                parents.emplace_back(std::move(left));
            } else if (right) {
                parents.emplace_back(std::move(right));
            } else {
                parents.emplace_back(std::nullopt);
            }
        }
        level = std::move(parents);
    }
    return *level[0];
}

Bytes serialize_path(const MerklePath& path) {
    if (path.steps.size() > 255) {
        throw InvalidParams("path depth exceeds the serializable bound");
    }
    Bytes out;
    out.reserve(1 + path.steps.size() * (1 + kDigestSize));
    out.push_back(static_cast<Byte>(path.steps.size()));
    for (const PathStep& step : path.steps) {
        out.push_back(step.sibling_on_left ? Byte{0x01} : Byte{0x00});
        out.insert(out.end(), step.sibling.bytes.begin(), step.sibling.bytes.end());
    }
    return out;
}

MerklePath parse_path(BytesView bytes) {
    if (bytes.empty()) {
        throw MalformedAux("empty path payload");
    }
    const std::size_t depth = bytes[0];
    if (bytes.size() != 1 + depth * (1 + kDigestSize)) {
        throw MalformedAux("path payload length does not match declared depth");
    }
    MerklePath path;
    path.steps.reserve(depth);
    std::size_t off = 1;
    for (std::size_t level = 0; level < depth; ++level) {
        const Byte direction = bytes[off++];
        if (direction > 0x01) {
            throw MalformedAux("invalid direction flag");
        }
        PathStep step;
        step.sibling_on_left = direction == 0x01;
        std::copy_n(bytes.begin() + static_cast<std::ptrdiff_t>(off), kDigestSize,
                    step.sibling.bytes.begin());
        off += kDigestSize;
        if (step.sibling_on_left) {
            path.leaf_index |= std::uint64_t{1} << level;
        }
        path.steps.push_back(step);
    }
    return path;
}

Proof build_embedded_proof(ProvingContext& ctx, const MerkleTree& tree, std::size_t index) {
    if (index >= tree.original_leaf_count()) {
        throw IndexOutOfRange("leaf index " + std::to_string(index) +
                              " out of range for " +
                              std::to_string(tree.original_leaf_count()) + " original leaves");
    }
    Proof proof;
    proof.backend_id = BackendId::PathEmbedded;
    proof.kind = ProofKind::Embedded;
    proof.descriptor = Statement::atom(tree.leaf(index))->descriptor();
    proof.aux = serialize_path(gen_path(tree, index));
    proof.authenticator = make_authenticator(ctx.secret_key(), ProofKind::Embedded,
                                             proof.descriptor, BytesView{proof.aux});
    return proof;
}

bool verify_embedded(const VerifyingContext& vctx, const Proof& proof, const Digest& leaf) {
    if (vctx.backend_id() != BackendId::PathEmbedded ||
        proof.backend_id != BackendId::PathEmbedded) {
        throw BackendMismatch("embedded verification requires the path-embedded backend");
    }
    const MerklePath path = parse_path(BytesView{proof.aux});
    const Digest expected = make_authenticator(vctx.verification_key(), proof.kind,
                                               proof.descriptor, BytesView{proof.aux});
    if (!tags_equal(expected, proof.authenticator)) {
        return false;
    }
    if (proof.descriptor != Statement::atom(leaf)->descriptor()) {
        return false;
    }
    return verify_path(vctx.trusted_root(), leaf, path);
}

bool naive_and_inclusion_verify(const Digest& tree_root, std::span<const Digest> all_leaf_digests,
                                const Proof& proof, const VerifyingContext& vctx) {
    const std::size_t n = all_leaf_digests.size();
    if (n == 0 || (n & (n - 1)) != 0) {
        throw ArityMismatch("leaf digest list length must be a non-zero power of two");
    }
    if (const StatementPtr statement = vctx.transcript().find(proof.descriptor)) {
        if (statement->kind() != Statement::Kind::AllOf ||
            statement->children().size() != n) {
            throw ArityMismatch("digest list does not match the aggregate's arity");
        }
    }

    std::vector<Digest> level(all_leaf_digests.begin(), all_leaf_digests.end());
    while (level.size() > 1) {
        std::vector<Digest> above;
        above.reserve(level.size() / 2);
        for (std::size_t j = 0; j + 1 < level.size(); j += 2) {
            above.push_back(internal_hash(level[j], level[j + 1]));
        }
        level = std::move(above);
    }
    if (level[0] != tree_root) {
        return false;
    }
    return verify(vctx, proof,
                  PublicInput::tuple({all_leaf_digests.begin(), all_leaf_digests.end()}));
}

}  // namespace oragg

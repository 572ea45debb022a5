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

#include "oragg/backend.hpp"

#include "oragg/aggregation.hpp"
#include "oragg/merkle.hpp"

namespace oragg {

namespace {

constexpr std::string_view kKeyInfo = "or-agg/key/v1";

}  // namespace

BytesView kind_label(ProofKind kind) {
    switch (kind) {
        case ProofKind::Leaf:
            return as_bytes("leaf");
        case ProofKind::Or:
            return as_bytes("or");
        case ProofKind::And:
            return as_bytes("and");
        case ProofKind::Expr:
            return as_bytes("expr");
        case ProofKind::Embedded:
            return as_bytes("embedded");
    }
    return as_bytes("invalid");
}

void Transcript::record(const StatementPtr& statement) {
    const Digest& descriptor = statement->descriptor();
    std::lock_guard lock(mutex_);
    auto [it, inserted] = by_descriptor_.try_emplace(descriptor, statement);
    if (inserted) {
        order_.push_back(statement);
    }
}

StatementPtr Transcript::find(const Digest& descriptor) const {
    std::lock_guard lock(mutex_);
    auto it = by_descriptor_.find(descriptor);
    return it == by_descriptor_.end() ? nullptr : it->second;
}

bool Transcript::contains(const Digest& descriptor) const {
    std::lock_guard lock(mutex_);
    return by_descriptor_.contains(descriptor);
}

std::size_t Transcript::size() const {
    std::lock_guard lock(mutex_);
    return order_.size();
}

std::vector<StatementPtr> Transcript::entries() const {
    std::lock_guard lock(mutex_);
    return order_;
}

VerifyingContext VerifyingContext::ideal(const Key& verification_key,
                                         std::shared_ptr<const Transcript> transcript) {
    VerifyingContext v;
    v.backend_id_ = BackendId::IdealTranscript;
    v.verification_key_ = verification_key;
    v.transcript_ = std::move(transcript);
    return v;
}

VerifyingContext VerifyingContext::embedded(const Key& verification_key,
                                            const Digest& trusted_root) {
    VerifyingContext v;
    v.backend_id_ = BackendId::PathEmbedded;
    v.verification_key_ = verification_key;
    v.trusted_root_ = trusted_root;
    return v;
}

const Transcript& VerifyingContext::transcript() const {
    if (!transcript_) {
        throw BackendMismatch("verifying context has no transcript");
    }
    return *transcript_;
}

Key derive_secret_key(const Key& seed) {
    const Digest d = hmac_sha256(seed, {as_bytes(kKeyInfo)});
    return d.bytes;
}

std::pair<ProvingContext, VerifyingContext> setup(const Key& seed) {
    const Key key = derive_secret_key(seed);
    auto transcript = std::make_shared<Transcript>();
    ProvingContext prover(key, transcript);
    VerifyingContext verifier = VerifyingContext::ideal(key, transcript);
    return {std::move(prover), std::move(verifier)};
}

ProvingContext proving_context(const Key& seed, std::shared_ptr<Transcript> transcript) {
    return ProvingContext(derive_secret_key(seed), std::move(transcript));
}

VerifyingContext embedded_verifier(const Key& seed, const Digest& trusted_root) {
    return VerifyingContext::embedded(derive_secret_key(seed), trusted_root);
}

Digest make_authenticator(const Key& key, ProofKind kind, const Digest& descriptor,
                          BytesView aux) {
    return hmac_sha256(key, {kind_label(kind), as_bytes(descriptor), aux});
}

Proof prove_leaf(ProvingContext& ctx, const DataBlock& block) {
    StatementPtr statement = Statement::atom(leaf_hash(block));
    ctx.transcript().record(statement);
    Proof proof;
    proof.backend_id = BackendId::IdealTranscript;
    proof.kind = ProofKind::Leaf;
    proof.descriptor = statement->descriptor();
    proof.authenticator = make_authenticator(ctx.secret_key(), ProofKind::Leaf, proof.descriptor);
    return proof;
}

bool holds(const Statement& statement, const PublicInput& input) {
    switch (input.kind()) {
        case PublicInput::Kind::Single: {
            const Digest& h = input.digest();
            switch (statement.kind()) {
                case Statement::Kind::Atom:
                    return statement.atom_digest() == h;
                case Statement::Kind::AnyOf: {
                    // Iterative DFS, descending into the first child and
                    // stacking the rest; disjunction trees over large leaf
                    // sets are big in node count, not in depth.
                    std::vector<const Statement*> stack;
                    stack.reserve(64);
                    const Statement* s = &statement;
                    while (true) {
                        switch (s->kind()) {
                            case Statement::Kind::Atom:
                                if (s->atom_digest() == h) {
                                    return true;
                                }
                                break;
                            case Statement::Kind::AnyOf: {
                                const auto kids = s->children();
                                for (std::size_t i = kids.size(); i > 1; --i) {
                                    stack.push_back(kids[i - 1].get());
                                }
                                s = kids[0].get();
                                continue;
                            }
                            case Statement::Kind::AllOf:
                                // A conjunction is not satisfiable by one digest.
                                break;
                        }
                        if (stack.empty()) {
                            return false;
                        }
                        s = stack.back();
                        stack.pop_back();
                    }
                }
                case Statement::Kind::AllOf:
                    return false;
            }
            return false;
        }
        case PublicInput::Kind::Tuple: {
            if (statement.kind() != Statement::Kind::AllOf) {
                return false;
            }
            const auto digests = input.digests();
            const auto children = statement.children();
            if (digests.size() != children.size()) {
                return false;
            }
            for (std::size_t i = 0; i < children.size(); ++i) {
                if (!holds(*children[i], PublicInput::single(digests[i]))) {
                    return false;
                }
            }
            return true;
        }
        case PublicInput::Kind::Structured: {
            const VerificationInput& vi = input.input();
            // A digest at an expression atom means single-digest
            // satisfaction of whatever statement is bound there; a leaf
            // binding degenerates to plain digest equality.
            if (vi.kind() == VerificationInput::Kind::Atom) {
                return holds(statement, PublicInput::single(vi.digest()));
            }
            switch (statement.kind()) {
                case Statement::Kind::Atom:
                    return false;
                case Statement::Kind::AllOf: {
                    if (vi.kind() != VerificationInput::Kind::And ||
                        vi.children().size() != statement.children().size()) {
                        return false;
                    }
                    for (std::size_t i = 0; i < vi.children().size(); ++i) {
                        if (!holds(*statement.children()[i],
                                   PublicInput::structured(vi.children()[i]))) {
                            return false;
                        }
                    }
                    return true;
                }
                case Statement::Kind::AnyOf:
                    return vi.kind() == VerificationInput::Kind::Or &&
                           vi.selected() < statement.children().size() &&
                           holds(*statement.children()[vi.selected()],
                                 PublicInput::structured(vi.inner()));
            }
            return false;
        }
    }
    return false;
}

bool verify(const VerifyingContext& vctx, const Proof& proof, const PublicInput& input) {
    if (proof.backend_id != vctx.backend_id()) {
        throw BackendMismatch("proof backend does not match verifying context");
    }
    if (proof.backend_id == BackendId::PathEmbedded) {
        if (input.kind() != PublicInput::Kind::Single) {
            return false;
        }
        return verify_embedded(vctx, proof, input.digest());
    }
    if (!proof.aux.empty()) {
        return false;
    }
    const Digest expected =
        make_authenticator(vctx.verification_key(), proof.kind, proof.descriptor);
    if (!tags_equal(expected, proof.authenticator)) {
        return false;
    }
    const StatementPtr statement = vctx.transcript().find(proof.descriptor);
    if (!statement) {
        return false;
    }
    return holds(*statement, input);
}

}  // namespace oragg

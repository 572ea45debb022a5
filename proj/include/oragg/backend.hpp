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
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "oragg/digest.hpp"
#include "oragg/errors.hpp"
#include "oragg/proof.hpp"
#include "oragg/public_input.hpp"
#include "oragg/statement.hpp"

namespace oragg {

/// Append-only registry mapping predicate descriptors to statements. Plays
/// the role of a proof system's verification key: shared between the prover
/// and the designated verifier, reusable across any number of proofs.
/// Appends are atomic and idempotent per descriptor.
class Transcript {
  public:
    Transcript() = default;
    Transcript(const Transcript&) = delete;
    Transcript& operator=(const Transcript&) = delete;

    void record(const StatementPtr& statement);
    StatementPtr find(const Digest& descriptor) const;
    bool contains(const Digest& descriptor) const;
    std::size_t size() const;

    /// Snapshot in insertion order.
    std::vector<StatementPtr> entries() const;

  private:
    mutable std::mutex mutex_;
    std::vector<StatementPtr> order_;
    std::unordered_map<Digest, StatementPtr, DigestHash> by_descriptor_;
};

class ProvingContext {
  public:
    const Key& secret_key() const { return secret_key_; }
    Transcript& transcript() { return *transcript_; }
    const Transcript& transcript() const { return *transcript_; }
    const std::shared_ptr<Transcript>& transcript_ptr() const { return transcript_; }

  private:
    ProvingContext(const Key& key, std::shared_ptr<Transcript> transcript)
        : secret_key_(key), transcript_(std::move(transcript)) {}

    friend std::pair<ProvingContext, class VerifyingContext> setup(const Key& seed);
    friend ProvingContext proving_context(const Key& seed, std::shared_ptr<Transcript> transcript);

    Key secret_key_;
    std::shared_ptr<Transcript> transcript_;
};

/// Read-only verification side. For the transcript backend it holds the
/// shared key and transcript; for the embedded backend it holds the key and
/// the trusted root digest.
class VerifyingContext {
  public:
    static VerifyingContext ideal(const Key& verification_key,
                                  std::shared_ptr<const Transcript> transcript);
    static VerifyingContext embedded(const Key& verification_key, const Digest& trusted_root);

    BackendId backend_id() const { return backend_id_; }
    const Key& verification_key() const { return verification_key_; }
    const Transcript& transcript() const;
    const Digest& trusted_root() const { return trusted_root_; }

  private:
    VerifyingContext() = default;

    BackendId backend_id_ = BackendId::IdealTranscript;
    Key verification_key_{};
    std::shared_ptr<const Transcript> transcript_;
    Digest trusted_root_{};
};

Key derive_secret_key(const Key& seed);

/// Deterministic prover/verifier pair sharing one key and one transcript.
std::pair<ProvingContext, VerifyingContext> setup(const Key& seed);

/// Prover context over an existing transcript (e.g. one loaded from disk).
ProvingContext proving_context(const Key& seed, std::shared_ptr<Transcript> transcript);

/// Verifier for path-embedded proofs anchored at a trusted root.
VerifyingContext embedded_verifier(const Key& seed, const Digest& trusted_root);

/// Tag over (kind label || descriptor || aux) under the shared key.
Digest make_authenticator(const Key& key, ProofKind kind, const Digest& descriptor,
                          BytesView aux = {});

/// Proof that a leaf digest is the hash of `block`. Registers the atom
/// statement in the transcript; deterministic, so repeated calls yield
/// byte-identical proofs.
Proof prove_leaf(ProvingContext& ctx, const DataBlock& block);

/// Semantic satisfaction of a statement by a public input. Combinations the
/// statement does not define (e.g. a tuple against an atom) are false.
bool holds(const Statement& statement, const PublicInput& input);

/// Verdict for a proof against an input. False unless the authenticator
/// recomputes, the descriptor resolves, and the resolved statement holds.
/// Throws BackendMismatch when the proof and context disagree on backend.
bool verify(const VerifyingContext& vctx, const Proof& proof, const PublicInput& input);

}  // namespace oragg

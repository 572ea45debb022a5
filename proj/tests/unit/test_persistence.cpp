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

#include <doctest.h>

#include "oragg/aggregation.hpp"
#include "oragg/persistence.hpp"
#include "test_util.hpp"

using namespace oragg;
using oragg::test::block;

namespace {

struct Fixture {
    Fixture() : contexts(setup(Key{})) {
        std::mt19937_64 rng(101);
        blocks = test::random_blocks(rng, 16);
        tree.emplace(build_tree(blocks));
        universal.emplace(build_universal_proof(contexts.first, *tree, blocks));
        embedded.emplace(build_embedded_proof(contexts.first, *tree, 7));
    }

    std::pair<ProvingContext, VerifyingContext> contexts;
    std::vector<DataBlock> blocks;
    std::optional<MerkleTree> tree;
    std::optional<Proof> universal;
    std::optional<Proof> embedded;
};

}  // namespace

TEST_CASE("proof round trip is byte-identical for both backends") {
    Fixture f;
    for (const Proof& proof : {*f.universal, *f.embedded}) {
        const Bytes bytes = save_proof(proof);
        const Proof back = load_proof(BytesView{bytes});
        CHECK(back == proof);
        CHECK(save_proof(back) == bytes);
    }
}

TEST_CASE("proof loading rejects malformed files") {
    Fixture f;
    const Bytes good = save_proof(*f.universal);

    Bytes bad_magic = good;
    bad_magic[0] ^= 0xff;
    CHECK_THROWS_AS(load_proof(BytesView{bad_magic}), BadMagic);

    Bytes bad_version = good;
    bad_version[4] = 0x02;
    CHECK_THROWS_AS(load_proof(BytesView{bad_version}), UnsupportedVersion);

    Bytes short_file = good;
    short_file.resize(short_file.size() - 1);
    CHECK_THROWS_AS(load_proof(BytesView{short_file}),
                    Truncated);  // declared aux exceeds remaining bytes? no aux: core cut short

    // Declared aux length exceeding the remaining bytes.
    Bytes lying = good;
    lying[lying.size() - 1] = 0x05;  // aux length 5 with no aux bytes following
    CHECK_THROWS_AS(load_proof(BytesView{lying}), Truncated);

    Bytes trailing = good;
    trailing.push_back(0x00);
    CHECK_THROWS_AS(load_proof(BytesView{trailing}), MalformedData);

    Bytes bad_backend = good;
    bad_backend[5] = 0x09;
    CHECK_THROWS_AS(load_proof(BytesView{bad_backend}), MalformedData);

    Bytes bad_kind = good;
    bad_kind[6] = 0x00;
    CHECK_THROWS_AS(load_proof(BytesView{bad_kind}), MalformedData);

    // Transcript-backend proofs must not carry aux.
    Bytes with_aux = good;
    with_aux[with_aux.size() - 1] = 0x01;
    with_aux.push_back(0xaa);
    CHECK_THROWS_AS(load_proof(BytesView{with_aux}), MalformedData);

    // Embedded aux length must match its declared depth.
    const Bytes embedded_good = save_proof(*f.embedded);
    Bytes embedded_short = embedded_good;
    embedded_short.pop_back();
    embedded_short[4 + 1 + 66 + 3] -= 1;  // shrink declared aux length accordingly
    CHECK_THROWS_AS(load_proof(BytesView{embedded_short}), MalformedData);
}

TEST_CASE("tree round trip preserves every level and re-validates on load") {
    Fixture f;
    const Bytes bytes = save_tree(*f.tree);
    const MerkleTree back = load_tree(BytesView{bytes});
    CHECK(back.levels() == f.tree->levels());
    CHECK(back.original_leaf_count() == f.tree->original_leaf_count());
    CHECK(save_tree(back) == bytes);
    CHECK(root(back) == root(*f.tree));

    Bytes corrupted = bytes;
    corrupted[10 + 5] ^= 0x01;  // inside the first leaf digest
    CHECK_THROWS_AS(load_tree(BytesView{corrupted}), IntegrityError);

    Bytes truncated = bytes;
    truncated.resize(truncated.size() - 1);
    CHECK_THROWS_AS(load_tree(BytesView{truncated}), Truncated);

    Bytes wrong_magic = bytes;
    wrong_magic[1] = 'X';
    CHECK_THROWS_AS(load_tree(BytesView{wrong_magic}), BadMagic);
}

TEST_CASE("a padded tree survives the round trip") {
    std::vector<DataBlock> blocks{block("a"), block("b"), block("c")};
    const MerkleTree tree = build_tree(blocks);
    const MerkleTree back = load_tree(BytesView{save_tree(tree)});
    CHECK(back.original_leaf_count() == 3);
    CHECK(back.leaf(3) == pad_leaf_digest());

    // A claimed original count that exposes a non-PAD tail is rejected.
    Bytes bytes = save_tree(tree);
    bytes[9] = 2;  // original_leaf_count u32 low byte
    CHECK_THROWS_AS(load_tree(BytesView{bytes}), IntegrityError);
}

TEST_CASE("transcript round trip is byte-identical and order-preserving") {
    Fixture f;
    const Transcript& transcript = f.contexts.first.transcript();
    const Bytes bytes = save_transcript(transcript);
    CHECK(bytes.size() == transcript_serialized_size(transcript));

    const auto back = load_transcript(BytesView{bytes});
    CHECK(back->size() == transcript.size());
    CHECK(save_transcript(*back) == bytes);

    // Every statement resolves to an equal descriptor after the round trip.
    for (const StatementPtr& statement : transcript.entries()) {
        const StatementPtr loaded = back->find(statement->descriptor());
        REQUIRE(loaded != nullptr);
        CHECK(loaded->encode() == statement->encode());
    }
}

TEST_CASE("transcript loading rejects structural corruption") {
    Fixture f;
    const Bytes bytes = save_transcript(f.contexts.first.transcript());

    Bytes bad_magic = bytes;
    bad_magic[0] = 'X';
    CHECK_THROWS_AS(load_transcript(BytesView{bad_magic}), BadMagic);

    Bytes truncated = bytes;
    truncated.resize(truncated.size() / 2);
    CHECK_THROWS_AS(load_transcript(BytesView{truncated}), Truncated);

    // Corrupting a stored descriptor breaks the descriptor/encoding bond.
    Bytes mismatched = bytes;
    mismatched[9 + 3] ^= 0x01;  // first entry's descriptor
    CHECK_THROWS_AS(load_transcript(BytesView{mismatched}), IntegrityError);
}

TEST_CASE("duplicate transcript entries are rejected") {
    auto [prover, verifier] = setup(Key{});
    (void)prove_leaf(prover, block("a"));
    const Bytes bytes = save_transcript(prover.transcript());

    // Duplicate the single entry by hand: header, count 2, entry twice.
    const std::size_t header = 4 + 1;
    Bytes doubled(bytes.begin(), bytes.begin() + static_cast<std::ptrdiff_t>(header));
    doubled.insert(doubled.end(), {0, 0, 0, 2});
    const BytesView entry(bytes.data() + header + 4, bytes.size() - header - 4);
    doubled.insert(doubled.end(), entry.begin(), entry.end());
    doubled.insert(doubled.end(), entry.begin(), entry.end());
    CHECK_THROWS_AS(load_transcript(BytesView{doubled}), DuplicateDescriptor);
}

TEST_CASE("composite entries must reference earlier entries") {
    auto [prover, verifier] = setup(Key{});
    const Proof pa = prove_leaf(prover, block("a"));
    const Proof pb = prove_leaf(prover, block("b"));
    (void)aggregate_or(prover, pa, pb);
    const Bytes bytes = save_transcript(prover.transcript());

    // Keep only the composite entry: its children no longer resolve.
    const auto all = prover.transcript().entries();
    auto lonely = std::make_shared<Transcript>();
    lonely->record(all.back());
    CHECK_THROWS_AS(load_transcript(BytesView{save_transcript(*lonely)}), IntegrityError);
    CHECK(load_transcript(BytesView{bytes})->size() == 3);
}

TEST_CASE("loaders survive arbitrary corruption") {
    Fixture f;
    const Bytes proof_bytes = save_proof(*f.universal);
    const Bytes embedded_bytes = save_proof(*f.embedded);
    const Bytes tree_bytes = save_tree(*f.tree);
    const Bytes transcript_bytes = save_transcript(f.contexts.first.transcript());

    std::mt19937_64 rng(107);
    auto batter = [&rng](const Bytes& original) {
        Bytes mutated = original;
        switch (rng() % 3) {
            case 0:  // flip a few bytes
                for (int i = 0; i < 3; ++i) {
                    mutated[rng() % mutated.size()] ^= static_cast<Byte>(1 + rng() % 255);
                }
                break;
            case 1:  // truncate
                mutated.resize(rng() % mutated.size());
                break;
            default:  // append junk
                for (int i = 0; i < 5; ++i) {
                    mutated.push_back(static_cast<Byte>(rng()));
                }
                break;
        }
        return mutated;
    };

    // Every mutation either still loads or raises a library error; nothing
    // else may escape and no invariant-violating value may be produced.
    for (int trial = 0; trial < 400; ++trial) {
        try {
            (void)load_proof(BytesView{batter(rng() % 2 == 0 ? proof_bytes : embedded_bytes)});
        } catch (const Error&) {
        }
        try {
            (void)load_tree(BytesView{batter(tree_bytes)});
        } catch (const Error&) {
        }
        try {
            (void)load_transcript(BytesView{batter(transcript_bytes)});
        } catch (const Error&) {
        }
    }
}

TEST_CASE("random proofs round-trip through bytes") {
    std::mt19937_64 rng(103);
    for (int i = 0; i < 200; ++i) {
        Proof proof;
        proof.backend_id = BackendId::IdealTranscript;
        proof.kind = static_cast<ProofKind>(1 + rng() % 4);
        proof.descriptor = test::random_digest(rng);
        proof.authenticator = test::random_digest(rng);
        const Proof back = load_proof(BytesView{save_proof(proof)});
        CHECK(back == proof);
    }
}

TEST_CASE("random trees round-trip through bytes") {
    std::mt19937_64 rng(109);
    for (int i = 0; i < 30; ++i) {
        const std::size_t count = 1 + rng() % 200;
        const MerkleTree tree = build_tree(test::random_blocks(rng, count));
        const Bytes bytes = save_tree(tree);
        const MerkleTree back = load_tree(BytesView{bytes});
        CHECK(back.levels() == tree.levels());
        CHECK(back.original_leaf_count() == tree.original_leaf_count());
        CHECK(save_tree(back) == bytes);
    }
}

TEST_CASE("random transcripts round-trip through bytes") {
    std::mt19937_64 rng(113);
    for (int i = 0; i < 20; ++i) {
        auto [prover, verifier] = setup(Key{});
        std::vector<Proof> pool;
        for (int p = 0; p < 8; ++p) {
            pool.push_back(prove_leaf(prover, test::random_block(rng)));
        }
        for (int round = 0; round < 12; ++round) {
            if (rng() % 2 == 0) {
                pool.push_back(aggregate_or(prover, pool[rng() % pool.size()],
                                            pool[rng() % pool.size()]));
            } else {
                const std::size_t arity = 1 + rng() % 3;
                std::vector<Proof> parts;
                for (std::size_t j = 0; j < arity; ++j) {
                    parts.push_back(pool[rng() % pool.size()]);
                }
                pool.push_back(aggregate_and(prover, parts));
            }
        }
        const Bytes bytes = save_transcript(prover.transcript());
        const auto back = load_transcript(BytesView{bytes});
        CHECK(save_transcript(*back) == bytes);
        CHECK(back->size() == prover.transcript().size());
    }
}

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

#include <set>

#include "oragg/aggregation.hpp"
#include "oragg/persistence.hpp"
#include "test_util.hpp"

using namespace oragg;
using oragg::test::block;

namespace {

std::vector<DataBlock> named_blocks(std::initializer_list<const char*> names) {
    std::vector<DataBlock> out;
    for (const char* name : names) {
        out.push_back(block(name));
    }
    return out;
}

}  // namespace

TEST_CASE("AND aggregation verifies tuples slotwise") {
    auto [prover, verifier] = setup(Key{});
    const Digest ha = leaf_hash(block("a"));
    const Digest hb = leaf_hash(block("b"));
    const std::vector<Proof> proofs{prove_leaf(prover, block("a")),
                                    prove_leaf(prover, block("b"))};
    const Proof both = aggregate_and(prover, proofs);
    CHECK(both.kind == ProofKind::And);
    CHECK(verify(verifier, both, PublicInput::tuple({ha, hb})));
    CHECK(!verify(verifier, both, PublicInput::tuple({ha, leaf_hash(block("x"))})));
    CHECK(!verify(verifier, both, PublicInput::tuple({hb, ha})));  // order matters
    CHECK(!verify(verifier, both, PublicInput::tuple({ha})));
    CHECK(!verify(verifier, both, PublicInput::single(ha)));
}

TEST_CASE("1-ary AND behaves like its constituent") {
    auto [prover, verifier] = setup(Key{});
    const Proof leaf = prove_leaf(prover, block("a"));
    const Proof one = aggregate_and(prover, {&leaf, 1});
    std::mt19937_64 rng(17);
    for (int i = 0; i < 32; ++i) {
        const Digest h = i == 0 ? leaf_hash(block("a")) : test::random_digest(rng);
        CHECK(verify(verifier, one, PublicInput::tuple({h})) ==
              verify(verifier, leaf, PublicInput::single(h)));
    }
}

TEST_CASE("aggregation errors") {
    auto [prover, verifier] = setup(Key{});
    CHECK_THROWS_AS(aggregate_and(prover, {}), EmptyAggregation);
    CHECK_THROWS_AS(aggregate_or_many(prover, {}), EmptyAggregation);

    // A proof from a different context is unknown to this transcript.
    auto [other_prover, other_verifier] = setup(Key{});
    const Proof foreign = prove_leaf(other_prover, block("z"));
    const Proof local = prove_leaf(prover, block("a"));
    CHECK_THROWS_AS(aggregate_or(prover, local, foreign), UnknownConstituent);

    std::mt19937_64 rng(1);
    const auto blocks = test::random_blocks(rng, 4);
    const MerkleTree tree = build_tree(blocks);
    const Proof embedded = build_embedded_proof(prover, tree, 0);
    CHECK_THROWS_AS(aggregate_or(prover, local, embedded), BackendMismatch);
}

TEST_CASE("OR aggregation accepts either branch and nothing else") {
    auto [prover, verifier] = setup(Key{});
    const Proof pa = prove_leaf(prover, block("a"));
    const Proof pb = prove_leaf(prover, block("b"));
    const Proof either = aggregate_or(prover, pa, pb);
    CHECK(either.kind == ProofKind::Or);
    CHECK(verify(verifier, either, PublicInput::single(leaf_hash(block("a")))));
    CHECK(verify(verifier, either, PublicInput::single(leaf_hash(block("b")))));
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        CHECK(!verify(verifier, either, PublicInput::single(test::random_digest(rng))));
    }
}

TEST_CASE("OR of a proof with itself accepts exactly where the proof does") {
    auto [prover, verifier] = setup(Key{});
    const Proof p = prove_leaf(prover, block("a"));
    const Proof doubled = aggregate_or(prover, p, p);
    std::mt19937_64 rng(29);
    for (int i = 0; i < 32; ++i) {
        const Digest h = i == 0 ? leaf_hash(block("a")) : test::random_digest(rng);
        CHECK(verify(verifier, doubled, PublicInput::single(h)) ==
              verify(verifier, p, PublicInput::single(h)));
    }
}

TEST_CASE("OR aggregates match brute-force disjunction over subsets") {
    auto [prover, verifier] = setup(Key{});
    constexpr int kLeaves = 6;
    std::vector<Proof> leaf_proofs;
    std::vector<Digest> digests;
    for (int i = 0; i < kLeaves; ++i) {
        DataBlock b{static_cast<Byte>('a' + i)};
        leaf_proofs.push_back(prove_leaf(prover, b));
        digests.push_back(leaf_hash(b));
    }
    std::mt19937_64 rng(31);
    std::vector<Digest> probes = digests;
    for (int i = 0; i < 10; ++i) {
        probes.push_back(test::random_digest(rng));
    }
    for (unsigned mask = 1; mask < (1u << kLeaves); ++mask) {
        std::vector<Proof> subset;
        for (int i = 0; i < kLeaves; ++i) {
            if (mask & (1u << i)) {
                subset.push_back(leaf_proofs[static_cast<std::size_t>(i)]);
            }
        }
        const Proof folded = aggregate_or_many(prover, subset);
        for (const Digest& h : probes) {
            bool expected = false;
            for (const Proof& p : subset) {
                expected = expected || verify(verifier, p, PublicInput::single(h));
            }
            CHECK(verify(verifier, folded, PublicInput::single(h)) == expected);
        }
    }
}

TEST_CASE("AND aggregates match brute-force conjunction over corruption patterns") {
    auto [prover, verifier] = setup(Key{});
    constexpr int kLeaves = 6;
    std::vector<Proof> leaf_proofs;
    std::vector<Digest> digests;
    for (int i = 0; i < kLeaves; ++i) {
        DataBlock b{static_cast<Byte>('a' + i)};
        leaf_proofs.push_back(prove_leaf(prover, b));
        digests.push_back(leaf_hash(b));
    }
    std::mt19937_64 rng(37);
    for (int m = 1; m <= kLeaves; ++m) {
        const std::span<const Proof> prefix(leaf_proofs.data(), static_cast<std::size_t>(m));
        const Proof all = aggregate_and(prover, prefix);
        for (unsigned pattern = 0; pattern < (1u << m); ++pattern) {
            std::vector<Digest> tuple;
            for (int i = 0; i < m; ++i) {
                tuple.push_back((pattern & (1u << i)) ? digests[static_cast<std::size_t>(i)]
                                                      : test::random_digest(rng));
            }
            bool expected = true;
            for (int i = 0; i < m; ++i) {
                expected = expected && verify(verifier, leaf_proofs[static_cast<std::size_t>(i)],
                                              PublicInput::single(tuple[static_cast<std::size_t>(i)]));
            }
            CHECK(verify(verifier, all, PublicInput::tuple(tuple)) == expected);
        }
    }
}

TEST_CASE("universal proof over one block is the leaf proof") {
    auto [prover, verifier] = setup(Key{});
    const auto blocks = named_blocks({"only"});
    const MerkleTree tree = build_tree(blocks);
    const Proof universal = build_universal_proof(prover, tree, blocks);
    CHECK(universal == prove_leaf(prover, block("only")));
}

TEST_CASE("universal proof accepts every member and rejects non-members") {
    auto [prover, verifier] = setup(Key{});
    const auto blocks = named_blocks({"a", "b", "c", "d"});
    const MerkleTree tree = build_tree(blocks);
    const Proof universal = build_universal_proof(prover, tree, blocks);
    for (const DataBlock& b : blocks) {
        CHECK(verify(verifier, universal, PublicInput::single(leaf_hash(b))));
    }
    std::mt19937_64 rng(41);
    for (int i = 0; i < 100; ++i) {
        CHECK(!verify(verifier, universal, PublicInput::single(test::random_digest(rng))));
    }
}

TEST_CASE("padding leaves are not members") {
    auto [prover, verifier] = setup(Key{});
    const auto blocks = named_blocks({"a", "b", "c"});
    const MerkleTree tree = build_tree(blocks);
    CHECK(tree.leaf_count() == 4);
    const Proof universal = build_universal_proof(prover, tree, blocks);
    for (const DataBlock& b : blocks) {
        CHECK(verify(verifier, universal, PublicInput::single(leaf_hash(b))));
    }
    CHECK(!verify(verifier, universal, PublicInput::single(pad_leaf_digest())));
}

TEST_CASE("universal proof demands the tree's own blocks") {
    auto [prover, verifier] = setup(Key{});
    const auto blocks = named_blocks({"a", "b", "c", "d"});
    const MerkleTree tree = build_tree(blocks);
    auto wrong = blocks;
    wrong[2] = block("X");
    CHECK_THROWS_AS(build_universal_proof(prover, tree, wrong), TreeMismatch);
    auto fewer = blocks;
    fewer.pop_back();
    CHECK_THROWS_AS(build_universal_proof(prover, tree, fewer), TreeMismatch);
}

TEST_CASE("fold-left and sibling-structured OR accept the same digest set") {
    auto [prover, verifier] = setup(Key{});
    const auto blocks = named_blocks({"a", "b", "c", "d", "e", "f"});
    const MerkleTree tree = build_tree(blocks);
    const Proof balanced = build_universal_proof(prover, tree, blocks);
    std::vector<Proof> leaf_proofs;
    for (const DataBlock& b : blocks) {
        leaf_proofs.push_back(prove_leaf(prover, b));
    }
    const Proof folded = aggregate_or_many(prover, leaf_proofs);
    CHECK(balanced.descriptor != folded.descriptor);

    std::mt19937_64 rng(43);
    std::vector<Digest> probes;
    for (const DataBlock& b : blocks) {
        probes.push_back(leaf_hash(b));
    }
    probes.push_back(pad_leaf_digest());
    for (int i = 0; i < 32; ++i) {
        probes.push_back(test::random_digest(rng));
    }
    for (const Digest& h : probes) {
        CHECK(verify(verifier, balanced, PublicInput::single(h)) ==
              verify(verifier, folded, PublicInput::single(h)));
    }
}

TEST_CASE("completeness holds for wide aggregates") {
    auto [prover, verifier] = setup(Key{});
    constexpr std::size_t kLeaves = 64;
    std::vector<Proof> leaf_proofs;
    std::vector<Digest> digests;
    std::vector<DataBlock> blocks;
    for (std::size_t i = 0; i < kLeaves; ++i) {
        DataBlock b{static_cast<Byte>(i), 0x7f};
        blocks.push_back(b);
        leaf_proofs.push_back(prove_leaf(prover, b));
        digests.push_back(leaf_hash(b));
    }
    const Proof all = aggregate_and(prover, leaf_proofs);
    CHECK(verify(verifier, all, PublicInput::tuple(digests)));

    const MerkleTree tree = build_tree(blocks);
    const Proof universal = build_universal_proof(prover, tree, blocks);
    for (const Digest& h : digests) {
        CHECK(verify(verifier, universal, PublicInput::single(h)));
    }
}

TEST_CASE("universal proof size does not depend on the leaf count") {
    std::set<std::size_t> sizes;
    for (const std::size_t n : {std::size_t{1}, std::size_t{16}, std::size_t{64}}) {
        auto [prover, verifier] = setup(Key{});
        std::mt19937_64 rng(n);
        const auto blocks = test::random_blocks(rng, n);
        const MerkleTree tree = build_tree(blocks);
        const Proof universal = build_universal_proof(prover, tree, blocks);
        sizes.insert(save_proof(universal).size());
    }
    CHECK(sizes.size() == 1);
}

TEST_CASE("embedded proofs verify only their own leaf against their own root") {
    auto [prover, verifier] = setup(Key{});
    std::mt19937_64 rng(47);
    const auto blocks = test::random_blocks(rng, 16);
    const MerkleTree tree = build_tree(blocks);
    const VerifyingContext vctx = embedded_verifier(Key{}, root(tree));

    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const Proof proof = build_embedded_proof(prover, tree, i);
        CHECK(proof.kind == ProofKind::Embedded);
        CHECK(proof.aux.size() == 1 + tree.depth() * 33);
        CHECK(verify_embedded(vctx, proof, leaf_hash(blocks[i])));
        for (std::size_t j = 0; j < blocks.size(); ++j) {
            if (j != i) {
                CHECK(!verify_embedded(vctx, proof, leaf_hash(blocks[j])));
            }
        }
    }

    // Same leaf digests cannot be replayed against another tree's root.
    const auto other_blocks = test::random_blocks(rng, 16);
    const MerkleTree other_tree = build_tree(other_blocks);
    const VerifyingContext other_vctx = embedded_verifier(Key{}, root(other_tree));
    const Proof proof = build_embedded_proof(prover, tree, 3);
    CHECK(!verify_embedded(other_vctx, proof, leaf_hash(blocks[3])));
}

TEST_CASE("embedded proof construction bounds the index") {
    auto [prover, verifier] = setup(Key{});
    const auto blocks = named_blocks({"a", "b", "c"});
    const MerkleTree tree = build_tree(blocks);
    CHECK_THROWS_AS(build_embedded_proof(prover, tree, 3), IndexOutOfRange);  // PAD position
    CHECK_THROWS_AS(build_embedded_proof(prover, tree, 99), IndexOutOfRange);
}

TEST_CASE("embedded aux is parsed before anything else") {
    auto [prover, verifier] = setup(Key{});
    std::mt19937_64 rng(53);
    const auto blocks = test::random_blocks(rng, 8);
    const MerkleTree tree = build_tree(blocks);
    const VerifyingContext vctx = embedded_verifier(Key{}, root(tree));
    const Proof proof = build_embedded_proof(prover, tree, 2);
    const Digest leaf = leaf_hash(blocks[2]);

    Proof truncated = proof;
    truncated.aux.pop_back();
    CHECK_THROWS_AS(verify_embedded(vctx, truncated, leaf), MalformedAux);

    Proof empty = proof;
    empty.aux.clear();
    CHECK_THROWS_AS(verify_embedded(vctx, empty, leaf), MalformedAux);

    Proof bad_flag = proof;
    bad_flag.aux[1] = 0x07;
    CHECK_THROWS_AS(verify_embedded(vctx, bad_flag, leaf), MalformedAux);

    // A parseable but modified path keeps the false-verdict contract.
    for (std::size_t byte = 2; byte < proof.aux.size(); byte += 7) {
        Proof mutated = proof;
        mutated.aux[byte] ^= 0x10;
        CHECK(!verify_embedded(vctx, mutated, leaf));
    }
}

TEST_CASE("path serialization round-trips and rejects junk") {
    std::mt19937_64 rng(59);
    const auto blocks = test::random_blocks(rng, 32);
    const MerkleTree tree = build_tree(blocks);
    for (std::size_t i = 0; i < tree.leaf_count(); i += 3) {
        const MerklePath path = gen_path(tree, i);
        const MerklePath back = parse_path(BytesView{serialize_path(path)});
        CHECK(back == path);
    }
    CHECK_THROWS_AS(parse_path(BytesView{}), MalformedAux);
    Bytes extra = serialize_path(gen_path(tree, 0));
    extra.push_back(0x00);
    CHECK_THROWS_AS(parse_path(BytesView{extra}), MalformedAux);
}

TEST_CASE("the naive AND verifier needs every leaf digest") {
    auto [prover, verifier] = setup(Key{});
    std::mt19937_64 rng(61);
    const auto blocks = test::random_blocks(rng, 16);
    const MerkleTree tree = build_tree(blocks);
    std::vector<Proof> leaf_proofs;
    std::vector<Digest> digests;
    for (const DataBlock& b : blocks) {
        leaf_proofs.push_back(prove_leaf(prover, b));
        digests.push_back(leaf_hash(b));
    }
    const Proof all = aggregate_and(prover, leaf_proofs);

    CHECK(naive_and_inclusion_verify(root(tree), digests, all, verifier));

    auto mutated = digests;
    mutated[7] = test::random_digest(rng);
    CHECK(!naive_and_inclusion_verify(root(tree), mutated, all, verifier));

    auto short_list = digests;
    short_list.resize(8);
    CHECK_THROWS_AS(naive_and_inclusion_verify(root(tree), short_list, all, verifier),
                    ArityMismatch);
    auto odd_list = digests;
    odd_list.resize(12);
    CHECK_THROWS_AS(naive_and_inclusion_verify(root(tree), odd_list, all, verifier),
                    ArityMismatch);
}

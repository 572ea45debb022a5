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

#include "oragg/merkle.hpp"

namespace oragg {

Digest leaf_hash(const DataBlock& block) {
    return sha256({BytesView{&kLeafPrefix, 1}, BytesView{block}});
}

Digest internal_hash(const Digest& left, const Digest& right) {
    return sha256({BytesView{&kInternalPrefix, 1}, as_bytes(left), as_bytes(right)});
}

const DataBlock& pad_block() {
    static const DataBlock block{'P', 'A', 'D'};
    return block;
}

const Digest& pad_leaf_digest() {
    static const Digest digest = leaf_hash(pad_block());
    return digest;
}

MerkleTree build_tree(std::span<const DataBlock> blocks) {
    if (blocks.empty()) {
        throw EmptyInput("cannot build a tree over zero blocks");
    }
    std::size_t leaf_count = 1;
    while (leaf_count < blocks.size()) {
        leaf_count *= 2;
    }

    std::vector<std::vector<Digest>> levels;
    levels.emplace_back();
    levels[0].reserve(leaf_count);
    for (const DataBlock& block : blocks) {
        levels[0].push_back(leaf_hash(block));
    }
    levels[0].resize(leaf_count, pad_leaf_digest());

    while (levels.back().size() > 1) {
        const auto& below = levels.back();
        std::vector<Digest> above;
        above.reserve(below.size() / 2);
        for (std::size_t j = 0; j + 1 < below.size(); j += 2) {
            above.push_back(internal_hash(below[j], below[j + 1]));
        }
        levels.push_back(std::move(above));
    }
    return MerkleTree(std::move(levels), blocks.size());
}

MerkleTree MerkleTree::from_levels(std::vector<std::vector<Digest>> levels,
                                   std::size_t original_leaf_count) {
    if (levels.empty() || levels[0].empty()) {
        throw IntegrityError("tree has no leaf level");
    }
    const std::size_t n = levels[0].size();
    if ((n & (n - 1)) != 0) {
        throw IntegrityError("leaf count is not a power of two");
    }
    std::size_t depth = 0;
    while ((std::size_t{1} << depth) < n) {
        ++depth;
    }
    if (levels.size() != depth + 1) {
        throw IntegrityError("level count does not match depth");
    }
    if (original_leaf_count == 0 || original_leaf_count > n) {
        throw IntegrityError("original leaf count out of range");
    }
    for (std::size_t k = 0; k < depth; ++k) {
        if (levels[k + 1].size() != levels[k].size() / 2) {
            throw IntegrityError("level size mismatch");
        }
        for (std::size_t j = 0; j < levels[k + 1].size(); ++j) {
            if (levels[k + 1][j] != internal_hash(levels[k][2 * j], levels[k][2 * j + 1])) {
                throw IntegrityError("internal hash mismatch");
            }
        }
    }
    for (std::size_t i = original_leaf_count; i < n; ++i) {
        if (levels[0][i] != pad_leaf_digest()) {
            throw IntegrityError("padding leaf is not the PAD digest");
        }
    }
    return MerkleTree(std::move(levels), original_leaf_count);
}

const Digest& root(const MerkleTree& tree) {
    return tree.levels().back()[0];
}

MerklePath gen_path(const MerkleTree& tree, std::size_t index) {
    if (index >= tree.leaf_count()) {
        throw IndexOutOfRange("leaf index " + std::to_string(index) + " out of range for " +
                              std::to_string(tree.leaf_count()) + " leaves");
    }
    MerklePath path;
    path.leaf_index = index;
    path.steps.reserve(tree.depth());
    std::size_t node = index;
    for (std::size_t level = 0; level < tree.depth(); ++level) {
        const bool node_is_right = (node & 1) != 0;
        const std::size_t sibling = node_is_right ? node - 1 : node + 1;
        path.steps.push_back({tree.levels()[level][sibling], node_is_right});
        node /= 2;
    }
    return path;
}

bool verify_path(const Digest& root, const Digest& leaf, const MerklePath& path) {
    Digest acc = leaf;
    for (const PathStep& step : path.steps) {
        acc = step.sibling_on_left ? internal_hash(step.sibling, acc)
                                   : internal_hash(acc, step.sibling);
    }
    return acc == root;
}

}  // namespace oragg

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
#include "oragg/errors.hpp"

namespace oragg {

// Domain separation: leaves hash as H(0x00 || block), internal nodes as
// H(0x01 || left || right).
inline constexpr Byte kLeafPrefix = 0x00;
inline constexpr Byte kInternalPrefix = 0x01;

Digest leaf_hash(const DataBlock& block);
Digest internal_hash(const Digest& left, const Digest& right);

// Distinguished filler block used to round the leaf count up to a power of
// two. Its digest is never a member unless a real block hashes to it.
const DataBlock& pad_block();
const Digest& pad_leaf_digest();

struct PathStep {
    Digest sibling;
    bool sibling_on_left = false;

    friend bool operator==(const PathStep&, const PathStep&) = default;
};

/// Sibling chain from a leaf to the root, leaf level first; one step per
/// tree level. sibling_on_left at level k mirrors bit k of leaf_index.
struct MerklePath {
    std::uint64_t leaf_index = 0;
    std::vector<PathStep> steps;

    friend bool operator==(const MerklePath&, const MerklePath&) = default;
};

/// Complete binary hash tree over padded leaf blocks. levels[0] holds the
/// leaf digests, levels[depth] the root.
class MerkleTree {
  public:
    std::size_t depth() const { return levels_.size() - 1; }
    std::size_t leaf_count() const { return levels_[0].size(); }
    std::size_t original_leaf_count() const { return original_leaf_count_; }
    const std::vector<std::vector<Digest>>& levels() const { return levels_; }
    const Digest& leaf(std::size_t index) const { return levels_[0][index]; }

    /// Reconstructs a tree from stored levels, re-validating the hashing
    /// relation, the power-of-two shape, and the PAD tail. Throws
    /// IntegrityError on any mismatch.
    static MerkleTree from_levels(std::vector<std::vector<Digest>> levels,
                                  std::size_t original_leaf_count);

  private:
    MerkleTree(std::vector<std::vector<Digest>> levels, std::size_t original_leaf_count)
        : levels_(std::move(levels)), original_leaf_count_(original_leaf_count) {}

    friend MerkleTree build_tree(std::span<const DataBlock> blocks);

    std::vector<std::vector<Digest>> levels_;
    std::size_t original_leaf_count_;
};

/// Builds the tree over the given blocks, padding up to the next power of
/// two with PAD leaves. Throws EmptyInput for an empty block list.
MerkleTree build_tree(std::span<const DataBlock> blocks);

const Digest& root(const MerkleTree& tree);

/// Sibling path for the leaf at `index`. Throws IndexOutOfRange.
MerklePath gen_path(const MerkleTree& tree, std::size_t index);

/// True iff folding `leaf` upward through the path reproduces `root`.
/// Malformed paths yield false, never a trap.
bool verify_path(const Digest& root, const Digest& leaf, const MerklePath& path);

}  // namespace oragg

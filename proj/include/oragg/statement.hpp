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
#include <span>
#include <vector>

#include "oragg/digest.hpp"
#include "oragg/errors.hpp"

namespace oragg {

class Statement;
using StatementPtr = std::shared_ptr<const Statement>;

/// Predicate over digests: one expected digest (Atom), a conjunction
/// (AllOf), or a disjunction (AnyOf). Nodes are immutable and shared
/// between aggregates, so composing statements never copies subtrees.
///
/// The canonical encoding is injective over the variant tree: an Atom
/// encodes as 0x01 || digest, AllOf as 0x02 || u32-BE count || child
/// descriptors, AnyOf as 0x03 || u32-BE count || child descriptors. The
/// descriptor is the SHA-256 of that encoding and binds a proof to exactly
/// one predicate. Children are order-sensitive in the encoding.
class Statement {
  public:
    enum class Kind : Byte { Atom = 1, AllOf = 2, AnyOf = 3 };

    static StatementPtr atom(const Digest& expected);
    static StatementPtr all_of(std::vector<StatementPtr> children);  // >= 1 child
    static StatementPtr any_of(std::vector<StatementPtr> children);  // >= 1 child

    Kind kind() const { return kind_; }
    const Digest& atom_digest() const { return atom_digest_; }
    std::span<const StatementPtr> children() const { return children_; }

    const Digest& descriptor() const { return descriptor_; }
    Bytes encode() const;

  private:
    Statement(Kind kind, const Digest& atom_digest, std::vector<StatementPtr> children);

    Kind kind_;
    Digest atom_digest_{};
    std::vector<StatementPtr> children_;
    Digest descriptor_{};
};

Bytes encode_statement(const Statement& statement);

/// Secret witness for a statement: the pre-image block of an atom, a chosen
/// disjunct, or one witness per conjunct.
class Witness {
  public:
    enum class Kind : Byte { Block = 1, Branch = 2, Tuple = 3 };

    static Witness block(DataBlock block);
    static Witness branch(std::size_t child_index, Witness inner);
    static Witness tuple(std::vector<Witness> children);

    Kind kind() const { return kind_; }
    const DataBlock& block_bytes() const { return block_; }
    std::size_t child_index() const { return child_index_; }
    const Witness& inner() const { return children_[0]; }
    std::span<const Witness> children() const { return children_; }

  private:
    Witness() = default;

    Kind kind_ = Kind::Block;
    DataBlock block_;
    std::size_t child_index_ = 0;
    std::vector<Witness> children_;
};

/// Prover-side check that a witness satisfies a statement: the atom block
/// must hash to the expected digest, a branch must address an existing
/// AnyOf child, and a tuple must satisfy every AllOf child pointwise.
bool witness_matches(const Statement& statement, const Witness& witness);

}  // namespace oragg

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

#include "oragg/statement.hpp"

#include "oragg/merkle.hpp"

namespace oragg {

namespace {

void append_u32be(Bytes& out, std::uint32_t value) {
    out.push_back(static_cast<Byte>(value >> 24));
    out.push_back(static_cast<Byte>(value >> 16));
    out.push_back(static_cast<Byte>(value >> 8));
    out.push_back(static_cast<Byte>(value));
}

}  // namespace

Statement::Statement(Kind kind, const Digest& atom_digest, std::vector<StatementPtr> children)
    : kind_(kind), atom_digest_(atom_digest), children_(std::move(children)) {
    descriptor_ = sha256(BytesView{encode()});
}

StatementPtr Statement::atom(const Digest& expected) {
    return StatementPtr(new Statement(Kind::Atom, expected, {}));
}

StatementPtr Statement::all_of(std::vector<StatementPtr> children) {
    if (children.empty()) {
        throw InvalidParams("AllOf requires at least one child");
    }
    return StatementPtr(new Statement(Kind::AllOf, Digest{}, std::move(children)));
}

StatementPtr Statement::any_of(std::vector<StatementPtr> children) {
    if (children.empty()) {
        throw InvalidParams("AnyOf requires at least one child");
    }
    return StatementPtr(new Statement(Kind::AnyOf, Digest{}, std::move(children)));
}

Bytes Statement::encode() const {
    Bytes out;
    out.push_back(static_cast<Byte>(kind_));
    if (kind_ == Kind::Atom) {
        out.insert(out.end(), atom_digest_.bytes.begin(), atom_digest_.bytes.end());
        return out;
    }
    append_u32be(out, static_cast<std::uint32_t>(children_.size()));
    for (const StatementPtr& child : children_) {
        const Digest& d = child->descriptor();
        out.insert(out.end(), d.bytes.begin(), d.bytes.end());
    }
    return out;
}

Bytes encode_statement(const Statement& statement) {
    return statement.encode();
}

Witness Witness::block(DataBlock block) {
    Witness w;
    w.kind_ = Kind::Block;
    w.block_ = std::move(block);
    return w;
}

Witness Witness::branch(std::size_t child_index, Witness inner) {
    Witness w;
    w.kind_ = Kind::Branch;
    w.child_index_ = child_index;
    w.children_.push_back(std::move(inner));
    return w;
}

Witness Witness::tuple(std::vector<Witness> children) {
    Witness w;
    w.kind_ = Kind::Tuple;
    w.children_ = std::move(children);
    return w;
}

bool witness_matches(const Statement& statement, const Witness& witness) {
    switch (statement.kind()) {
        case Statement::Kind::Atom:
            return witness.kind() == Witness::Kind::Block &&
                   leaf_hash(witness.block_bytes()) == statement.atom_digest();
        case Statement::Kind::AnyOf:
            return witness.kind() == Witness::Kind::Branch &&
                   witness.child_index() < statement.children().size() &&
                   witness_matches(*statement.children()[witness.child_index()], witness.inner());
        case Statement::Kind::AllOf: {
            if (witness.kind() != Witness::Kind::Tuple ||
                witness.children().size() != statement.children().size()) {
                return false;
            }
            for (std::size_t i = 0; i < witness.children().size(); ++i) {
                if (!witness_matches(*statement.children()[i], witness.children()[i])) {
                    return false;
                }
            }
            return true;
        }
    }
    return false;
}

}  // namespace oragg

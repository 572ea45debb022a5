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

#include "oragg/persistence.hpp"

#include <cstring>
#include <unordered_map>

namespace oragg {

namespace {

constexpr std::string_view kProofMagic = "OAGP";
constexpr std::string_view kTreeMagic = "MTRE";
constexpr std::string_view kTranscriptMagic = "OTRS";
constexpr Byte kFormatVersion = 0x01;

class Reader {
  public:
    explicit Reader(BytesView bytes) : bytes_(bytes) {}

    void expect_header(std::string_view magic) {
        if (bytes_.size() < magic.size() + 1) {
            throw Truncated("missing file header");
        }
        if (std::memcmp(bytes_.data(), magic.data(), magic.size()) != 0) {
            throw BadMagic("expected magic '" + std::string(magic) + "'");
        }
        pos_ = magic.size();
        const Byte version = bytes_[pos_++];
        if (version != kFormatVersion) {
            throw UnsupportedVersion("unsupported format version " + std::to_string(version));
        }
    }

    Byte u8() {
        need(1);
        return bytes_[pos_++];
    }

    std::uint32_t u32() {
        need(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) {
            v = (v << 8) | bytes_[pos_++];
        }
        return v;
    }

    Digest digest() {
        need(kDigestSize);
        Digest d;
        std::memcpy(d.bytes.data(), bytes_.data() + pos_, kDigestSize);
        pos_ += kDigestSize;
        return d;
    }

    Bytes raw(std::size_t count) {
        need(count);
        Bytes out(bytes_.begin() + static_cast<std::ptrdiff_t>(pos_),
                  bytes_.begin() + static_cast<std::ptrdiff_t>(pos_ + count));
        pos_ += count;
        return out;
    }

    void expect_end() {
        if (pos_ != bytes_.size()) {
            throw MalformedData("trailing bytes after object");
        }
    }

  private:
    void need(std::size_t count) {
        if (bytes_.size() - pos_ < count) {
            throw Truncated("object ends before its declared content");
        }
    }

    BytesView bytes_;
    std::size_t pos_ = 0;
};

void put_u32(Bytes& out, std::uint32_t v) {
    out.push_back(static_cast<Byte>(v >> 24));
    out.push_back(static_cast<Byte>(v >> 16));
    out.push_back(static_cast<Byte>(v >> 8));
    out.push_back(static_cast<Byte>(v));
}

void put_header(Bytes& out, std::string_view magic) {
    out.insert(out.end(), magic.begin(), magic.end());
    out.push_back(kFormatVersion);
}

void put_digest(Bytes& out, const Digest& d) {
    out.insert(out.end(), d.bytes.begin(), d.bytes.end());
}

}  // namespace

Bytes save_proof(const Proof& proof) {
    Bytes out;
    out.reserve(4 + 1 + kProofCoreSize + 4 + proof.aux.size());
    put_header(out, kProofMagic);
    out.push_back(static_cast<Byte>(proof.backend_id));
    out.push_back(static_cast<Byte>(proof.kind));
    put_digest(out, proof.descriptor);
    put_digest(out, proof.authenticator);
    put_u32(out, static_cast<std::uint32_t>(proof.aux.size()));
    out.insert(out.end(), proof.aux.begin(), proof.aux.end());
    return out;
}

Proof load_proof(BytesView bytes) {
    Reader r(bytes);
    r.expect_header(kProofMagic);
    Proof proof;
    const Byte backend = r.u8();
    if (backend != static_cast<Byte>(BackendId::IdealTranscript) &&
        backend != static_cast<Byte>(BackendId::PathEmbedded)) {
        throw MalformedData("unknown backend id " + std::to_string(backend));
    }
    proof.backend_id = static_cast<BackendId>(backend);
    const Byte kind = r.u8();
    if (kind < static_cast<Byte>(ProofKind::Leaf) || kind > static_cast<Byte>(ProofKind::Embedded)) {
        throw MalformedData("unknown proof kind " + std::to_string(kind));
    }
    proof.kind = static_cast<ProofKind>(kind);
    proof.descriptor = r.digest();
    proof.authenticator = r.digest();
    const std::uint32_t aux_len = r.u32();
    proof.aux = r.raw(aux_len);
    r.expect_end();
    if (proof.backend_id == BackendId::IdealTranscript && !proof.aux.empty()) {
        throw MalformedData("transcript-backend proofs carry no aux");
    }
    if (proof.backend_id == BackendId::PathEmbedded) {
        if (proof.aux.empty() ||
            proof.aux.size() != 1 + static_cast<std::size_t>(proof.aux[0]) * (1 + kDigestSize)) {
            throw MalformedData("embedded aux length does not match its declared depth");
        }
    }
    return proof;
}

Bytes save_tree(const MerkleTree& tree) {
    if (tree.depth() > 40 || tree.original_leaf_count() > 0xffffffffull) {
        throw InvalidParams("tree exceeds the snapshot format's bounds");
    }
    Bytes out;
    out.reserve(4 + 1 + 1 + 4 + (2 * tree.leaf_count() - 1) * kDigestSize);
    put_header(out, kTreeMagic);
    out.push_back(static_cast<Byte>(tree.depth()));
    put_u32(out, static_cast<std::uint32_t>(tree.original_leaf_count()));
    for (const auto& level : tree.levels()) {
        for (const Digest& d : level) {
            put_digest(out, d);
        }
    }
    return out;
}

MerkleTree load_tree(BytesView bytes) {
    Reader r(bytes);
    r.expect_header(kTreeMagic);
    const std::size_t depth = r.u8();
    const std::uint32_t original_leaf_count = r.u32();
    // (2^(depth+1) - 1) digests must follow; reject depths whose payload
    // could not possibly fit before touching any allocation.
    if (depth > 40 ||
        bytes.size() < ((std::uint64_t{2} << depth) - 1) * kDigestSize) {
        throw Truncated("tree file smaller than its declared depth requires");
    }
    std::vector<std::vector<Digest>> levels(depth + 1);
    for (std::size_t k = 0; k <= depth; ++k) {
        const std::size_t width = std::size_t{1} << (depth - k);
        levels[k].reserve(width);
        for (std::size_t j = 0; j < width; ++j) {
            levels[k].push_back(r.digest());
        }
    }
    r.expect_end();
    return MerkleTree::from_levels(std::move(levels), original_leaf_count);
}

namespace {

StatementPtr decode_statement(
    BytesView encoding,
    const std::unordered_map<Digest, StatementPtr, DigestHash>& known) {
    if (encoding.empty()) {
        throw MalformedData("empty statement encoding");
    }
    const Byte tag = encoding[0];
    if (tag == static_cast<Byte>(Statement::Kind::Atom)) {
        if (encoding.size() != 1 + kDigestSize) {
            throw MalformedData("atom encoding has the wrong length");
        }
        Digest d;
        std::memcpy(d.bytes.data(), encoding.data() + 1, kDigestSize);
        return Statement::atom(d);
    }
    if (tag != static_cast<Byte>(Statement::Kind::AllOf) &&
        tag != static_cast<Byte>(Statement::Kind::AnyOf)) {
        throw MalformedData("unknown statement tag " + std::to_string(tag));
    }
    if (encoding.size() < 5) {
        throw Truncated("composite statement encoding ends early");
    }
    std::uint32_t count = 0;
    for (int i = 1; i <= 4; ++i) {
        count = (count << 8) | encoding[static_cast<std::size_t>(i)];
    }
    if (count == 0) {
        throw MalformedData("composite statement with zero children");
    }
    if (encoding.size() != 5 + static_cast<std::size_t>(count) * kDigestSize) {
        throw MalformedData("composite statement length does not match child count");
    }
    std::vector<StatementPtr> children;
    children.reserve(count);
    for (std::uint32_t i = 0; i < count; ++i) {
        Digest child_descriptor;
        std::memcpy(child_descriptor.bytes.data(), encoding.data() + 5 + i * kDigestSize,
                    kDigestSize);
        auto it = known.find(child_descriptor);
        if (it == known.end()) {
            throw IntegrityError("child descriptor " + to_hex(child_descriptor) +
                                 " does not resolve to an earlier entry");
        }
        children.push_back(it->second);
    }
    return tag == static_cast<Byte>(Statement::Kind::AllOf)
               ? Statement::all_of(std::move(children))
               : Statement::any_of(std::move(children));
}

}  // namespace

Bytes save_transcript(const Transcript& transcript) {
    const auto entries = transcript.entries();
    if (entries.size() > 0xffffffffull) {
        throw InvalidParams("transcript exceeds the store format's bounds");
    }
    Bytes out;
    out.reserve(transcript_serialized_size(transcript));
    put_header(out, kTranscriptMagic);
    put_u32(out, static_cast<std::uint32_t>(entries.size()));
    for (const StatementPtr& statement : entries) {
        put_digest(out, statement->descriptor());
        const Bytes encoding = statement->encode();
        put_u32(out, static_cast<std::uint32_t>(encoding.size()));
        out.insert(out.end(), encoding.begin(), encoding.end());
    }
    return out;
}

std::shared_ptr<Transcript> load_transcript(BytesView bytes) {
    Reader r(bytes);
    r.expect_header(kTranscriptMagic);
    const std::uint32_t count = r.u32();
    auto transcript = std::make_shared<Transcript>();
    std::unordered_map<Digest, StatementPtr, DigestHash> known;
    known.reserve(count);
    for (std::uint32_t i = 0; i < count; ++i) {
        const Digest descriptor = r.digest();
        const std::uint32_t length = r.u32();
        const Bytes encoding = r.raw(length);
        if (known.contains(descriptor)) {
            throw DuplicateDescriptor("descriptor " + to_hex(descriptor) +
                                      " appears more than once");
        }
        StatementPtr statement = decode_statement(BytesView{encoding}, known);
        if (statement->descriptor() != descriptor) {
            throw IntegrityError("stored descriptor does not match its statement encoding");
        }
        known.emplace(descriptor, statement);
        transcript->record(statement);
    }
    r.expect_end();
    return transcript;
}

std::uint64_t transcript_serialized_size(const Transcript& transcript) {
    std::uint64_t total = 4 + 1 + 4;
    for (const StatementPtr& statement : transcript.entries()) {
        const std::uint64_t encoded =
            statement->kind() == Statement::Kind::Atom
                ? 1 + kDigestSize
                : 5 + statement->children().size() * kDigestSize;
        total += kDigestSize + 4 + encoded;
    }
    return total;
}

}  // namespace oragg

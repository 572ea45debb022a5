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

#include "oragg/accounting.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>

#include "oragg/aggregation.hpp"
#include "oragg/backend.hpp"
#include "oragg/errors.hpp"
#include "oragg/merkle.hpp"
#include "oragg/persistence.hpp"

namespace oragg {

namespace {

constexpr std::string_view kTranscriptNote =
    "transcript reported separately; it models the reusable verification key";
constexpr std::string_view kEmbeddedNote =
    "root digest held by the verifier; only the leaf hash is counted";

bool is_power_of_two(std::uint64_t n) {
    return n != 0 && (n & (n - 1)) == 0;
}

std::uint64_t now_ns() {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(
            std::chrono::steady_clock::now().time_since_epoch())
            .count());
}

// Deterministic block stream: block i is HMAC(seed, label || index).
std::vector<DataBlock> bench_blocks(const Key& seed, std::uint64_t n) {
    std::vector<DataBlock> blocks;
    blocks.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        std::array<Byte, 8> index{};
        for (int b = 0; b < 8; ++b) {
            index[static_cast<std::size_t>(b)] = static_cast<Byte>(i >> (56 - 8 * b));
        }
        const Digest d = hmac_sha256(seed, {as_bytes("oragg/bench/block"), BytesView{index}});
        blocks.emplace_back(d.bytes.begin(), d.bytes.end());
    }
    return blocks;
}

}  // namespace

std::string_view scheme_name(Scheme scheme) {
    switch (scheme) {
        case Scheme::AndAggregation:
            return "and_aggregation";
        case Scheme::EmbeddedPath:
            return "embedded_path";
        case Scheme::OrAggregation:
            return "or_aggregation";
    }
    return "unknown";
}

CostReport cost_model(Scheme scheme, std::uint64_t n, unsigned hash_bits) {
    if (!is_power_of_two(n) || n > (std::uint64_t{1} << 40)) {
        throw InvalidParams("n must be a power of two in [1, 2^40]");
    }
    if (hash_bits == 0 || hash_bits % 8 != 0 || hash_bits > 65536) {
        throw InvalidParams("hash_bits must be a positive multiple of 8 up to 65536");
    }
    const std::uint64_t hash_bytes = hash_bits / 8;
    CostReport report;
    report.scheme = scheme;
    report.n = n;
    report.hash_bits = hash_bits;
    report.proof_size_class = ProofSizeClass::Compact;
    switch (scheme) {
        case Scheme::AndAggregation:
            report.verification_data_bytes = n * hash_bytes;  // all leaf hashes
            report.universal = true;
            report.notes = kTranscriptNote;
            break;
        case Scheme::EmbeddedPath:
            report.verification_data_bytes = hash_bytes;  // single leaf hash
            report.universal = false;
            report.notes = kEmbeddedNote;
            break;
        case Scheme::OrAggregation:
            report.verification_data_bytes = hash_bytes;  // single leaf hash
            report.universal = true;
            report.notes = kTranscriptNote;
            break;
    }
    return report;
}

MeasuredReport measure(const MeasureParams& params) {
    if (params.n == 0) {
        throw InvalidParams("n must be at least 1");
    }
    if (params.n > params.max_n) {
        throw ScaleExceeded("n = " + std::to_string(params.n) + " exceeds the configured bound " +
                            std::to_string(params.max_n));
    }

    const auto blocks = bench_blocks(params.seed, params.n);

    const std::uint64_t build_start = now_ns();
    const MerkleTree tree = build_tree(blocks);
    auto [prover, verifier] = setup(params.seed);

    Proof proof;
    std::vector<Digest> tuple_digests;
    switch (params.scheme) {
        case Scheme::AndAggregation: {
            std::vector<Proof> leaf_proofs;
            leaf_proofs.reserve(blocks.size());
            for (const DataBlock& block : blocks) {
                leaf_proofs.push_back(prove_leaf(prover, block));
            }
            proof = aggregate_and(prover, leaf_proofs);
            tuple_digests.assign(tree.levels()[0].begin(),
                                 tree.levels()[0].begin() +
                                     static_cast<std::ptrdiff_t>(tree.original_leaf_count()));
            break;
        }
        case Scheme::EmbeddedPath:
            proof = build_embedded_proof(prover, tree, 0);
            break;
        case Scheme::OrAggregation:
            proof = build_universal_proof(prover, tree, blocks);
            break;
    }
    const std::uint64_t build_end = now_ns();

    const Bytes serialized = save_proof(proof);

    const PublicInput input = params.scheme == Scheme::AndAggregation
                                  ? PublicInput::tuple(tuple_digests)
                                  : PublicInput::single(tree.leaf(0));
    const VerifyingContext vctx = params.scheme == Scheme::EmbeddedPath
                                      ? embedded_verifier(params.seed, root(tree))
                                      : verifier;

    MeasuredReport report;
    report.scheme = params.scheme;
    report.n = params.n;
    report.proof_core_bytes = proof_core_size(proof);
    report.proof_aux_bytes = proof.aux.size();
    report.verification_data_bytes =
        params.scheme == Scheme::AndAggregation ? tuple_digests.size() * kDigestSize : kDigestSize;
    report.transcript_bytes = params.scheme == Scheme::EmbeddedPath
                                  ? 0
                                  : transcript_serialized_size(prover.transcript());
    report.build_wall_time_ns = build_end - build_start;
    report.notes = std::string(params.scheme == Scheme::EmbeddedPath ? kEmbeddedNote
                                                                     : kTranscriptNote);

    std::array<std::uint64_t, 5> samples{};
    for (auto& sample : samples) {
        const std::uint64_t start = now_ns();
        const bool ok = verify(vctx, proof, input);
        sample = now_ns() - start;
        if (!ok) {
            throw IntegrityError("freshly built proof failed to verify during measurement");
        }
    }
    std::sort(samples.begin(), samples.end());
    report.verify_wall_time_ns = samples[2];
    return report;
}

ReportRow to_row(const CostReport& report) {
    ReportRow row;
    row.scheme = std::string(scheme_name(report.scheme));
    row.n = report.n;
    row.hash_bits = report.hash_bits;
    row.verification_data_bytes = report.verification_data_bytes;
    row.universal = report.universal;
    row.notes = report.notes;
    return row;
}

ReportRow to_row(const MeasuredReport& report) {
    ReportRow row;
    row.scheme = std::string(scheme_name(report.scheme));
    row.n = report.n;
    row.hash_bits = 256;
    row.proof_core_bytes = report.proof_core_bytes;
    row.proof_aux_bytes = report.proof_aux_bytes;
    row.verification_data_bytes = report.verification_data_bytes;
    row.transcript_bytes = report.transcript_bytes;
    row.universal = report.scheme != Scheme::EmbeddedPath;
    row.verify_ns = report.verify_wall_time_ns;
    row.build_ns = report.build_wall_time_ns;
    row.notes = report.notes;
    return row;
}

namespace {

template <typename T>
void append_csv_field(std::string& out, const std::optional<T>& value) {
    out += ',';
    if (!value) {
        return;
    }
    if constexpr (std::is_same_v<T, bool>) {
        out += *value ? "true" : "false";
    } else {
        out += std::to_string(*value);
    }
}

}  // namespace

std::string emit_report(std::span<const ReportRow> rows, ReportFormat format) {
    if (format == ReportFormat::Csv) {
        std::string out{kReportCsvHeader};
        out += '\n';
        for (const ReportRow& row : rows) {
            out += row.scheme;
            out += ',';
            out += std::to_string(row.n);
            append_csv_field(out, row.hash_bits);
            append_csv_field(out, row.proof_core_bytes);
            append_csv_field(out, row.proof_aux_bytes);
            append_csv_field(out, row.verification_data_bytes);
            append_csv_field(out, row.transcript_bytes);
            append_csv_field(out, row.universal);
            append_csv_field(out, row.verify_ns);
            append_csv_field(out, row.build_ns);
            out += ',';
            out += row.notes;  // notes never contain commas
            out += '\n';
        }
        return out;
    }

    nlohmann::ordered_json array = nlohmann::ordered_json::array();
    for (const ReportRow& row : rows) {
        nlohmann::ordered_json obj;
        obj["scheme"] = row.scheme;
        obj["n"] = row.n;
        auto set = [&obj](const char* key, const auto& value) {
            if (value) {
                obj[key] = *value;
            } else {
                obj[key] = nullptr;
            }
        };
        set("hash_bits", row.hash_bits);
        set("proof_core_bytes", row.proof_core_bytes);
        set("proof_aux_bytes", row.proof_aux_bytes);
        set("verification_data_bytes", row.verification_data_bytes);
        set("transcript_bytes", row.transcript_bytes);
        set("universal", row.universal);
        set("verify_ns", row.verify_ns);
        set("build_ns", row.build_ns);
        obj["notes"] = row.notes;
        array.push_back(std::move(obj));
    }
    return array.dump(2) + "\n";
}

}  // namespace oragg

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

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "oragg/digest.hpp"
#include "oragg/errors.hpp"

namespace oragg {

/// The three aggregation approaches under comparison.
enum class Scheme { AndAggregation, EmbeddedPath, OrAggregation };

std::string_view scheme_name(Scheme scheme);

enum class ProofSizeClass { Compact };

/// Analytical communication cost of verifying one inclusion.
///
/// The verifier of an AND aggregate must be handed every leaf hash
/// (n x hash bytes); the embedded-path and OR verifiers each process a
/// single leaf hash. The AND and OR aggregates are universal (one proof
/// covers any leaf); the embedded proof is tied to one leaf.
struct CostReport {
    Scheme scheme = Scheme::OrAggregation;
    std::uint64_t n = 1;
    unsigned hash_bits = 256;
    ProofSizeClass proof_size_class = ProofSizeClass::Compact;
    std::uint64_t verification_data_bytes = 0;
    bool universal = false;
    std::string notes;
};

/// Honest-measurement companion to the model: exact serialized byte counts
/// and wall times from one real run. Transcript bytes are reported but
/// never folded into verification data; the transcript models the fixed,
/// reusable verification key of the backend.
struct MeasuredReport {
    Scheme scheme = Scheme::OrAggregation;
    std::uint64_t n = 1;
    std::uint64_t proof_core_bytes = 0;
    std::uint64_t proof_aux_bytes = 0;
    std::uint64_t verification_data_bytes = 0;
    std::uint64_t transcript_bytes = 0;
    std::uint64_t verify_wall_time_ns = 0;
    std::uint64_t build_wall_time_ns = 0;
    std::string notes;
};

/// Throws InvalidParams unless n is a power of two >= 1 and hash_bits a
/// positive multiple of 8 (bounded so byte counts cannot overflow).
CostReport cost_model(Scheme scheme, std::uint64_t n, unsigned hash_bits = 256);

inline constexpr std::uint64_t kDefaultMeasureBound = std::uint64_t{1} << 20;

struct MeasureParams {
    Scheme scheme = Scheme::OrAggregation;
    std::uint64_t n = 1;
    Key seed{};
    std::uint64_t max_n = kDefaultMeasureBound;
};

/// Builds a tree over deterministic pseudo-random blocks, produces the
/// scheme's proof, serializes it, verifies it (median of five timed runs),
/// and records exact byte counts. Throws ScaleExceeded above max_n.
MeasuredReport measure(const MeasureParams& params);

enum class ReportFormat { Json, Csv };

/// One emitted row; cost and measured reports project onto the same
/// columns, absent fields staying empty (CSV) or null (JSON).
struct ReportRow {
    std::string scheme;
    std::uint64_t n = 1;
    std::optional<std::uint64_t> hash_bits;
    std::optional<std::uint64_t> proof_core_bytes;
    std::optional<std::uint64_t> proof_aux_bytes;
    std::optional<std::uint64_t> verification_data_bytes;
    std::optional<std::uint64_t> transcript_bytes;
    std::optional<bool> universal;
    std::optional<std::uint64_t> verify_ns;
    std::optional<std::uint64_t> build_ns;
    std::string notes;
};

ReportRow to_row(const CostReport& report);
ReportRow to_row(const MeasuredReport& report);

inline constexpr std::string_view kReportCsvHeader =
    "scheme,n,hash_bits,proof_core_bytes,proof_aux_bytes,verification_data_bytes,"
    "transcript_bytes,universal,verify_ns,build_ns,notes";

/// Stable field ordering; CSV emits the fixed header row first, JSON an
/// array of objects whose keys match the CSV columns.
std::string emit_report(std::span<const ReportRow> rows, ReportFormat format);

}  // namespace oragg

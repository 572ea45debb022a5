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

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "oragg/acceptance.hpp"
#include "oragg/accounting.hpp"
#include "oragg/aggregation.hpp"
#include "oragg/backend.hpp"
#include "oragg/input_json.hpp"
#include "oragg/merkle.hpp"
#include "oragg/persistence.hpp"

namespace fs = std::filesystem;

namespace {

using namespace oragg;

// Exit codes: 0 accept/success, 1 reject, 2 usage/parse/format error.
constexpr int kExitAccept = 0;
constexpr int kExitReject = 1;
constexpr int kExitError = 2;

Bytes read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InvalidParams("cannot open '" + path.string() + "'");
    }
    Bytes bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return bytes;
}

// Writes once, atomically: stage to a sibling temp file, then rename.
void write_file(const fs::path& path, BytesView bytes) {
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw InvalidParams("cannot write '" + tmp.string() + "'");
        }
        out.write(reinterpret_cast<const char*>(bytes.data()),
                  static_cast<std::streamsize>(bytes.size()));
        if (!out) {
            throw InvalidParams("short write to '" + tmp.string() + "'");
        }
    }
    fs::rename(tmp, path);
}

Key parse_seed(const std::string& hex) {
    const auto bytes = bytes_from_hex(hex);
    if (!bytes || bytes->size() != 32) {
        throw InvalidParams("--seed must be 64 hex characters");
    }
    Key key{};
    std::copy(bytes->begin(), bytes->end(), key.begin());
    return key;
}

Digest parse_digest(const std::string& hex, const std::string& what) {
    const auto digest = digest_from_hex(hex);
    if (!digest) {
        throw InvalidParams(what + " must be a 64-character hex digest");
    }
    return *digest;
}

// One block per file for a directory (sorted by filename); for a regular
// file either one block per line or the whole file as a single block.
std::vector<DataBlock> load_blocks(const fs::path& input, const std::string& split) {
    std::vector<DataBlock> blocks;
    if (fs::is_directory(input)) {
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(input)) {
            if (entry.is_regular_file()) {
                files.push_back(entry.path());
            }
        }
        std::sort(files.begin(), files.end());
        for (const fs::path& file : files) {
            blocks.push_back(read_file(file));
        }
        return blocks;
    }
    if (!fs::is_regular_file(input)) {
        throw InvalidParams("input '" + input.string() + "' is neither a file nor a directory");
    }
    const Bytes content = read_file(input);
    if (split == "whole") {
        blocks.push_back(content);
        return blocks;
    }
    // Newline-delimited records; a trailing newline does not add a record.
    DataBlock current;
    for (const Byte b : content) {
        if (b == '\n') {
            blocks.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(b);
        }
    }
    if (!current.empty()) {
        blocks.push_back(std::move(current));
    }
    return blocks;
}

bool looks_like_hex_digest(const std::string& value) {
    return value.size() == 64 && std::all_of(value.begin(), value.end(), [](char c) {
               return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
           });
}

PublicInput parse_public_input(const std::string& value) {
    if (looks_like_hex_digest(value)) {
        return PublicInput::single(parse_digest(value, "--input"));
    }
    const fs::path path(value);
    if (!fs::is_regular_file(path)) {
        throw InvalidParams("--input '" + value + "' is neither a hex digest nor a file");
    }
    if (path.extension() == ".json") {
        const Bytes content = read_file(path);
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(content.begin(), content.end());
        } catch (const nlohmann::json::exception& e) {
            throw MalformedData("cannot parse '" + value + "': " + e.what());
        }
        return PublicInput::structured(input_from_json(j));
    }
    std::ifstream in(path);
    std::vector<Digest> digests;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        digests.push_back(parse_digest(line, "digest list entry"));
    }
    return PublicInput::tuple(std::move(digests));
}

AcceptanceExpr expr_from_options(const std::string& text, const std::string& file) {
    if (text.empty() == file.empty()) {
        throw InvalidParams("provide exactly one of --expr and --expr-file");
    }
    if (!text.empty()) {
        return parse_expr(text);
    }
    const Bytes content = read_file(file);
    return parse_expr(std::string_view(reinterpret_cast<const char*>(content.data()),
                                       content.size()));
}

Scheme parse_scheme(const std::string& mode) {
    if (mode == "or") return Scheme::OrAggregation;
    if (mode == "and") return Scheme::AndAggregation;
    if (mode == "embedded") return Scheme::EmbeddedPath;
    throw InvalidParams("unknown scheme '" + mode + "'");
}

ReportFormat parse_format(const std::string& format) {
    if (format == "json") return ReportFormat::Json;
    if (format == "csv") return ReportFormat::Csv;
    throw InvalidParams("unknown format '" + format + "'");
}

int cmd_build(const std::string& input, const std::string& out, const std::string& split) {
    const auto blocks = load_blocks(input, split);
    const MerkleTree tree = build_tree(blocks);
    write_file(out, save_tree(tree));
    std::cerr << "built tree: depth " << tree.depth() << ", " << tree.original_leaf_count()
              << " blocks, root " << to_hex(root(tree)) << "\n";
    return kExitAccept;
}

int cmd_prove(const std::string& tree_path, const std::string& blocks_path,
              const std::string& split, const std::string& mode, std::int64_t leaf_index,
              const std::string& seed_hex, const std::string& out,
              const std::string& transcript_out) {
    const Key seed = parse_seed(seed_hex);
    const MerkleTree tree = load_tree(read_file(tree_path));
    const auto blocks = load_blocks(blocks_path, split);
    auto [prover, verifier] = setup(seed);

    Proof proof;
    if (mode == "or") {
        proof = build_universal_proof(prover, tree, blocks);
    } else if (mode == "and") {
        if (blocks.size() != tree.original_leaf_count()) {
            throw TreeMismatch("block count does not match the tree");
        }
        std::vector<Proof> leaf_proofs;
        leaf_proofs.reserve(blocks.size());
        for (const DataBlock& block : blocks) {
            leaf_proofs.push_back(prove_leaf(prover, block));
        }
        proof = aggregate_and(prover, leaf_proofs);
    } else if (mode == "embedded") {
        if (leaf_index < 0) {
            throw InvalidParams("--mode embedded requires --leaf-index");
        }
        proof = build_embedded_proof(prover, tree, static_cast<std::size_t>(leaf_index));
    } else {
        throw InvalidParams("--mode must be one of or|and|embedded");
    }

    write_file(out, save_proof(proof));
    if (!transcript_out.empty()) {
        write_file(transcript_out, save_transcript(prover.transcript()));
    }
    std::cerr << "wrote proof (" << mode << ") for " << blocks.size() << " blocks\n";
    return kExitAccept;
}

int cmd_verify(const std::string& proof_path, const std::string& input_value,
               const std::string& root_hex, const std::string& transcript_path,
               const std::string& seed_hex) {
    const Key seed = parse_seed(seed_hex);
    const Proof proof = load_proof(read_file(proof_path));
    const PublicInput input = parse_public_input(input_value);

    bool accepted = false;
    if (proof.backend_id == BackendId::PathEmbedded) {
        if (root_hex.empty()) {
            throw InvalidParams("embedded proofs require --root");
        }
        const VerifyingContext vctx =
            embedded_verifier(seed, parse_digest(root_hex, "--root"));
        accepted = verify(vctx, proof, input);
    } else {
        if (transcript_path.empty()) {
            throw InvalidParams("transcript-backend proofs require --transcript");
        }
        auto transcript = load_transcript(read_file(transcript_path));
        const VerifyingContext vctx =
            VerifyingContext::ideal(derive_secret_key(seed), std::move(transcript));
        if (!root_hex.empty() && input.kind() == PublicInput::Kind::Tuple) {
            // Full-leaf-set baseline: recompute the root from the digest
            // list before checking the aggregate.
            accepted = naive_and_inclusion_verify(parse_digest(root_hex, "--root"),
                                                  input.digests(), proof, vctx);
        } else {
            accepted = verify(vctx, proof, input);
        }
    }
    std::cerr << (accepted ? "accept" : "reject") << "\n";
    return accepted ? kExitAccept : kExitReject;
}

int cmd_expr_compile(const std::string& expr_text, const std::string& expr_file,
                     const std::string& bindings_path, const std::string& seed_hex,
                     const std::vector<std::string>& transcript_paths, const std::string& out,
                     const std::string& transcript_out) {
    const Key seed = parse_seed(seed_hex);
    const AcceptanceExpr expr = expr_from_options(expr_text, expr_file);

    auto transcript = std::make_shared<Transcript>();
    for (const std::string& path : transcript_paths) {
        for (const StatementPtr& statement : load_transcript(read_file(path))->entries()) {
            transcript->record(statement);
        }
    }
    ProvingContext prover = proving_context(seed, transcript);

    const Bytes content = read_file(bindings_path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(content.begin(), content.end());
    } catch (const nlohmann::json::exception& e) {
        throw MalformedData("cannot parse bindings: " + std::string(e.what()));
    }
    if (!j.is_object()) {
        throw MalformedData("bindings must be an object mapping atom names to proof paths");
    }
    Bindings bindings;
    for (const auto& [name, value] : j.items()) {
        if (!value.is_string()) {
            throw MalformedData("binding for '" + name + "' must be a proof file path");
        }
        bindings.emplace(name, load_proof(read_file(value.get<std::string>())));
    }

    const Proof proof = compile_expr(prover, expr, bindings);
    write_file(out, save_proof(proof));
    if (!transcript_out.empty()) {
        write_file(transcript_out, save_transcript(prover.transcript()));
    }
    std::cerr << "compiled '" << pretty_print(expr) << "'\n";
    return kExitAccept;
}

int cmd_expr_verify(const std::string& expr_text, const std::string& expr_file,
                    const std::string& proof_path, const std::string& input_path,
                    const std::string& seed_hex, const std::string& transcript_path) {
    const Key seed = parse_seed(seed_hex);
    const AcceptanceExpr expr = expr_from_options(expr_text, expr_file);
    const Proof proof = load_proof(read_file(proof_path));

    const Bytes content = read_file(input_path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(content.begin(), content.end());
    } catch (const nlohmann::json::exception& e) {
        throw MalformedData("cannot parse input: " + std::string(e.what()));
    }
    const VerificationInput input = input_from_json(j);

    auto transcript = load_transcript(read_file(transcript_path));
    const VerifyingContext vctx =
        VerifyingContext::ideal(derive_secret_key(seed), std::move(transcript));
    const bool accepted = verify_structured(vctx, proof, expr, input);
    std::cerr << (accepted ? "accept" : "reject") << "\n";
    return accepted ? kExitAccept : kExitReject;
}

int cmd_bench(const std::string& scheme, std::uint64_t n, const std::string& seed_hex,
              const std::string& format, std::uint64_t max_n) {
    if (n == 0 || (n & (n - 1)) != 0) {
        throw InvalidParams("--n must be a power of two");
    }
    MeasureParams params;
    params.scheme = parse_scheme(scheme);
    params.n = n;
    params.seed = parse_seed(seed_hex);
    params.max_n = max_n;
    const MeasuredReport report = measure(params);
    const ReportRow row = to_row(report);
    std::cout << emit_report({&row, 1}, parse_format(format));
    return kExitAccept;
}

int cmd_compare(std::uint64_t n, unsigned hash_bits, const std::string& format, bool measure_too,
                const std::string& seed_hex, std::uint64_t max_n) {
    std::vector<ReportRow> rows;
    for (const Scheme scheme :
         {Scheme::AndAggregation, Scheme::EmbeddedPath, Scheme::OrAggregation}) {
        rows.push_back(to_row(cost_model(scheme, n, hash_bits)));
    }
    if (measure_too) {
        for (const Scheme scheme :
             {Scheme::AndAggregation, Scheme::EmbeddedPath, Scheme::OrAggregation}) {
            MeasureParams params;
            params.scheme = scheme;
            params.n = n;
            params.seed = parse_seed(seed_hex);
            params.max_n = max_n;
            rows.push_back(to_row(measure(params)));
        }
    }
    std::cout << emit_report(rows, parse_format(format));
    return kExitAccept;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Merkle inclusion proofs with OR/AND aggregation"};
    app.require_subcommand(1);

    int exit_code = kExitAccept;

    // build
    auto* build = app.add_subcommand("build", "Build a tree snapshot from blocks");
    std::string build_input, build_out, build_split = "lines";
    build->add_option("--input", build_input, "Block source: directory or file")->required();
    build->add_option("--out", build_out, "Tree snapshot output path")->required();
    build->add_option("--split", build_split, "File splitting: lines|whole")
        ->check(CLI::IsMember({"lines", "whole"}));
    build->callback([&] { exit_code = cmd_build(build_input, build_out, build_split); });

    // prove
    auto* prove = app.add_subcommand("prove", "Produce an aggregate inclusion proof");
    std::string prove_tree, prove_blocks, prove_split = "lines", prove_mode, prove_seed,
                prove_out, prove_transcript;
    std::int64_t prove_leaf_index = -1;
    prove->add_option("--tree", prove_tree, "Tree snapshot")->required();
    prove->add_option("--blocks", prove_blocks, "Block source: directory or file")->required();
    prove->add_option("--split", prove_split, "File splitting: lines|whole")
        ->check(CLI::IsMember({"lines", "whole"}));
    prove->add_option("--mode", prove_mode, "or|and|embedded")->required();
    prove->add_option("--leaf-index", prove_leaf_index, "Leaf index for --mode embedded");
    prove->add_option("--seed", prove_seed, "32-byte hex seed")->required();
    prove->add_option("--out", prove_out, "Proof output path")->required();
    prove->add_option("--transcript", prove_transcript, "Transcript output path");
    prove->callback([&] {
        exit_code = cmd_prove(prove_tree, prove_blocks, prove_split, prove_mode,
                              prove_leaf_index, prove_seed, prove_out, prove_transcript);
    });

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Check a proof against an input");
    std::string verify_proof, verify_input, verify_root, verify_transcript, verify_seed;
    verify_cmd->add_option("--proof", verify_proof, "Proof file")->required();
    verify_cmd
        ->add_option("--input", verify_input,
                     "Hex digest, digest list file, or structured-input .json file")
        ->required();
    verify_cmd->add_option("--root", verify_root, "Trusted root (embedded proofs)");
    verify_cmd->add_option("--transcript", verify_transcript,
                           "Transcript file (transcript-backend proofs)");
    verify_cmd->add_option("--seed", verify_seed, "32-byte hex seed")->required();
    verify_cmd->callback([&] {
        exit_code =
            cmd_verify(verify_proof, verify_input, verify_root, verify_transcript, verify_seed);
    });

    // expr
    auto* expr = app.add_subcommand("expr", "Acceptance-expression operations");
    expr->require_subcommand(1);

    auto* expr_compile = expr->add_subcommand("compile", "Compile an expression over bound proofs");
    std::string ec_expr, ec_expr_file, ec_bindings, ec_seed, ec_out, ec_transcript_out;
    std::vector<std::string> ec_transcripts;
    expr_compile->add_option("--expr", ec_expr, "Expression text");
    expr_compile->add_option("--expr-file", ec_expr_file, "Expression file");
    expr_compile->add_option("--bindings", ec_bindings, "JSON object: atom name -> proof path")
        ->required();
    expr_compile->add_option("--seed", ec_seed, "32-byte hex seed")->required();
    expr_compile->add_option("--transcript", ec_transcripts,
                             "Transcript file(s) holding the bound proofs' statements");
    expr_compile->add_option("--out", ec_out, "Proof output path")->required();
    expr_compile->add_option("--out-transcript", ec_transcript_out,
                             "Write the extended transcript here");
    expr_compile->callback([&] {
        exit_code = cmd_expr_compile(ec_expr, ec_expr_file, ec_bindings, ec_seed, ec_transcripts,
                                     ec_out, ec_transcript_out);
    });

    auto* expr_verify = expr->add_subcommand("verify", "Verify a compiled expression proof");
    std::string ev_expr, ev_expr_file, ev_proof, ev_input, ev_seed, ev_transcript;
    expr_verify->add_option("--expr", ev_expr, "Expression text");
    expr_verify->add_option("--expr-file", ev_expr_file, "Expression file");
    expr_verify->add_option("--proof", ev_proof, "Proof file")->required();
    expr_verify->add_option("--input", ev_input, "Structured-input .json file")->required();
    expr_verify->add_option("--seed", ev_seed, "32-byte hex seed")->required();
    expr_verify->add_option("--transcript", ev_transcript, "Transcript file")->required();
    expr_verify->callback([&] {
        exit_code =
            cmd_expr_verify(ev_expr, ev_expr_file, ev_proof, ev_input, ev_seed, ev_transcript);
    });

    // bench
    auto* bench = app.add_subcommand("bench", "Measure one scheme at one size");
    std::string bench_scheme, bench_seed, bench_format = "json";
    std::uint64_t bench_n = 0, bench_max_n = kDefaultMeasureBound;
    bench->add_option("--scheme", bench_scheme, "or|and|embedded")->required();
    bench->add_option("--n", bench_n, "Leaf count (power of two)")->required();
    bench->add_option("--seed", bench_seed, "32-byte hex seed")->required();
    bench->add_option("--format", bench_format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    bench->add_option("--max-n", bench_max_n, "Scale bound for measured runs");
    bench->callback(
        [&] { exit_code = cmd_bench(bench_scheme, bench_n, bench_seed, bench_format, bench_max_n); });

    // compare
    auto* compare = app.add_subcommand("compare", "Cost-model comparison of all three schemes");
    std::uint64_t compare_n = 0, compare_max_n = kDefaultMeasureBound;
    unsigned compare_hash_bits = 256;
    std::string compare_format = "json", compare_seed(64, '0');
    bool compare_measure = false;
    compare->add_option("--n", compare_n, "Leaf count (power of two)")->required();
    compare->add_option("--hash-bits", compare_hash_bits, "Hash width in bits");
    compare->add_option("--format", compare_format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    compare->add_flag("--measure", compare_measure, "Append measured rows");
    compare->add_option("--seed", compare_seed, "32-byte hex seed for measured rows");
    compare->add_option("--max-n", compare_max_n, "Scale bound for measured runs");
    compare->callback([&] {
        exit_code = cmd_compare(compare_n, compare_hash_bits, compare_format, compare_measure,
                                compare_seed, compare_max_n);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return exit_code;
}

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

#include <map>
#include <string>

#include "oragg/backend.hpp"

namespace oragg {

/// Acceptance function over named proof atoms: AND and OR composition,
/// nothing else. And/Or nodes have arity >= 2; 1-ary nodes cannot be
/// produced by the grammar.
class AcceptanceExpr {
  public:
    enum class Kind : Byte { Atom = 1, And = 2, Or = 3 };

    static AcceptanceExpr atom(std::string name);
    static AcceptanceExpr and_of(std::vector<AcceptanceExpr> children);
    static AcceptanceExpr or_of(std::vector<AcceptanceExpr> children);

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    std::span<const AcceptanceExpr> children() const { return children_; }

    bool structurally_equal(const AcceptanceExpr& other) const;

  private:
    AcceptanceExpr() = default;

    Kind kind_ = Kind::Atom;
    std::string name_;
    std::vector<AcceptanceExpr> children_;
};

/// Grammar:
///   expr     := or_expr
///   or_expr  := and_expr ("OR" and_expr)*
///   and_expr := atom ("AND" atom)*
///   atom     := identifier | "(" expr ")"
/// Keywords are case-sensitive upper case; AND binds tighter than OR;
/// consecutive runs of one operator become a single n-ary node.
/// Throws SyntaxError with a 1-based line/column and the offending token.
AcceptanceExpr parse_expr(std::string_view text);

/// Prints a form that re-parses to a structurally identical tree.
std::string pretty_print(const AcceptanceExpr& expr);

/// Plain boolean evaluation against a truth assignment.
bool eval_reference(const AcceptanceExpr& expr, const std::map<std::string, bool>& truth);

using Bindings = std::map<std::string, Proof>;

/// Structural recursion: atoms take their bound proofs, And nodes aggregate
/// with AND, Or nodes fold pairwise OR aggregation. The root proof is
/// re-tagged with kind Expr.
Proof compile_expr(ProvingContext& ctx, const AcceptanceExpr& expr, const Bindings& bindings);

/// Rewrites an expression-shaped input onto the compiled statement's shape:
/// n-ary OR selectors map onto the left fold of pairwise aggregation.
/// Throws ShapeMismatch when the input tree does not mirror the expression.
VerificationInput lower_input(const AcceptanceExpr& expr, const VerificationInput& input);

/// Verdict for a compiled expression proof against an expression-shaped
/// input. Throws ShapeMismatch for an incompatible input tree.
bool verify_structured(const VerifyingContext& vctx, const Proof& proof,
                       const AcceptanceExpr& expr, const VerificationInput& input);

}  // namespace oragg

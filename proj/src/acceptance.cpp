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

#include "oragg/acceptance.hpp"

#include <cctype>

#include "oragg/aggregation.hpp"

namespace oragg {

AcceptanceExpr AcceptanceExpr::atom(std::string name) {
    AcceptanceExpr e;
    e.kind_ = Kind::Atom;
    e.name_ = std::move(name);
    return e;
}

AcceptanceExpr AcceptanceExpr::and_of(std::vector<AcceptanceExpr> children) {
    if (children.size() < 2) {
        throw InvalidParams("And nodes require arity >= 2");
    }
    AcceptanceExpr e;
    e.kind_ = Kind::And;
    e.children_ = std::move(children);
    return e;
}

AcceptanceExpr AcceptanceExpr::or_of(std::vector<AcceptanceExpr> children) {
    if (children.size() < 2) {
        throw InvalidParams("Or nodes require arity >= 2");
    }
    AcceptanceExpr e;
    e.kind_ = Kind::Or;
    e.children_ = std::move(children);
    return e;
}

bool AcceptanceExpr::structurally_equal(const AcceptanceExpr& other) const {
    if (kind_ != other.kind_ || name_ != other.name_ ||
        children_.size() != other.children_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < children_.size(); ++i) {
        if (!children_[i].structurally_equal(other.children_[i])) {
            return false;
        }
    }
    return true;
}

namespace {

struct Token {
    enum class Type { Ident, KwAnd, KwOr, LParen, RParen, End };

    Type type = Type::End;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;
};

class Lexer {
  public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            if (text_[pos_] == '\n') {
                ++line_;
                column_ = 1;
            } else {
                ++column_;
            }
            ++pos_;
        }
        current_.line = line_;
        current_.column = column_;
        if (pos_ >= text_.size()) {
            current_.type = Token::Type::End;
            current_.text.clear();
            return;
        }
        const char c = text_[pos_];
        if (c == '(') {
            current_ = {Token::Type::LParen, "(", line_, column_};
            ++pos_;
            ++column_;
            return;
        }
        if (c == ')') {
            current_ = {Token::Type::RParen, ")", line_, column_};
            ++pos_;
            ++column_;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t end = pos_;
            while (end < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
                ++end;
            }
            std::string word(text_.substr(pos_, end - pos_));
            column_ += end - pos_;
            pos_ = end;
            if (word == "AND") {
                current_ = {Token::Type::KwAnd, std::move(word), current_.line, current_.column};
            } else if (word == "OR") {
                current_ = {Token::Type::KwOr, std::move(word), current_.line, current_.column};
            } else {
                current_ = {Token::Type::Ident, std::move(word), current_.line, current_.column};
            }
            return;
        }
        throw SyntaxError(line_, column_, std::string(1, c), "unexpected character");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
    Token current_;
};

[[noreturn]] void fail(const Token& t, const std::string& message) {
    throw SyntaxError(t.line, t.column, t.text.empty() ? "<end of input>" : t.text, message);
}

AcceptanceExpr parse_or(Lexer& lex);

AcceptanceExpr parse_atom(Lexer& lex) {
    const Token t = lex.take();
    switch (t.type) {
        case Token::Type::Ident:
            return AcceptanceExpr::atom(t.text);
        case Token::Type::LParen: {
            AcceptanceExpr inner = parse_or(lex);
            const Token close = lex.take();
            if (close.type != Token::Type::RParen) {
                fail(close, "expected ')'");
            }
            return inner;
        }
        default:
            fail(t, "expected an atom or '('");
    }
}

AcceptanceExpr parse_and(Lexer& lex) {
    std::vector<AcceptanceExpr> operands;
    operands.push_back(parse_atom(lex));
    while (lex.peek().type == Token::Type::KwAnd) {
        lex.take();
        operands.push_back(parse_atom(lex));
    }
    if (operands.size() == 1) {
        return std::move(operands[0]);
    }
    return AcceptanceExpr::and_of(std::move(operands));
}

AcceptanceExpr parse_or(Lexer& lex) {
    std::vector<AcceptanceExpr> operands;
    operands.push_back(parse_and(lex));
    while (lex.peek().type == Token::Type::KwOr) {
        lex.take();
        operands.push_back(parse_and(lex));
    }
    if (operands.size() == 1) {
        return std::move(operands[0]);
    }
    return AcceptanceExpr::or_of(std::move(operands));
}

}  // namespace

AcceptanceExpr parse_expr(std::string_view text) {
    Lexer lex(text);
    AcceptanceExpr expr = parse_or(lex);
    const Token t = lex.peek();
    if (t.type != Token::Type::End) {
        fail(t, "expected end of input");
    }
    return expr;
}

namespace {

// `top` marks the root call; elsewhere the parent's kind decides whether
// parentheses are needed to survive re-parsing without flattening.
void print_expr(const AcceptanceExpr& expr, bool top, AcceptanceExpr::Kind parent,
                std::string& out) {
    switch (expr.kind()) {
        case AcceptanceExpr::Kind::Atom:
            out += expr.name();
            return;
        case AcceptanceExpr::Kind::And: {
            // An And under another And would flatten into it.
            const bool parens = !top && parent == AcceptanceExpr::Kind::And;
            if (parens) out += '(';
            for (std::size_t i = 0; i < expr.children().size(); ++i) {
                if (i > 0) out += " AND ";
                print_expr(expr.children()[i], false, AcceptanceExpr::Kind::And, out);
            }
            if (parens) out += ')';
            return;
        }
        case AcceptanceExpr::Kind::Or: {
            // An Or under an And (precedence) or under an Or (flattening)
            // both need parentheses.
            const bool parens = !top;
            if (parens) out += '(';
            for (std::size_t i = 0; i < expr.children().size(); ++i) {
                if (i > 0) out += " OR ";
                print_expr(expr.children()[i], false, AcceptanceExpr::Kind::Or, out);
            }
            if (parens) out += ')';
            return;
        }
    }
}

}  // namespace

std::string pretty_print(const AcceptanceExpr& expr) {
    std::string out;
    print_expr(expr, true, AcceptanceExpr::Kind::Atom, out);
    return out;
}

bool eval_reference(const AcceptanceExpr& expr, const std::map<std::string, bool>& truth) {
    switch (expr.kind()) {
        case AcceptanceExpr::Kind::Atom: {
            auto it = truth.find(expr.name());
            if (it == truth.end()) {
                throw UnboundAtom(expr.name());
            }
            return it->second;
        }
        case AcceptanceExpr::Kind::And:
            for (const AcceptanceExpr& child : expr.children()) {
                if (!eval_reference(child, truth)) {
                    return false;
                }
            }
            return true;
        case AcceptanceExpr::Kind::Or:
            for (const AcceptanceExpr& child : expr.children()) {
                if (eval_reference(child, truth)) {
                    return true;
                }
            }
            return false;
    }
    return false;
}

namespace {

Proof compile_node(ProvingContext& ctx, const AcceptanceExpr& expr, const Bindings& bindings) {
    switch (expr.kind()) {
        case AcceptanceExpr::Kind::Atom: {
            auto it = bindings.find(expr.name());
            if (it == bindings.end()) {
                throw UnboundAtom(expr.name());
            }
            if (it->second.backend_id != BackendId::IdealTranscript) {
                throw BackendMismatch("bound proof for '" + expr.name() +
                                      "' is not a transcript-backend proof");
            }
            return it->second;
        }
        case AcceptanceExpr::Kind::And: {
            std::vector<Proof> parts;
            parts.reserve(expr.children().size());
            for (const AcceptanceExpr& child : expr.children()) {
                parts.push_back(compile_node(ctx, child, bindings));
            }
            return aggregate_and(ctx, parts);
        }
        case AcceptanceExpr::Kind::Or: {
            std::vector<Proof> parts;
            parts.reserve(expr.children().size());
            for (const AcceptanceExpr& child : expr.children()) {
                parts.push_back(compile_node(ctx, child, bindings));
            }
            return aggregate_or_many(ctx, parts);
        }
    }
    throw InvalidParams("unreachable expression kind");
}

}  // namespace

Proof compile_expr(ProvingContext& ctx, const AcceptanceExpr& expr, const Bindings& bindings) {
    Proof proof = compile_node(ctx, expr, bindings);
    proof.kind = ProofKind::Expr;
    proof.authenticator = make_authenticator(ctx.secret_key(), ProofKind::Expr, proof.descriptor);
    return proof;
}

VerificationInput lower_input(const AcceptanceExpr& expr, const VerificationInput& input) {
    switch (expr.kind()) {
        case AcceptanceExpr::Kind::Atom:
            if (input.kind() != VerificationInput::Kind::Atom) {
                throw ShapeMismatch("expected an atom input for atom '" + expr.name() + "'");
            }
            return input;
        case AcceptanceExpr::Kind::And: {
            if (input.kind() != VerificationInput::Kind::And ||
                input.children().size() != expr.children().size()) {
                throw ShapeMismatch("conjunction input arity does not match expression");
            }
            std::vector<VerificationInput> lowered;
            lowered.reserve(expr.children().size());
            for (std::size_t i = 0; i < expr.children().size(); ++i) {
                lowered.push_back(lower_input(expr.children()[i], input.children()[i]));
            }
            return VerificationInput::and_of(std::move(lowered));
        }
        case AcceptanceExpr::Kind::Or: {
            if (input.kind() != VerificationInput::Kind::Or) {
                throw ShapeMismatch("expected a branch selection for a disjunction");
            }
            const std::size_t arity = expr.children().size();
            const std::size_t selected = input.selected();
            if (selected >= arity) {
                throw ShapeMismatch("branch selector " + std::to_string(selected) +
                                    " out of range for arity " + std::to_string(arity));
            }
            VerificationInput lowered = lower_input(expr.children()[selected], input.inner());
            // The compiled statement is the left fold of pairwise OR:
            // AnyOf(AnyOf(...AnyOf(c0, c1)..., c_{m-2}), c_{m-1}). Selecting
            // child k descends the right branch once at fold height k (or
            // the innermost left slot for k = 0).
            if (selected == 0) {
                lowered = VerificationInput::or_branch(0, std::move(lowered));
                for (std::size_t level = 2; level < arity; ++level) {
                    lowered = VerificationInput::or_branch(0, std::move(lowered));
                }
            } else {
                lowered = VerificationInput::or_branch(1, std::move(lowered));
                for (std::size_t level = selected + 1; level < arity; ++level) {
                    lowered = VerificationInput::or_branch(0, std::move(lowered));
                }
            }
            return lowered;
        }
    }
    throw InvalidParams("unreachable expression kind");
}

bool verify_structured(const VerifyingContext& vctx, const Proof& proof,
                       const AcceptanceExpr& expr, const VerificationInput& input) {
    VerificationInput lowered = lower_input(expr, input);
    return verify(vctx, proof, PublicInput::structured(std::move(lowered)));
}

}  // namespace oragg

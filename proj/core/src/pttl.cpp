#include "bpmc/pttl.hpp"

#include "bpmc/errors.hpp"

#include <cctype>
#include <utility>

namespace bpmc {

FormulaPtr PttlFormula::make_true() {
    auto f = std::make_shared<PttlFormula>();
    f->kind = StateKind::True;
    return f;
}

FormulaPtr PttlFormula::make_atom(std::string name) {
    auto f = std::make_shared<PttlFormula>();
    f->kind = StateKind::Atom;
    f->atom = std::move(name);
    return f;
}

FormulaPtr PttlFormula::make_not(FormulaPtr inner) {
    auto f = std::make_shared<PttlFormula>();
    f->kind = StateKind::Not;
    f->child = std::move(inner);
    return f;
}

FormulaPtr PttlFormula::make_and(FormulaPtr a, FormulaPtr b) {
    auto f = std::make_shared<PttlFormula>();
    f->kind = StateKind::And;
    f->left = std::move(a);
    f->right = std::move(b);
    return f;
}

FormulaPtr PttlFormula::make_prob(PathKind path, FormulaPtr a, FormulaPtr b, CmpOp op,
                                  Rational threshold) {
    auto f = std::make_shared<PttlFormula>();
    f->kind = StateKind::Prob;
    f->path = path;
    f->path_left = std::move(a);
    f->path_right = std::move(b);
    f->op = op;
    f->threshold = std::move(threshold);
    return f;
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case StateKind::True: return true;
        case StateKind::Atom: return a->atom == b->atom;
        case StateKind::Not: return equal(a->child, b->child);
        case StateKind::And: return equal(a->left, b->left) && equal(a->right, b->right);
        case StateKind::Prob:
            return a->path == b->path && a->op == b->op && a->threshold == b->threshold &&
                   equal(a->path_left, b->path_left) && equal(a->path_right, b->path_right);
    }
    return false;
}

bool is_qualitative(const FormulaPtr& formula) {
    if (!formula) return true;
    switch (formula->kind) {
        case StateKind::True:
        case StateKind::Atom:
            return true;
        case StateKind::Not:
            return is_qualitative(formula->child);
        case StateKind::And:
            return is_qualitative(formula->left) && is_qualitative(formula->right);
        case StateKind::Prob:
            if (formula->threshold != 0 && formula->threshold != 1) return false;
            return is_qualitative(formula->path_left) && is_qualitative(formula->path_right);
    }
    return true;
}

namespace {

const char* path_text(PathKind path) {
    switch (path) {
        case PathKind::AX: return "AX";
        case PathKind::EX: return "EX";
        case PathKind::AU: return "AU";
        case PathKind::EU: return "EU";
        case PathKind::AR: return "AR";
        case PathKind::ER: return "ER";
    }
    return "?";
}

// Printing precedence: Not binds tighter than And.
void print_into(const FormulaPtr& f, std::string& out, bool parenthesise_and) {
    switch (f->kind) {
        case StateKind::True:
            out += "true";
            break;
        case StateKind::Atom:
            out += f->atom;
            break;
        case StateKind::Not:
            out += '!';
            print_into(f->child, out, /*parenthesise_and=*/true);
            break;
        case StateKind::And: {
            if (parenthesise_and) out += '(';
            print_into(f->left, out, /*parenthesise_and=*/true);
            out += " & ";
            print_into(f->right, out, /*parenthesise_and=*/true);
            if (parenthesise_and) out += ')';
            break;
        }
        case StateKind::Prob: {
            out += "[ ";
            if (f->path == PathKind::AX || f->path == PathKind::EX) {
                out += path_text(f->path);
                out += ' ';
                print_into(f->path_left, out, true);
            } else {
                print_into(f->path_left, out, true);
                out += ' ';
                out += path_text(f->path);
                out += ' ';
                print_into(f->path_right, out, true);
            }
            out += " ] ";
            out += cmp_op_text(f->op);
            out += ' ';
            out += to_ratio_string(f->threshold);
            break;
        }
    }
}

// --- tokenizer -------------------------------------------------------------

enum class TokenKind { Ident, Not, And, Or, Implies, LParen, RParen, LBracket, RBracket, Cmp, Number, End };

struct Token {
    TokenKind kind;
    std::string text;
    std::size_t position;
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        current_.position = pos_;
        if (pos_ >= text_.size()) {
            current_ = {TokenKind::End, "", pos_};
            return;
        }
        char c = text_[pos_];
        if (c == '!') { current_ = {TokenKind::Not, "!", pos_++}; return; }
        if (c == '&') { current_ = {TokenKind::And, "&", pos_++}; return; }
        if (c == '|') { current_ = {TokenKind::Or, "|", pos_++}; return; }
        if (c == '(') { current_ = {TokenKind::LParen, "(", pos_++}; return; }
        if (c == ')') { current_ = {TokenKind::RParen, ")", pos_++}; return; }
        if (c == '[') { current_ = {TokenKind::LBracket, "[", pos_++}; return; }
        if (c == ']') { current_ = {TokenKind::RBracket, "]", pos_++}; return; }
        if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
            current_ = {TokenKind::Implies, "->", pos_};
            pos_ += 2;
            return;
        }
        if (c == '<' || c == '>') {
            std::size_t start = pos_++;
            std::string op(1, c);
            if (pos_ < text_.size() && text_[pos_] == '=') {
                op += '=';
                ++pos_;
            }
            current_ = {TokenKind::Cmp, op, start};
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/' ||
                    text_[pos_] == '.')) {
                ++pos_;
            }
            current_ = {TokenKind::Number, text_.substr(start, pos_ - start), start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                           text_[pos_] == '_')) {
                ++pos_;
            }
            current_ = {TokenKind::Ident, text_.substr(start, pos_ - start), start};
            return;
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    Token current_{TokenKind::End, "", 0};
};

bool is_path_keyword(const std::string& word) {
    return word == "AX" || word == "EX" || word == "AU" || word == "EU" || word == "AR" ||
           word == "ER" || word == "AF" || word == "EF" || word == "AG" || word == "EG";
}

class Parser {
  public:
    explicit Parser(const std::string& text) : lexer_(text) {}

    FormulaPtr parse() {
        FormulaPtr f = parse_implies();
        if (lexer_.peek().kind != TokenKind::End) {
            throw SyntaxError("trailing input after formula", lexer_.peek().position);
        }
        return f;
    }

  private:
    FormulaPtr parse_implies() {
        FormulaPtr lhs = parse_or();
        if (lexer_.peek().kind == TokenKind::Implies) {
            lexer_.take();
            FormulaPtr rhs = parse_implies();  // right-associative
            // a -> b  ==  !(a & !b)
            return PttlFormula::make_not(
                PttlFormula::make_and(lhs, PttlFormula::make_not(rhs)));
        }
        return lhs;
    }

    FormulaPtr parse_or() {
        FormulaPtr lhs = parse_and();
        while (lexer_.peek().kind == TokenKind::Or) {
            lexer_.take();
            FormulaPtr rhs = parse_and();
            // a | b  ==  !(!a & !b)
            lhs = PttlFormula::make_not(PttlFormula::make_and(PttlFormula::make_not(lhs),
                                                              PttlFormula::make_not(rhs)));
        }
        return lhs;
    }

    FormulaPtr parse_and() {
        FormulaPtr lhs = parse_unary();
        while (lexer_.peek().kind == TokenKind::And) {
            lexer_.take();
            lhs = PttlFormula::make_and(lhs, parse_unary());
        }
        return lhs;
    }

    FormulaPtr parse_unary() {
        const Token& t = lexer_.peek();
        switch (t.kind) {
            case TokenKind::Not:
                lexer_.take();
                return PttlFormula::make_not(parse_unary());
            case TokenKind::LParen: {
                lexer_.take();
                FormulaPtr inner = parse_implies();
                expect(TokenKind::RParen, "')'");
                return inner;
            }
            case TokenKind::LBracket:
                return parse_prob();
            case TokenKind::Ident: {
                Token word = lexer_.take();
                if (word.text == "true") return PttlFormula::make_true();
                if (word.text == "false") return PttlFormula::make_not(PttlFormula::make_true());
                if (is_path_keyword(word.text)) {
                    throw SyntaxError("path operator '" + word.text + "' outside [ ... ]",
                                      word.position);
                }
                return PttlFormula::make_atom(word.text);
            }
            default:
                throw SyntaxError("expected a state formula", t.position);
        }
    }

    FormulaPtr parse_prob() {
        expect(TokenKind::LBracket, "'['");
        PathKind path;
        FormulaPtr a, b;
        const Token& head = lexer_.peek();
        if (head.kind == TokenKind::Ident &&
            (head.text == "AX" || head.text == "EX" || head.text == "AF" || head.text == "EF" ||
             head.text == "AG" || head.text == "EG")) {
            Token op = lexer_.take();
            FormulaPtr operand = parse_implies();
            if (op.text == "AX") { path = PathKind::AX; a = operand; }
            else if (op.text == "EX") { path = PathKind::EX; a = operand; }
            else if (op.text == "AF") { path = PathKind::AU; a = PttlFormula::make_true(); b = operand; }
            else if (op.text == "EF") { path = PathKind::EU; a = PttlFormula::make_true(); b = operand; }
            else if (op.text == "AG") {
                path = PathKind::AR;
                a = PttlFormula::make_not(PttlFormula::make_true());
                b = operand;
            } else { // EG
                path = PathKind::ER;
                a = PttlFormula::make_not(PttlFormula::make_true());
                b = operand;
            }
        } else {
            a = parse_implies();
            Token op = expect(TokenKind::Ident, "a binary path operator");
            if (op.text == "AU") path = PathKind::AU;
            else if (op.text == "EU") path = PathKind::EU;
            else if (op.text == "AR") path = PathKind::AR;
            else if (op.text == "ER") path = PathKind::ER;
            else throw SyntaxError("unknown path operator '" + op.text + "'", op.position);
            b = parse_implies();
        }
        expect(TokenKind::RBracket, "']'");
        Token cmp = expect(TokenKind::Cmp, "a comparison operator");
        CmpOp op;
        if (cmp.text == "<") op = CmpOp::Lt;
        else if (cmp.text == "<=") op = CmpOp::Le;
        else if (cmp.text == ">=") op = CmpOp::Ge;
        else op = CmpOp::Gt;
        Token num = expect(TokenKind::Number, "a rational threshold");
        auto threshold = parse_rational(num.text);
        if (!threshold) throw SyntaxError("bad rational '" + num.text + "'", num.position);
        if (*threshold < 0 || *threshold > 1) {
            throw SyntaxError("threshold must lie in [0,1]", num.position);
        }
        return PttlFormula::make_prob(path, std::move(a), std::move(b), op, *threshold);
    }

    Token expect(TokenKind kind, const std::string& what) {
        const Token& t = lexer_.peek();
        if (t.kind != kind) throw SyntaxError("expected " + what, t.position);
        return lexer_.take();
    }

    Lexer lexer_;
};

}  // namespace

std::string print_formula(const FormulaPtr& formula) {
    std::string out;
    print_into(formula, out, false);
    return out;
}

FormulaPtr parse_formula(const std::string& text) {
    Parser parser(text);
    return parser.parse();
}

}  // namespace bpmc

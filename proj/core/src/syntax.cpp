#include "kf/syntax.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <vector>

#include "kf/error.hpp"

namespace kf {

namespace {

enum class Tok {
    ident,
    lparen,
    rparen,
    comma,
    dot,
    neg,
    conj,
    disj,
    impl,
    iff,
    bottom,
    forall,
    exists,
    end,
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

const char* describe(Tok t) {
    switch (t) {
        case Tok::ident: return "identifier";
        case Tok::lparen: return "'('";
        case Tok::rparen: return "')'";
        case Tok::comma: return "','";
        case Tok::dot: return "'.'";
        case Tok::neg: return "'~'";
        case Tok::conj: return "'&'";
        case Tok::disj: return "'|'";
        case Tok::impl: return "'->'";
        case Tok::iff: return "'<->'";
        case Tok::bottom: return "'false'";
        case Tok::forall: return "'forall'";
        case Tok::exists: return "'exists'";
        case Tok::end: return "end of input";
    }
    return "token";
}

struct UnicodeAlias {
    std::string_view bytes;
    Tok kind;
};

constexpr UnicodeAlias kUnicodeAliases[] = {
    {"⊥", Tok::bottom}, {"¬", Tok::neg},    {"∧", Tok::conj},
    {"∨", Tok::disj},   {"→", Tok::impl},   {"↔", Tok::iff},
    {"∀", Tok::forall}, {"∃", Tok::exists},
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t column = 1;
    std::size_t i = 0;
    auto push = [&](Tok kind, std::string tok_text, std::size_t bytes, std::size_t width) {
        out.push_back(Token{kind, std::move(tok_text), line, column});
        i += bytes;
        column += width;
    };
    while (i < text.size()) {
        char c = text[i];
        auto u = static_cast<unsigned char>(c);
        if (c == '\n') {
            ++line;
            column = 1;
            ++i;
            continue;
        }
        if (std::isspace(u)) {
            ++i;
            ++column;
            continue;
        }
        if (std::isalpha(u) || c == '_') {
            std::size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
                ++j;
            }
            std::string word(text.substr(i, j - i));
            Tok kind = Tok::ident;
            if (word == "false") kind = Tok::bottom;
            else if (word == "forall") kind = Tok::forall;
            else if (word == "exists") kind = Tok::exists;
            push(kind, word, j - i, j - i);
            continue;
        }
        switch (c) {
            case '(': push(Tok::lparen, "(", 1, 1); continue;
            case ')': push(Tok::rparen, ")", 1, 1); continue;
            case ',': push(Tok::comma, ",", 1, 1); continue;
            case '.': push(Tok::dot, ".", 1, 1); continue;
            case '~': push(Tok::neg, "~", 1, 1); continue;
            case '&': push(Tok::conj, "&", 1, 1); continue;
            case '|': push(Tok::disj, "|", 1, 1); continue;
            default: break;
        }
        if (text.substr(i, 2) == "->") {
            push(Tok::impl, "->", 2, 2);
            continue;
        }
        if (text.substr(i, 3) == "<->") {
            push(Tok::iff, "<->", 3, 3);
            continue;
        }
        bool matched = false;
        for (const auto& alias : kUnicodeAliases) {
            if (text.substr(i, alias.bytes.size()) == alias.bytes) {
                push(alias.kind, std::string(alias.bytes), alias.bytes.size(), 1);
                matched = true;
                break;
            }
        }
        if (matched) continue;
        std::string shown = u < 0x80 ? std::string(1, c) : std::string("non-ASCII character");
        throw ParseError(ParseError::Kind::syntax, line, column, "unexpected " + shown);
    }
    out.push_back(Token{Tok::end, "", line, column});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

    Formula parse_top() {
        Formula f = formula();
        expect(Tok::end);
        return f;
    }

    Term parse_single_term() {
        Term t = term();
        expect(Tok::end);
        return t;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_++]; }
    bool accept(Tok kind) {
        if (peek().kind != kind) return false;
        ++pos_;
        return true;
    }
    const Token& expect(Tok kind) {
        if (peek().kind != kind) {
            const auto& t = peek();
            throw ParseError(ParseError::Kind::syntax, t.line, t.column,
                             std::string("expected ") + describe(kind) + ", found " +
                                 describe(t.kind) + (t.text.empty() ? "" : " '" + t.text + "'"));
        }
        return next();
    }

    Formula formula() {
        Formula lhs = implication();
        if (accept(Tok::iff)) {
            Formula rhs = implication();
            return Formula::iff(lhs, rhs);
        }
        return lhs;
    }

    Formula implication() {
        Formula lhs = disjunction();
        if (accept(Tok::impl)) return Formula::impl(lhs, implication());
        return lhs;
    }

    Formula disjunction() {
        Formula lhs = conjunction();
        while (accept(Tok::disj)) lhs = Formula::disj(lhs, conjunction());
        return lhs;
    }

    Formula conjunction() {
        Formula lhs = unary();
        while (accept(Tok::conj)) lhs = Formula::conj(lhs, unary());
        return lhs;
    }

    Formula unary() {
        if (accept(Tok::neg)) return Formula::neg(unary());
        if (peek().kind == Tok::forall || peek().kind == Tok::exists) {
            bool universal = next().kind == Tok::forall;
            std::string var = expect(Tok::ident).text;
            expect(Tok::dot);
            Formula body = formula();
            return universal ? Formula::forall(var, body) : Formula::exists(var, body);
        }
        return primary();
    }

    Formula primary() {
        const Token& t = peek();
        if (accept(Tok::bottom)) return Formula::bottom();
        if (accept(Tok::lparen)) {
            Formula f = formula();
            expect(Tok::rparen);
            return f;
        }
        if (t.kind == Tok::ident) {
            Token name = next();
            std::vector<Term> args;
            if (accept(Tok::lparen)) args = term_list();
            check_arity(predicates_, "predicate", name, args.size());
            return Formula::atom(name.text, std::move(args));
        }
        throw ParseError(ParseError::Kind::syntax, t.line, t.column,
                         std::string("expected a formula, found ") + describe(t.kind) +
                             (t.text.empty() ? "" : " '" + t.text + "'"));
    }

    std::vector<Term> term_list() {
        std::vector<Term> args;
        if (accept(Tok::rparen)) return args;
        args.push_back(term());
        while (accept(Tok::comma)) args.push_back(term());
        expect(Tok::rparen);
        return args;
    }

    Term term() {
        Token name = expect(Tok::ident);
        if (accept(Tok::lparen)) {
            auto args = term_list();
            check_arity(functions_, "function", name, args.size());
            return Term::application(name.text, std::move(args));
        }
        return Term::variable(name.text);
    }

    static void check_arity(std::map<std::string, std::size_t>& table, const char* what,
                            const Token& name, std::size_t arity) {
        auto [it, inserted] = table.emplace(name.text, arity);
        if (!inserted && it->second != arity) {
            throw ParseError(ParseError::Kind::arity, name.line, name.column,
                             std::string(what) + " '" + name.text + "' used with arity " +
                                 std::to_string(arity) + ", earlier with arity " +
                                 std::to_string(it->second));
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::map<std::string, std::size_t> predicates_;
    std::map<std::string, std::size_t> functions_;
};

struct Glyphs {
    const char* bottom;
    const char* neg;
    const char* conj;
    const char* disj;
    const char* impl;
    const char* forall;
    const char* exists;
};

constexpr Glyphs kAscii{"false", "~", " & ", " | ", " -> ", "forall ", "exists "};
constexpr Glyphs kUnicode{"⊥", "¬", " ∧ ", " ∨ ", " → ", "∀",
                          "∃"};

bool is_double_negation(const Formula& f) {
    return f.is_negation() && f.negated().is_negation();
}

class Printer {
public:
    explicit Printer(const Glyphs& g) : g_(g) {}

    // right_open: nothing follows this subformula in the enclosing output,
    // so a trailing quantifier body cannot swallow anything.
    void emit(const Formula& f, bool right_open) {
        switch (f.kind()) {
            case Connective::bottom:
                out_ += g_.bottom;
                return;
            case Connective::atom:
                out_ += f.predicate();
                if (!f.arguments().empty()) emit_args(f.arguments());
                return;
            case Connective::forall:
            case Connective::exists:
                out_ += f.kind() == Connective::forall ? g_.forall : g_.exists;
                out_ += f.variable();
                out_ += ". ";
                emit(f.body(), right_open);
                return;
            case Connective::conj:
            case Connective::disj:
            case Connective::impl:
                break;
        }
        if (f.is_negation()) {
            if (is_double_negation(f)) {
                out_ += g_.neg;
                out_ += g_.neg;
                Formula inner = f.negated().negated();
                operand(inner, right_open, is_double_negation(inner));
            } else {
                out_ += g_.neg;
                operand(f.negated(), right_open, false);
            }
            return;
        }
        operand(f.left(), false, false);
        out_ += f.kind() == Connective::conj ? g_.conj
              : f.kind() == Connective::disj ? g_.disj
                                             : g_.impl;
        operand(f.right(), right_open, false);
    }

    void emit(const Term& t) {
        out_ += t.name();
        if (!t.is_variable()) emit_args(t.arguments());
    }

    std::string take() { return std::move(out_); }

private:
    void operand(const Formula& f, bool right_open, bool force_parens) {
        bool parens = force_parens || (f.is_binary() && !f.is_negation()) ||
                      (!right_open && ends_with_quantifier(f));
        if (parens) {
            out_ += '(';
            emit(f, true);
            out_ += ')';
        } else {
            emit(f, right_open);
        }
    }

    // Whether the printed form of f ends in an unparenthesised quantifier body.
    static bool ends_with_quantifier(const Formula& f) {
        if (f.is_quantifier()) return true;
        if (f.is_negation()) {
            Formula inner = is_double_negation(f) ? f.negated().negated() : f.negated();
            if (is_double_negation(f) && is_double_negation(inner)) return false;
            if (inner.is_binary() && !inner.is_negation()) return false;
            return ends_with_quantifier(inner);
        }
        return false;
    }

    void emit_args(std::span<const Term> args) {
        out_ += '(';
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (i) out_ += ", ";
            emit(args[i]);
        }
        out_ += ')';
    }

    const Glyphs& g_;
    std::string out_;
};

}  // namespace

Formula parse(std::string_view text) { return Parser(text).parse_top(); }

Term parse_term(std::string_view text) { return Parser(text).parse_single_term(); }

std::string render(const Formula& formula, Style style) {
    Printer p(style == Style::unicode ? kUnicode : kAscii);
    p.emit(formula, true);
    return p.take();
}

std::string render(const Term& term) {
    Printer p(kAscii);
    p.emit(term);
    return p.take();
}

bool in_clprime_fragment(const Formula& formula) {
    switch (formula.kind()) {
        case Connective::atom: return true;
        case Connective::disj:
            return in_clprime_fragment(formula.left()) && in_clprime_fragment(formula.right());
        case Connective::exists: return in_clprime_fragment(formula.body());
        case Connective::impl:
            return formula.is_negation() && in_clprime_fragment(formula.negated());
        case Connective::bottom:
        case Connective::conj:
        case Connective::forall:
            return false;
    }
    return false;
}

}  // namespace kf

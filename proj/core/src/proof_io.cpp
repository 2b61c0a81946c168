#include "kf/proof_io.hpp"

#include <cctype>
#include <vector>

#include "kf/error.hpp"
#include "kf/syntax.hpp"

namespace kf {

namespace {

struct Sexpr {
    enum class Kind { symbol, string, list };
    Kind kind;
    std::string text;
    std::vector<Sexpr> items;
    std::size_t line = 0;
    std::size_t column = 0;

    static Sexpr symbol(std::string s) { return {Kind::symbol, std::move(s), {}}; }
    static Sexpr string(std::string s) { return {Kind::string, std::move(s), {}}; }
    static Sexpr list(std::vector<Sexpr> items) { return {Kind::list, {}, std::move(items)}; }
};

class Reader {
public:
    explicit Reader(std::string_view text) : text_(text) {}

    std::vector<Sexpr> read_all() {
        std::vector<Sexpr> out;
        skip();
        while (pos_ < text_.size()) {
            out.push_back(read());
            skip();
        }
        return out;
    }

private:
    [[noreturn]] void error(const std::string& msg) const {
        throw ParseError(ParseError::Kind::syntax, line_, column_, msg);
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == ';') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    Sexpr read() {
        skip();
        if (pos_ >= text_.size()) error("unexpected end of input");
        std::size_t line = line_, column = column_;
        char c = text_[pos_];
        Sexpr out;
        if (c == '(') {
            advance();
            std::vector<Sexpr> items;
            skip();
            while (pos_ < text_.size() && text_[pos_] != ')') {
                items.push_back(read());
                skip();
            }
            if (pos_ >= text_.size()) {
                line_ = line;
                column_ = column;
                error("unclosed '('");
            }
            advance();
            out = Sexpr::list(std::move(items));
        } else if (c == ')') {
            error("unexpected ')'");
        } else if (c == '"') {
            advance();
            std::string s;
            while (true) {
                if (pos_ >= text_.size()) {
                    line_ = line;
                    column_ = column;
                    error("unterminated string");
                }
                char d = text_[pos_];
                if (d == '"') {
                    advance();
                    break;
                }
                if (d == '\\') {
                    advance();
                    if (pos_ >= text_.size()) error("unterminated escape");
                    d = text_[pos_];
                    if (d == 'n') d = '\n';
                }
                s.push_back(d);
                advance();
            }
            out = Sexpr::string(std::move(s));
        } else {
            std::string s;
            while (pos_ < text_.size()) {
                char d = text_[pos_];
                if (std::isspace(static_cast<unsigned char>(d)) || d == '(' || d == ')' || d == '"' || d == ';') break;
                s.push_back(d);
                advance();
            }
            out = Sexpr::symbol(std::move(s));
        }
        out.line = line;
        out.column = column;
        return out;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

[[noreturn]] void fail(const Sexpr& at, const std::string& msg) {
    throw ParseError(ParseError::Kind::syntax, at.line, at.column, msg);
}

std::string identifier(const Sexpr& s, const char* what) {
    if (s.kind != Sexpr::Kind::symbol || !is_identifier(s.text)) {
        fail(s, std::string("expected ") + what + " identifier");
    }
    return s.text;
}

// Embedded formulas report errors at the string literal's position.
Formula formula_of(const Sexpr& s) {
    if (s.kind != Sexpr::Kind::string) fail(s, "expected a quoted formula");
    try {
        return parse(s.text);
    } catch (const ParseError& e) {
        throw ParseError(e.kind(), s.line, s.column, "in formula \"" + s.text + "\": " + e.message());
    }
}

Term term_of(const Sexpr& s) {
    if (s.kind == Sexpr::Kind::symbol && is_identifier(s.text)) return Term::variable(s.text);
    if (s.kind != Sexpr::Kind::string) fail(s, "expected a quoted term");
    try {
        return parse_term(s.text);
    } catch (const ParseError& e) {
        throw ParseError(e.kind(), s.line, s.column, "in term \"" + s.text + "\": " + e.message());
    }
}

ProofTerm to_proof(const Sexpr& s) {
    if (s.kind != Sexpr::Kind::list || s.items.empty() || s.items[0].kind != Sexpr::Kind::symbol) {
        fail(s, "expected a proof term (constructor ...)");
    }
    const std::string& head = s.items[0].text;
    const auto& a = s.items;
    auto arity = [&](std::size_t n) {
        if (a.size() != n + 1) {
            fail(s, "'" + head + "' takes " + std::to_string(n) + " arguments, got " +
                        std::to_string(a.size() - 1));
        }
    };
    if (head == "hyp") {
        arity(1);
        return ProofTerm::hyp(identifier(a[1], "label"));
    }
    if (head == "lam") {
        arity(3);
        return ProofTerm::abst(identifier(a[1], "label"), formula_of(a[2]), to_proof(a[3]));
    }
    if (head == "app") {
        arity(2);
        return ProofTerm::apply(to_proof(a[1]), to_proof(a[2]));
    }
    if (head == "pair") {
        arity(2);
        return ProofTerm::pair(to_proof(a[1]), to_proof(a[2]));
    }
    if (head == "fst") {
        arity(1);
        return ProofTerm::proj_l(to_proof(a[1]));
    }
    if (head == "snd") {
        arity(1);
        return ProofTerm::proj_r(to_proof(a[1]));
    }
    if (head == "inl") {
        arity(2);
        return ProofTerm::inj_l(to_proof(a[1]), formula_of(a[2]));
    }
    if (head == "inr") {
        arity(2);
        return ProofTerm::inj_r(formula_of(a[1]), to_proof(a[2]));
    }
    if (head == "case") {
        arity(5);
        return ProofTerm::cases(to_proof(a[1]), identifier(a[2], "label"), to_proof(a[3]),
                                identifier(a[4], "label"), to_proof(a[5]));
    }
    if (head == "gen") {
        arity(2);
        return ProofTerm::gen(identifier(a[1], "variable"), to_proof(a[2]));
    }
    if (head == "inst") {
        arity(2);
        return ProofTerm::inst(to_proof(a[1]), term_of(a[2]));
    }
    if (head == "wit") {
        arity(3);
        return ProofTerm::witness(term_of(a[1]), to_proof(a[2]), formula_of(a[3]));
    }
    if (head == "unpack") {
        arity(4);
        return ProofTerm::unpack(to_proof(a[1]), identifier(a[2], "variable"),
                                 identifier(a[3], "label"), to_proof(a[4]));
    }
    if (head == "efq") {
        arity(2);
        return ProofTerm::ex_falso(to_proof(a[1]), formula_of(a[2]));
    }
    if (head == "dne") {
        arity(1);
        return ProofTerm::dne(to_proof(a[1]));
    }
    fail(a[0], "unknown proof constructor '" + head + "'");
}

ProofFile to_file(const std::vector<Sexpr>& forms) {
    if (forms.size() != 2) {
        if (forms.empty()) throw ParseError(ParseError::Kind::syntax, 1, 1, "empty proof file");
        fail(forms.size() > 2 ? forms[2] : forms[0],
             "a proof file holds exactly a (sequent ...) header and one term");
    }
    const Sexpr& h = forms[0];
    if (h.kind != Sexpr::Kind::list || h.items.size() < 3 || h.items[0].kind != Sexpr::Kind::symbol ||
        h.items[0].text != "sequent") {
        fail(h, "expected header (sequent (hyp label \"formula\")... \"conclusion\" logic)");
    }
    Sequent sequent{{}, Formula::bottom()};
    for (std::size_t i = 1; i + 2 < h.items.size(); ++i) {
        const Sexpr& hyp = h.items[i];
        if (hyp.kind != Sexpr::Kind::list || hyp.items.size() != 3 ||
            hyp.items[0].kind != Sexpr::Kind::symbol || hyp.items[0].text != "hyp") {
            fail(hyp, "expected (hyp label \"formula\")");
        }
        std::string label = identifier(hyp.items[1], "label");
        if (sequent.find(label)) fail(hyp.items[1], "duplicate hypothesis label '" + label + "'");
        sequent.hypotheses.push_back({label, formula_of(hyp.items[2])});
    }
    sequent.conclusion = formula_of(h.items[h.items.size() - 2]);
    const Sexpr& logic = h.items.back();
    if (logic.kind != Sexpr::Kind::symbol) fail(logic, "expected logic ml, il or cl");
    LogicId id;
    try {
        id = parse_logic(logic.text);
    } catch (const ContractViolation&) {
        fail(logic, "expected logic ml, il or cl, got '" + logic.text + "'");
    }
    return ProofFile{std::move(sequent), id, to_proof(forms[1])};
}

// ------------------------------------------------------------- writer

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

Sexpr str(const Formula& f) { return Sexpr::string(render(f)); }

Sexpr to_sexpr(const ProofTerm& t) {
    auto sym = Sexpr::symbol;
    std::vector<Sexpr> items{sym(std::string(to_string(t.rule())))};
    auto kid = [&](std::size_t i) { items.push_back(to_sexpr(t.child(i))); };
    switch (t.rule()) {
        case Rule::hyp: items.push_back(sym(t.label())); break;
        case Rule::abst:
            items.push_back(sym(t.label()));
            items.push_back(str(t.formula()));
            kid(0);
            break;
        case Rule::apply:
        case Rule::pair:
            kid(0);
            kid(1);
            break;
        case Rule::proj_l:
        case Rule::proj_r:
        case Rule::dne:
            kid(0);
            break;
        case Rule::inj_l:
            kid(0);
            items.push_back(str(t.formula()));
            break;
        case Rule::inj_r:
            items.push_back(str(t.formula()));
            kid(0);
            break;
        case Rule::cases:
            kid(0);
            items.push_back(sym(t.label()));
            kid(1);
            items.push_back(sym(t.label_r()));
            kid(2);
            break;
        case Rule::gen:
            items.push_back(sym(t.variable()));
            kid(0);
            break;
        case Rule::inst:
            kid(0);
            items.push_back(Sexpr::string(render(t.term())));
            break;
        case Rule::witness:
            items.push_back(Sexpr::string(render(t.term())));
            kid(0);
            items.push_back(str(t.formula()));
            break;
        case Rule::unpack:
            kid(0);
            items.push_back(sym(t.variable()));
            items.push_back(sym(t.label()));
            kid(1);
            break;
        case Rule::ex_falso:
            kid(0);
            items.push_back(str(t.formula()));
            break;
    }
    return Sexpr::list(std::move(items));
}

std::string flat(const Sexpr& s) {
    switch (s.kind) {
        case Sexpr::Kind::symbol: return s.text;
        case Sexpr::Kind::string: return quote(s.text);
        case Sexpr::Kind::list: break;
    }
    std::string out = "(";
    for (std::size_t i = 0; i < s.items.size(); ++i) {
        if (i) out += ' ';
        out += flat(s.items[i]);
    }
    return out + ")";
}

constexpr std::size_t kLineWidth = 80;

void pretty(const Sexpr& s, std::size_t indent, std::string& out) {
    std::string f = flat(s);
    if (s.kind != Sexpr::Kind::list || f.size() + indent <= kLineWidth) {
        out += f;
        return;
    }
    // head and leading non-list arguments stay on the first line
    out += '(';
    std::size_t i = 0;
    for (; i < s.items.size() && s.items[i].kind != Sexpr::Kind::list; ++i) {
        if (i) out += ' ';
        out += flat(s.items[i]);
    }
    for (; i < s.items.size(); ++i) {
        out += '\n';
        out.append(indent + 2, ' ');
        pretty(s.items[i], indent + 2, out);
    }
    out += ')';
}

}  // namespace

ProofFile read_proof_file(std::string_view text) { return to_file(Reader(text).read_all()); }

ProofTerm read_proof_term(std::string_view text) {
    auto forms = Reader(text).read_all();
    if (forms.size() != 1) {
        throw ParseError(ParseError::Kind::syntax, 1, 1, "expected exactly one proof term");
    }
    return to_proof(forms[0]);
}

std::string write_proof_term(const ProofTerm& proof) {
    std::string out;
    pretty(to_sexpr(proof), 0, out);
    return out;
}

std::string write_proof_file(const ProofFile& file) {
    std::vector<Sexpr> header{Sexpr::symbol("sequent")};
    for (const auto& h : file.sequent.hypotheses) {
        header.push_back(Sexpr::list({Sexpr::symbol("hyp"), Sexpr::symbol(h.label), str(h.formula)}));
    }
    header.push_back(str(file.sequent.conclusion));
    header.push_back(Sexpr::symbol(std::string(to_string(file.logic))));
    std::string out;
    pretty(Sexpr::list(std::move(header)), 0, out);
    out += '\n';
    out += write_proof_term(file.proof);
    out += '\n';
    return out;
}

}  // namespace kf

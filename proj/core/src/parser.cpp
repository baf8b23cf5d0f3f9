#include <metaopt/parser.hpp>

#include <cctype>
#include <charconv>
#include <sstream>

namespace metaopt {
namespace {

enum class Tok : std::uint8_t {
    ident,
    integer,
    if_,       // :-
    dot,
    comma,
    bar,
    lbrace,
    rbrace,
    lbrack,
    rbrack,
    lparen,
    rparen,
    equals,
    at,
    sum,       // #sum
    minimize,  // #minimize
    end,
};

struct Token {
    Tok kind = Tok::end;
    std::string text;
    Weight value = 0;
    SourceSpan span;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_space();
        Token t;
        t.span = {line_, column_};
        if (pos_ >= text_.size()) {
            t.kind = Tok::end;
            return t;
        }
        const char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                advance();
            }
            t.text = std::string(text_.substr(start, pos_ - start));
            if (!(c >= 'a' && c <= 'z')) {
                throw ParseError(t.span, "non-ground input: variable-like token '" + t.text + "'");
            }
            t.kind = Tok::ident;
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '-' && pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
            const std::size_t start = pos_;
            advance();
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                advance();
            }
            t.text = std::string(text_.substr(start, pos_ - start));
            const auto* first = t.text.data();
            const auto* last = first + t.text.size();
            auto [ptr, ec] = std::from_chars(first, last, t.value);
            if (ec != std::errc{} || ptr != last) {
                throw ParseError(t.span, "integer out of range '" + t.text + "'");
            }
            t.kind = Tok::integer;
            return t;
        }
        if (c == ':' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
            advance();
            advance();
            t.kind = Tok::if_;
            t.text = ":-";
            return t;
        }
        if (c == '#') {
            const std::size_t start = pos_;
            advance();
            while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
                advance();
            }
            t.text = std::string(text_.substr(start, pos_ - start));
            if (t.text == "#sum") {
                t.kind = Tok::sum;
            } else if (t.text == "#minimize") {
                t.kind = Tok::minimize;
            } else {
                throw ParseError(t.span, "unknown directive '" + t.text + "'");
            }
            return t;
        }
        advance();
        t.text = std::string(1, c);
        switch (c) {
            case '.': t.kind = Tok::dot; break;
            case ',': t.kind = Tok::comma; break;
            case '|': t.kind = Tok::bar; break;
            case '{': t.kind = Tok::lbrace; break;
            case '}': t.kind = Tok::rbrace; break;
            case '[': t.kind = Tok::lbrack; break;
            case ']': t.kind = Tok::rbrack; break;
            case '(': t.kind = Tok::lparen; break;
            case ')': t.kind = Tok::rparen; break;
            case '=': t.kind = Tok::equals; break;
            case '@': t.kind = Tok::at; break;
            default: throw ParseError(t.span, std::string("unexpected character '") + c + "'");
        }
        return t;
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_space() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') {
                    advance();
                }
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

const char* describe(Tok k) {
    switch (k) {
        case Tok::ident: return "identifier";
        case Tok::integer: return "integer";
        case Tok::if_: return "':-'";
        case Tok::dot: return "'.'";
        case Tok::comma: return "','";
        case Tok::bar: return "'|'";
        case Tok::lbrace: return "'{'";
        case Tok::rbrace: return "'}'";
        case Tok::lbrack: return "'['";
        case Tok::rbrack: return "']'";
        case Tok::lparen: return "'('";
        case Tok::rparen: return "')'";
        case Tok::equals: return "'='";
        case Tok::at: return "'@'";
        case Tok::sum: return "'#sum'";
        case Tok::minimize: return "'#minimize'";
        case Tok::end: return "end of input";
    }
    return "token";
}

class TokenStream {
public:
    explicit TokenStream(std::string_view text) : lexer_(text) { current_ = lexer_.next(); }

    [[nodiscard]] const Token& peek() const noexcept { return current_; }
    [[nodiscard]] bool at(Tok k) const noexcept { return current_.kind == k; }

    Token take() {
        Token t = std::move(current_);
        current_ = lexer_.next();
        return t;
    }

    Token expect(Tok k) {
        if (!at(k)) {
            fail(std::string("expected ") + describe(k) + ", found " + found());
        }
        return take();
    }

    bool accept(Tok k) {
        if (at(k)) {
            take();
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(current_.span, message); }

    [[nodiscard]] std::string found() const {
        if (current_.kind == Tok::end) {
            return describe(Tok::end);
        }
        return "'" + current_.text + "'";
    }

private:
    Lexer lexer_;
    Token current_;
};

class ProgramParser {
public:
    explicit ProgramParser(std::string_view text) : ts_(text) {}

    Program parse() {
        Program p;
        bool have_minimize = false;
        while (!ts_.at(Tok::end)) {
            if (ts_.at(Tok::minimize)) {
                const SourceSpan span = ts_.peek().span;
                if (have_minimize) {
                    throw ParseError(span, "duplicate #minimize statement");
                }
                have_minimize = true;
                p.minimize = parse_minimize();
            } else {
                p.rules.push_back(parse_rule());
            }
        }
        return p;
    }

private:
    bool at_sum_start() const {
        return ts_.at(Tok::integer) || ts_.at(Tok::lbrace) || ts_.at(Tok::sum);
    }

    Atom parse_atom() {
        const Token t = ts_.expect(Tok::ident);
        if (t.text == "not") {
            throw ParseError(t.span, "'not' cannot be used as an atom");
        }
        return Atom(t.text);
    }

    // Consumes an optional `not`; returns whether it was present.
    bool parse_naf() {
        if (ts_.at(Tok::ident) && ts_.peek().text == "not") {
            ts_.take();
            return true;
        }
        return false;
    }

    SumConstraint parse_sum() {
        SumConstraint s;
        if (ts_.at(Tok::integer)) {
            s.lower = ts_.take().value;
        }
        if (ts_.accept(Tok::sum)) {
            ts_.expect(Tok::lbrack);
            if (!ts_.at(Tok::rbrack)) {
                do {
                    const bool neg = parse_naf();
                    Atom a = parse_atom();
                    Weight w = 1;
                    if (ts_.accept(Tok::equals)) {
                        const Token wt = ts_.expect(Tok::integer);
                        if (wt.value < 0) {
                            throw ParseError(wt.span, "negative weight in #sum constraint");
                        }
                        w = wt.value;
                    }
                    s.elements.push_back({neg ? Literal::neg(std::move(a)) : Literal::pos(std::move(a)), w});
                } while (ts_.accept(Tok::comma));
            }
            ts_.expect(Tok::rbrack);
        } else if (ts_.accept(Tok::lbrace)) {
            if (!ts_.at(Tok::rbrace)) {
                do {
                    const bool neg = parse_naf();
                    Atom a = parse_atom();
                    s.elements.push_back({neg ? Literal::neg(std::move(a)) : Literal::pos(std::move(a)), 1});
                } while (ts_.accept(Tok::comma));
            }
            ts_.expect(Tok::rbrace);
        } else {
            ts_.fail("expected '#sum' or '{', found " + ts_.found());
        }
        if (ts_.at(Tok::integer)) {
            s.upper = ts_.take().value;
        }
        return s;
    }

    Head parse_head() {
        if (at_sum_start()) {
            return parse_sum();
        }
        Disjunction d;
        d.atoms.push_back(parse_atom());
        while (ts_.accept(Tok::bar)) {
            d.atoms.push_back(parse_atom());
        }
        return d;
    }

    BodyLiteral parse_body_literal() {
        const Polarity polarity = parse_naf() ? Polarity::negative : Polarity::positive;
        if (at_sum_start()) {
            return {polarity, parse_sum()};
        }
        if (!ts_.at(Tok::ident)) {
            ts_.fail("expected body literal, found " + ts_.found());
        }
        return {polarity, parse_atom()};
    }

    Rule parse_rule() {
        Rule r{Disjunction{}, {}};
        if (!ts_.at(Tok::if_)) {
            r.head = parse_head();
        }
        if (ts_.accept(Tok::if_)) {
            if (!ts_.at(Tok::dot)) {
                do {
                    r.body.push_back(parse_body_literal());
                } while (ts_.accept(Tok::comma));
            }
        }
        ts_.expect(Tok::dot);
        return r;
    }

    MinimizeStatement parse_minimize() {
        ts_.expect(Tok::minimize);
        ts_.expect(Tok::lbrack);
        MinimizeStatement m;
        if (!ts_.at(Tok::rbrack)) {
            do {
                const bool neg = parse_naf();
                Atom a = parse_atom();
                MinimizeEntry e{neg ? Literal::neg(std::move(a)) : Literal::pos(std::move(a)), 1, 1};
                if (ts_.accept(Tok::equals)) {
                    e.weight = ts_.expect(Tok::integer).value;
                }
                if (ts_.accept(Tok::at)) {
                    e.level = ts_.expect(Tok::integer).value;
                }
                m.entries.push_back(std::move(e));
            } while (ts_.accept(Tok::comma));
        }
        ts_.expect(Tok::rbrack);
        ts_.expect(Tok::dot);
        return m;
    }

    TokenStream ts_;
};

class CriteriaParser {
public:
    explicit CriteriaParser(std::string_view text) : ts_(text) {}

    CriteriaSet parse() {
        CriteriaSet c;
        while (!ts_.at(Tok::end)) {
            const Token pred = ts_.expect(Tok::ident);
            if (pred.text == "optimize") {
                ts_.expect(Tok::lparen);
                const Level level = ts_.expect(Tok::integer).value;
                ts_.expect(Tok::comma);
                const Weight weight = ts_.expect(Tok::integer).value;
                ts_.expect(Tok::comma);
                const Token name = ts_.expect(Tok::ident);
                const auto crit = criterion_from_string(name.text);
                if (!crit) {
                    throw ParseError(name.span, "unknown criterion '" + name.text + "'");
                }
                ts_.expect(Tok::rparen);
                ts_.expect(Tok::dot);
                try {
                    c.add({level, weight}, *crit);
                } catch (const ContractViolation& e) {
                    throw ParseError(pred.span, e.what());
                }
            } else if (pred.text == "prefer") {
                ts_.expect(Tok::lparen);
                Literal first = parse_literal_term();
                ts_.expect(Tok::comma);
                Literal second = parse_literal_term();
                ts_.expect(Tok::rparen);
                ts_.expect(Tok::dot);
                c.prefer.emplace(std::move(first), std::move(second));
            } else {
                throw ParseError(pred.span, "unknown criteria fact '" + pred.text + "'");
            }
        }
        return c;
    }

private:
    Literal parse_literal_term() {
        const Token sign = ts_.expect(Tok::ident);
        if (sign.text != "pos" && sign.text != "neg") {
            throw ParseError(sign.span, "malformed literal term: expected pos(...) or neg(...)");
        }
        ts_.expect(Tok::lparen);
        const Token fun = ts_.expect(Tok::ident);
        if (fun.text != "atom") {
            throw ParseError(fun.span, "malformed literal term: expected atom(...)");
        }
        ts_.expect(Tok::lparen);
        const Token name = ts_.expect(Tok::ident);
        ts_.expect(Tok::rparen);
        ts_.expect(Tok::rparen);
        Atom a(name.text);
        return sign.text == "pos" ? Literal::pos(std::move(a)) : Literal::neg(std::move(a));
    }

    TokenStream ts_;
};

std::string render_weighted(const WeightedLiteral& wl) {
    return to_string(wl.literal) + "=" + std::to_string(wl.weight);
}

} // namespace

Program parse_program(std::string_view text) { return ProgramParser(text).parse(); }

CriteriaSet parse_criteria(std::string_view text) { return CriteriaParser(text).parse(); }

std::string render(const SumConstraint& s) {
    std::string out;
    if (s.lower) {
        out += std::to_string(*s.lower) + " ";
    }
    out += "#sum[";
    for (std::size_t i = 0; i < s.elements.size(); ++i) {
        if (i != 0) {
            out += ",";
        }
        out += render_weighted(s.elements[i]);
    }
    out += "]";
    if (s.upper) {
        out += " " + std::to_string(*s.upper);
    }
    return out;
}

std::string render(const BodyLiteral& b) {
    std::string out = b.negative() ? "not " : "";
    if (const auto* a = std::get_if<Atom>(&b.element)) {
        out += a->name();
    } else {
        out += render(std::get<SumConstraint>(b.element));
    }
    return out;
}

std::string render(const Rule& r) {
    std::string out;
    if (const auto* d = std::get_if<Disjunction>(&r.head)) {
        for (std::size_t i = 0; i < d->atoms.size(); ++i) {
            if (i != 0) {
                out += " | ";
            }
            out += d->atoms[i].name();
        }
    } else {
        out += render(std::get<SumConstraint>(r.head));
    }
    if (!r.body.empty() || r.is_constraint()) {
        out += out.empty() ? ":-" : " :-";
        for (std::size_t i = 0; i < r.body.size(); ++i) {
            out += i == 0 ? " " : ", ";
            out += render(r.body[i]);
        }
    }
    out += ".";
    return out;
}

std::string render(const MinimizeStatement& m) {
    std::string out = "#minimize[";
    for (std::size_t i = 0; i < m.entries.size(); ++i) {
        const auto& e = m.entries[i];
        if (i != 0) {
            out += ",";
        }
        out += to_string(e.literal) + "=" + std::to_string(e.weight) + "@" + std::to_string(e.level);
    }
    out += "].";
    return out;
}

std::string render_program(const Program& p) {
    std::string out;
    for (const auto& r : p.rules) {
        out += render(r);
        out += '\n';
    }
    if (!p.minimize.empty()) {
        out += render(p.minimize);
        out += '\n';
    }
    return out;
}

std::string literal_term(const Literal& l) {
    return std::string(l.negative() ? "neg" : "pos") + "(atom(" + l.atom.name() + "))";
}

std::string render_criteria(const CriteriaSet& c) {
    std::string out;
    for (const auto& [key, crit] : c.relations) {
        out += "optimize(" + std::to_string(key.level) + "," + std::to_string(key.weight) + "," +
               std::string(to_string(crit)) + ").\n";
    }
    for (const auto& [a, b] : c.prefer) {
        out += "prefer(" + literal_term(a) + "," + literal_term(b) + ").\n";
    }
    return out;
}

} // namespace metaopt

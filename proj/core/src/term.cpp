#include <metaopt/term.hpp>

#include <cctype>
#include <charconv>

namespace metaopt {

Term Term::integer(Weight v) {
    Term t;
    t.kind = Kind::integer;
    t.value = v;
    return t;
}

Term Term::symbol(std::string name) {
    Term t;
    t.kind = Kind::symbol;
    t.name = std::move(name);
    return t;
}

Term Term::fn(std::string name, std::vector<Term> args) {
    Term t;
    t.kind = args.empty() ? Kind::symbol : Kind::compound;
    t.name = std::move(name);
    t.args = std::move(args);
    return t;
}

bool Term::is(std::string_view functor, std::size_t arity) const noexcept {
    return kind != Kind::integer && name == functor && args.size() == arity;
}

std::string to_string(const Term& t) {
    if (t.kind == Term::Kind::integer) {
        return std::to_string(t.value);
    }
    std::string out = t.name;
    if (!t.args.empty()) {
        out += '(';
        for (std::size_t i = 0; i < t.args.size(); ++i) {
            if (i != 0) {
                out += ',';
            }
            out += to_string(t.args[i]);
        }
        out += ')';
    }
    return out;
}

namespace {

class FactReader {
public:
    explicit FactReader(std::string_view text) : text_(text) {}

    std::vector<Term> read() {
        std::vector<Term> out;
        skip();
        while (pos_ < text_.size()) {
            Term t = term();
            if (t.kind == Term::Kind::integer) {
                fail("a fact cannot be an integer");
            }
            expect('.');
            out.push_back(std::move(t));
            skip();
        }
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError({line_, column_}, message); }

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
            if (text_[pos_] == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') {
                    advance();
                }
            } else if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
                advance();
            } else {
                break;
            }
        }
    }

    void expect(char c) {
        skip();
        if (pos_ >= text_.size() || text_[pos_] != c) {
            fail(std::string("expected '") + c + "'");
        }
        advance();
    }

    Term term() {
        skip();
        if (pos_ >= text_.size()) {
            fail("unexpected end of input");
        }
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
            const std::size_t start = pos_;
            advance();
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                advance();
            }
            const auto digits = text_.substr(start, pos_ - start);
            Weight v = 0;
            auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
            if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
                fail("malformed integer '" + std::string(digits) + "'");
            }
            return Term::integer(v);
        }
        if (!(c >= 'a' && c <= 'z')) {
            fail(std::string("unexpected character '") + c + "'");
        }
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            advance();
        }
        std::string name(text_.substr(start, pos_ - start));
        skip();
        std::vector<Term> args;
        if (pos_ < text_.size() && text_[pos_] == '(') {
            advance();
            do {
                args.push_back(term());
                skip();
            } while (pos_ < text_.size() && text_[pos_] == ',' && (advance(), true));
            expect(')');
        }
        return Term::fn(std::move(name), std::move(args));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

} // namespace

std::vector<Term> parse_facts(std::string_view text) { return FactReader(text).read(); }

std::string render_facts(const std::vector<Term>& facts) {
    std::string out;
    for (const auto& f : facts) {
        out += to_string(f);
        out += ".\n";
    }
    return out;
}

} // namespace metaopt

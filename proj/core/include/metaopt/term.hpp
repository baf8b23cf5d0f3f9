#pragma once
// Ground terms and the one-fact-per-line text format used for reified programs.

#include <metaopt/core.hpp>
#include <metaopt/error.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace metaopt {

struct Term {
    enum class Kind : std::uint8_t { integer, symbol, compound };

    Kind kind = Kind::symbol;
    Weight value = 0;
    std::string name;
    std::vector<Term> args;

    [[nodiscard]] static Term integer(Weight v);
    [[nodiscard]] static Term symbol(std::string name);
    [[nodiscard]] static Term fn(std::string name, std::vector<Term> args);

    /// Compound (or, for arity 0, symbol) with the given name and arity.
    [[nodiscard]] bool is(std::string_view functor, std::size_t arity) const noexcept;

    friend bool operator==(const Term&, const Term&) = default;
    friend std::strong_ordering operator<=>(const Term&, const Term&) = default;
};

/// `f(a,1)`, no whitespace.
[[nodiscard]] std::string to_string(const Term& t);

/// Facts terminated by `.`; `%` comments. Throws ParseError.
[[nodiscard]] std::vector<Term> parse_facts(std::string_view text);
/// One fact per line.
[[nodiscard]] std::string render_facts(const std::vector<Term>& facts);

} // namespace metaopt

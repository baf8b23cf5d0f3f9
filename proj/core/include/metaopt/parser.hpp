#pragma once
// Concrete text syntax for ground programs and optimization criteria.
//
//   rule       ::= [head] [":-" body] "."
//   head       ::= atom {"|" atom} | sum
//   body       ::= [literal {"," literal}]
//   literal    ::= ["not"] (atom | sum)
//   sum        ::= [int] ("#sum" "[" [wlit {"," wlit}] "]" | "{" [lit {"," lit}] "}") [int]
//   wlit       ::= ["not"] atom ["=" int]
//   minimize   ::= "#minimize" "[" [entry {"," entry}] "]" "."
//   entry      ::= ["not"] atom ["=" int] ["@" int]
//
// Comments run from `%` to the end of the line. `{a,b}` abbreviates `#sum[a=1,b=1]`.

#include <metaopt/core.hpp>
#include <metaopt/error.hpp>

#include <string>
#include <string_view>

namespace metaopt {

/// Throws ParseError on malformed or non-ground input.
[[nodiscard]] Program parse_program(std::string_view text);

/// Parses `optimize(J,W,card|incl|pref).` and `prefer(L1,L2).` facts where a literal is
/// `pos(atom(a))` or `neg(atom(a))`.
[[nodiscard]] CriteriaSet parse_criteria(std::string_view text);

[[nodiscard]] std::string render_program(const Program& p);
[[nodiscard]] std::string render(const Rule& r);
[[nodiscard]] std::string render(const SumConstraint& s);
[[nodiscard]] std::string render(const BodyLiteral& b);
[[nodiscard]] std::string render(const MinimizeStatement& m);
[[nodiscard]] std::string render_criteria(const CriteriaSet& c);
/// `pos(atom(a))` / `neg(atom(a))`
[[nodiscard]] std::string literal_term(const Literal& l);

} // namespace metaopt

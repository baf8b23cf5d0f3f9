#include <doctest.h>

#include "generators.hpp"
#include "support.hpp"

#include <metaopt/parser.hpp>

using namespace metaopt;
using testing::fixture_program;

namespace {

SumConstraint unit_sum(std::optional<Weight> lo, std::vector<Literal> lits, std::optional<Weight> hi) {
    SumConstraint s;
    s.lower = lo;
    s.upper = hi;
    for (auto& l : lits) {
        s.elements.push_back({std::move(l), 1});
    }
    return s;
}

Literal pos(const char* a) { return Literal::pos(Atom(a)); }
Literal neg(const char* a) { return Literal::neg(Atom(a)); }

SourceSpan error_span(std::string_view text) {
    try {
        (void)parse_program(text);
    } catch (const ParseError& e) {
        return e.span();
    }
    FAIL("no parse error");
    return {};
}

} // namespace

TEST_CASE("single fact") {
    const auto p = parse_program("a.");
    REQUIRE(p.rules.size() == 1);
    CHECK(p.rules[0].head == Head{Disjunction{{Atom("a")}}});
    CHECK(p.rules[0].body.empty());
    CHECK(p.minimize.empty());
}

TEST_CASE("rule with sum head and sum body") {
    const auto p = parse_program("1 {p, t} :- 1 {r, s, not t} 2.");
    REQUIRE(p.rules.size() == 1);
    const auto& r = p.rules[0];
    const auto& head = std::get<SumConstraint>(r.head);
    CHECK(head.lower == 1);
    CHECK_FALSE(head.upper.has_value());
    CHECK(head == unit_sum(1, {pos("p"), pos("t")}, std::nullopt));
    REQUIRE(r.body.size() == 1);
    CHECK_FALSE(r.body[0].negative());
    CHECK(std::get<SumConstraint>(r.body[0].element) == unit_sum(1, {pos("r"), pos("s"), neg("t")}, 2));
}

TEST_CASE("minimize statement of the running example") {
    const auto p = fixture_program("pi1.lp");
    CHECK(p.rules.size() == 3);
    REQUIRE(p.minimize.entries.size() == 4);
    const char* names[] = {"p", "q", "r", "s"};
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(p.minimize.entries[i].literal == pos(names[i]));
        CHECK(p.minimize.entries[i].weight == 1);
        CHECK(p.minimize.entries[i].level == 1);
    }
}

TEST_CASE("minimize defaults and negative weights") {
    const auto p = parse_program("#minimize[a, not b=3, c@2, d=-1@4].");
    REQUIRE(p.minimize.entries.size() == 4);
    CHECK(p.minimize.entries[0].weight == 1);
    CHECK(p.minimize.entries[0].level == 1);
    CHECK(p.minimize.entries[1].literal == neg("b"));
    CHECK(p.minimize.entries[1].weight == 3);
    CHECK(p.minimize.entries[2].level == 2);
    CHECK(p.minimize.entries[3].weight == -1);
    CHECK(p.minimize.entries[3].level == 4);
}

TEST_CASE("disjunctions, constraints and comments") {
    const auto p = parse_program("a | b.  % guess\n:- a, not b.\nc :- .\n");
    REQUIRE(p.rules.size() == 3);
    CHECK(p.rules[0].is_proper_disjunctive());
    CHECK(p.rules[1].is_constraint());
    CHECK(p.rules[1].body.size() == 2);
    CHECK(p.rules[2].is_fact());
    CHECK_FALSE(p.is_extended());
}

TEST_CASE("shorthand expansion law") {
    CHECK(parse_program("2 {a, not b} 3 :- 1 {c, d}.") ==
          parse_program("2 #sum[a=1, not b=1] 3 :- 1 #sum[c=1,d=1]."));
    CHECK(parse_program(":- not {a}.") == parse_program(":- not #sum[a=1]."));
}

TEST_CASE("parse errors carry positions") {
    CHECK(error_span("a :- B.") == SourceSpan{1, 6});
    CHECK(error_span("a.\nb :- #sum[c=-1].") == SourceSpan{2, 13});
    CHECK(error_span("a :- b") == SourceSpan{1, 7});
    CHECK(error_span("#minimize[a].\n#minimize[b].") == SourceSpan{2, 1});
    CHECK(error_span("a :- #count{b}.") == SourceSpan{1, 6});
    CHECK(error_span("a :- not.") == SourceSpan{1, 9});
    CHECK_THROWS_WITH_AS((void)parse_program("a :- X."), doctest::Contains("non-ground"), ParseError);
}

TEST_CASE("parse error spans stay inside the input") {
    const char* bad[] = {"a", "a :-", "{", "1 #sum[a=", ":- 1 {a} b.", "a | .", "#minimize[a=1@].", "a.b",
                         "a :- not not b.", "a(b).", "a :- _x."};
    for (const char* text : bad) {
        INFO(text);
        try {
            (void)parse_program(text);
            FAIL("accepted");
        } catch (const ParseError& e) {
            const std::string_view sv(text);
            const auto lines = static_cast<std::size_t>(std::count(sv.begin(), sv.end(), '\n')) + 1;
            CHECK(e.span().line >= 1);
            CHECK(e.span().line <= lines);
            CHECK(e.span().column >= 1);
            CHECK(e.span().column <= sv.size() + 1);
        }
    }
}

TEST_CASE("criteria facts") {
    const auto c = parse_criteria("optimize(1,1,incl).");
    CHECK(c.relations.size() == 1);
    CHECK(c.relations.at(GroupKey{1, 1}) == Criterion::incl);
    CHECK(c.prefer.empty());

    CHECK(parse_criteria("").empty());

    const auto d = parse_criteria("optimize(2,1,pref). prefer(pos(atom(a)),neg(atom(b))).");
    CHECK(d.relations.at(GroupKey{2, 1}) == Criterion::pref);
    REQUIRE(d.prefer.size() == 1);
    CHECK(*d.prefer.begin() == PreferencePair{pos("a"), neg("b")});

    CHECK_THROWS_AS((void)parse_criteria("optimize(1,1,best)."), ParseError);
    CHECK_THROWS_AS((void)parse_criteria("optimize(1,1,card). optimize(1,1,incl)."), ParseError);
    CHECK_NOTHROW((void)parse_criteria("optimize(1,1,card). optimize(1,1,card)."));
    CHECK_THROWS_AS((void)parse_criteria("prefer(atom(a),pos(atom(b)))."), ParseError);
    CHECK_THROWS_AS((void)parse_criteria("prefer(pos(a),pos(atom(b)))."), ParseError);
    CHECK_THROWS_AS((void)parse_criteria("minimize(1,1)."), ParseError);
}

TEST_CASE("criteria render round trip") {
    const auto c = parse_criteria("optimize(-1,3,card). optimize(2,1,pref). prefer(neg(atom(x)),pos(atom(y))).");
    CHECK(parse_criteria(render_criteria(c)) == c);
}

TEST_CASE("render") {
    CHECK(render_program(Program{}).empty());
    CHECK(render_program(parse_program("a.")) == "a.\n");
    CHECK(render_program(parse_program(":- a.")) == ":- a.\n");
    CHECK(render_program(parse_program(":- .")) == ":-.\n");
    CHECK(render(parse_program("{a} 1 :- not 2 {b}.").rules[0]) == "#sum[a=1] 1 :- not 2 #sum[b=1].");
    const auto pi1 = fixture_program("pi1.lp");
    CHECK(parse_program(render_program(pi1)) == pi1);
    const auto pi0 = fixture_program("pi0.lp");
    CHECK(parse_program(render_program(pi0)) == pi0);
}

TEST_CASE("property: parse after render is the identity") {
    testing::ProgramGenerator gen(7);
    testing::ProgramShape shape;
    shape.disjunctive = true;
    shape.minimize = true;
    shape.levels = 3;
    shape.weights = 3;
    for (int i = 0; i < 300; ++i) {
        const auto p = gen.program(shape);
        const auto text = render_program(p);
        INFO(text);
        CHECK(parse_program(text) == p);
    }
}

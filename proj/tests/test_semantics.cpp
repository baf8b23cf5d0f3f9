#include <doctest.h>

#include "generators.hpp"
#include "support.hpp"

#include <metaopt/semantics.hpp>

using namespace metaopt;
using testing::fixture_program;
using testing::interp;

namespace {

Program positive(const char* text) { return parse_program(text); }

} // namespace

TEST_CASE("satisfaction of sums, disjunctions and rules") {
    const auto body = std::get<SumConstraint>(parse_program(":- 1 {r, s, not t} 2.").rules[0].body[0].element);
    CHECK(satisfies(interp("s,t"), body));
    CHECK_FALSE(satisfies(interp("r,s"), body)); // r, s and not t give 3 > 2
    CHECK_FALSE(satisfies(interp("t"), body));
    CHECK_FALSE(satisfies(Interpretation{}, Disjunction{}));
    const auto pi0 = fixture_program("pi0.lp");
    CHECK(satisfies(interp("p,q"), pi0.rules[1]));
    CHECK_FALSE(satisfies(interp("p,q,r"), pi0.rules[1]));
    CHECK(satisfies(interp("a"), Literal::pos(Atom("a"))));
    CHECK(satisfies(interp("b"), Literal::neg(Atom("a"))));
}

TEST_CASE("models of the running example") {
    const auto pi0 = fixture_program("pi0.lp");
    CHECK(is_model(interp("p,r"), pi0));
    CHECK(is_model(interp("r,t"), pi0));
    CHECK_FALSE(is_model(Interpretation{}, pi0));
}

TEST_CASE("reduct of the running example") {
    const auto pi0 = fixture_program("pi0.lp");
    CHECK(reduct(pi0, interp("p,r")) == positive("p :- 0 #sum[r=1,s=1].  r :- 1 #sum[p=1,t=1]."));
    CHECK(reduct(pi0, interp("r,t")) == positive("t :- 1 #sum[r=1,s=1].  r :- 1 #sum[p=1,t=1]."));
    const auto fact = parse_program("a.");
    CHECK(reduct(fact, {}) == fact);
    CHECK(reduct(fact, interp("a")) == fact);
}

TEST_CASE("reduct keeps negative residual lower bounds") {
    const auto p = parse_program("a :- 1 #sum[not b=3, c=1].");
    CHECK(reduct(p, {}) == positive("a :- -2 #sum[c=1]."));
}

TEST_CASE("sum head without true atoms produces no reduct rule") {
    const auto p = parse_program("1 {a, b}.");
    CHECK(reduct(p, {}).rules.empty());
    CHECK_FALSE(is_model({}, p));
}

TEST_CASE("minimal models") {
    const auto pi0 = fixture_program("pi0.lp");
    CHECK(is_minimal_model(interp("p,r"), reduct(pi0, interp("p,r"))));
    CHECK_FALSE(is_minimal_model(interp("r,t"), reduct(pi0, interp("r,t"))));
    CHECK(is_minimal_model({}, Program{}));
    CHECK_FALSE(is_minimal_model(interp("a"), positive("a :- b.")));
    CHECK(is_minimal_model(interp("a"), positive("a | b.")));
    CHECK_FALSE(is_minimal_model(interp("a,b"), positive("a | b.")));
    CHECK_THROWS_AS((void)is_minimal_model({}, parse_program("a :- not b.")), ContractViolation);
    CHECK_THROWS_AS((void)is_minimal_model_exhaustive(interp("a,b,c"), positive("a | b | c."), 2), LimitExceeded);
}

TEST_CASE("answer sets") {
    const auto pi0 = fixture_program("pi0.lp");
    CHECK(is_answer_set(interp("p,q"), pi0));
    CHECK_FALSE(is_answer_set(interp("r,t"), pi0));
    CHECK(is_answer_set({}, Program{}));
    CHECK_FALSE(is_answer_set(interp("z"), Program{}));
}

TEST_CASE("enumeration") {
    CHECK(enumerate_answer_sets(fixture_program("pi0.lp")) ==
          testing::interps({"p,q", "p,r", "p,s", "p,s,t", "s,t"}));
    CHECK(enumerate_answer_sets(parse_program("a :- a.")) == testing::interps({""}));
    CHECK(enumerate_answer_sets(parse_program("a | b.")) == testing::interps({"a", "b"}));
    CHECK(enumerate_answer_sets(parse_program(":- not a.")).empty());
    EnumerationOptions two;
    two.limit = 2;
    CHECK(enumerate_answer_sets(fixture_program("pi0.lp"), two) == testing::interps({"p,q", "p,r"}));
    EnumerationOptions tiny;
    tiny.max_atoms = 4;
    CHECK_THROWS_AS((void)enumerate_answer_sets(fixture_program("pi0.lp"), tiny), LimitExceeded);
}

TEST_CASE("disjunctive programs need real minimality") {
    const auto p = parse_program("a | b. a :- b. b :- a. c :- a, b. a :- c. b :- c. c :- not c.");
    CHECK(enumerate_answer_sets(p) == testing::interps({"a,b,c"}));
    const auto q = parse_program("a | b. a :- b. b :- a.");
    CHECK(enumerate_answer_sets(q) == testing::interps({"a,b"}));
    const auto r = parse_program("a | b | c. :- a. d :- b. d :- c.");
    CHECK(enumerate_answer_sets(r) == testing::interps({"b,d", "c,d"}));
}

TEST_CASE("property: answer sets, models and reducts on random programs") {
    testing::ProgramGenerator gen(11);
    testing::ProgramShape shape;
    shape.disjunctive = true;
    for (int round = 0; round < 150; ++round) {
        shape.atoms = gen.uniform(1, 6);
        const auto p = gen.program(shape);
        INFO(render_program(p));
        const auto sets = enumerate_answer_sets(p);
        const auto universe = atoms(p);
        for (const auto& x : testing::all_interpretations(universe)) {
            const auto red = reduct(p, x);
            CHECK(is_positive(red));
            const bool model = is_model(x, p);
            const bool as = model && is_minimal_model_exhaustive(x, red);
            CHECK(as == is_answer_set(x, p));
            if (model) {
                CHECK(is_minimal_model(x, red) == is_minimal_model_exhaustive(x, red));
            }
            CHECK(as == std::binary_search(sets.begin(), sets.end(), x));
        }
        CHECK(std::is_sorted(sets.begin(), sets.end()));
        CHECK(std::adjacent_find(sets.begin(), sets.end()) == sets.end());
    }
}

TEST_CASE("property: fact programs have exactly their facts as answer set") {
    testing::ProgramGenerator gen(3);
    for (int round = 0; round < 50; ++round) {
        Program p;
        Interpretation facts;
        const int k = gen.uniform(0, 6);
        for (int i = 0; i < k; ++i) {
            auto a = gen.atom(8);
            facts.insert(a);
            p.rules.push_back({Disjunction{{a}}, {}});
        }
        CHECK(enumerate_answer_sets(p) == std::vector<Interpretation>{facts});
    }
}
